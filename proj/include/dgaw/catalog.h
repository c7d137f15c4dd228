#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgaw/ainf.h"
#include "dgaw/front.h"
#include "dgaw/homology.h"
#include "dgaw/presentation.h"
#include "dgaw/simplify.h"

namespace dgaw {

struct CatalogEntry {
    std::string name;
    std::string kind;  // ginzburg | cyclic | cellular | arc-spin
    std::string params;
    std::string provenance;  // which worked computation the entry encodes
};

std::vector<CatalogEntry> catalog_entries();

// builds a catalog presentation by entry name, e.g. "ginzburg:2,2,2",
// "lambda_pqr:2,2,2", "lambda_r:3", "lambda_110", "ar:4"
DgaPresentation catalog_build(const std::string& name, Field f);

// the comparison map from the simplified cellular dga of Lambda_{p,q,2}
// onto the Ginzburg algebra, by sheet-pair decoding
DgaMorphism catalog_phi_pqr(const DgaPresentation& simplified, const DgaPresentation& ginz, int p,
                            int q, int r);

// comparison map for the simplified spin of the A_r chain
DgaMorphism catalog_phi_ar(const DgaPresentation& simplified, const DgaPresentation& ginz, int r);

struct RunReport {
    std::string pipeline;
    std::string field;
    std::string bounds;
    bool ok = false;
    std::vector<std::pair<std::string, std::string>> checks;  // name -> pass/fail/value
    double seconds = 0;
    std::string digest;  // digest of the produced canonical dumps

    std::string to_json() const;
};

std::string content_digest(const std::string& text);

// end-to-end verification pipelines (the acceptance surface)
RunReport verify_pipeline(const std::string& name, const std::string& golden_dir);

}  // namespace dgaw
