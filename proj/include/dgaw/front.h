#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgaw/presentation.h"

namespace dgaw {

struct SheetDecl {
    std::string name;       // global sheet label, matched by name across cells
    std::string component;  // link component owning the sheet
    int maslov = 0;
};

struct FrontCell {
    std::string id;  // species letter + number, e.g. "A7", "B20", "C3"
    int dim = 0;
    std::vector<SheetDecl> sheets;  // ordered by decreasing z in this cell's frame
    std::vector<std::pair<std::string, std::string>> crossings;  // incomparable sheet pairs

    // dim 1: endpoint 0-cells (may coincide for loops)
    std::string vminus, vplus;
    // dim 2: initial/terminal vertices and boundary words in traversal
    // order; exponent -1 runs against the 1-cell's own orientation
    std::string wminus, wplus;
    std::vector<std::pair<std::string, int>> gamma_plus;
    std::vector<std::pair<std::string, int>> gamma_minus;
};

struct FrontComplex {
    std::string name;
    std::vector<std::string> components;
    std::vector<FrontCell> cells;

    const FrontCell& cell(const std::string& id) const;
    void validate() const;
};

struct ArcFront {
    std::string name;
    std::vector<std::string> components;
    std::vector<FrontCell> cells;  // dims 0/1 only, ordered left to right
    std::string origin;            // id of the 0-cell on the spin axis
    std::optional<int> cone_k;     // cone joins origin sheets k,k+1 (1-based)

    const FrontCell& cell(const std::string& id) const;
    void validate() const;
};

// generator name for a sheet pair of a cell: species letter by dimension,
// 1-based positions, e.g. c7^{4,8}
std::string cell_gen_name(const FrontCell& c, int m, int n);

// Cellular dg algebra of a surface front. GF(2) only.
DgaPresentation cellular_dga(const FrontComplex& front, Field f);

// Cellular dg algebra of an arc front (0- and 1-cells only).
DgaPresentation arc_dga(const ArcFront& front, Field f);

struct ConeData {
    std::string cell;  // the origin 0-cell
    int k = 0;         // cone joins sheets k, k+1 of that cell (1-based)
};

// Suspension: doubles generators outside `relative` with degree-shifted
// partners and d^s(g-check) = D(d g); cone data switches D on the origin
// matrix from zero to the index-shift rule.
DgaPresentation suspend_dga(const DgaPresentation& pres, const std::vector<std::string>& relative,
                            const std::optional<ConeData>& cone = std::nullopt);

// builds the arc dga and suspends it relative to the origin cell
DgaPresentation front_spin(const ArcFront& arc, Field f);

// ---- builtin catalog fronts ----

ArcFront builtin_arc_Kr(int r);             // the A_r chain arc
ArcFront builtin_arc_trefoil();             // K_{1,1,0}, cone at the axis
FrontComplex builtin_front_pqr(int p, int q, int r);  // r = 2 supported

// JSON round trip per the front.json schema
std::string front_to_json(const FrontComplex& f);
FrontComplex front_from_json(const std::string& text);
std::string arc_to_json(const ArcFront& a);
ArcFront arc_from_json(const std::string& text);

}  // namespace dgaw
