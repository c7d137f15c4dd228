#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgaw/ainf.h"
#include "dgaw/presentation.h"

namespace dgaw {

struct BettiTable {
    // (cohomological degree, stratum) -> exact dimension
    std::map<std::pair<int, int>, int> strata;
    std::map<int, int> totals;  // per-degree totals within the window
    int bound = 0;              // word-length cap or Adams magnitude cap
    int deg_lo = 0, deg_hi = 0;
    bool exact_strata = false;  // strata exact (homogeneous differential)
    std::string stratum_kind;   // "length" or "adams"

    std::string to_tsv() const;
    static BettiTable from_tsv(const std::string& text);
};

// cohomology of the quotient by the ideal of words longer than max_len;
// requires a word-length non-decreasing differential
BettiTable truncated_cohomology(const DgaPresentation& pres, int max_len, int deg_lo, int deg_hi);

// cohomology per (degree, Adams) stratum of an Adams-graded semi-free
// presentation, within |adams| <= adams_bound
BettiTable bigraded_cohomology(const DgaPresentation& pres, int adams_bound, int deg_lo, int deg_hi);

struct H0Certificate {
    NCPoly element;
    std::optional<NCPoly> primitive;  // x with dx = element, when found
};

// bounded primitive search for closed degree-0 elements
std::vector<H0Certificate> h0_relations_check(const DgaPresentation& pres,
                                              const std::vector<NCPoly>& elements, int bound);

// x with dx = elt, searched over endpoint-matching words of one degree
// lower and length <= bound; nullopt when no primitive exists there
std::optional<NCPoly> solve_primitive(const DgaPresentation& pres, const NCPoly& elt, int bound);

struct BarDual {
    DgaPresentation pres;  // semi-free model of E(A) on dual generators
    int adams_bound = 0;   // truncation used by downstream computations
};

// bigraded Koszul dual E(A) = (BA)^# of a finite augmented A-infinity
// algebra; the augmentation is the projection killing the non-units
BarDual bar_dual(const AinfAlgebra& A, int adams_bound, int length_bound);

// Koszul dual of a semi-free Adams-graded dga, on duals of its word
// basis within the Adams bound (the outer dual of a double-dual check)
BarDual bar_dual_of_dga(const DgaPresentation& pres, int adams_bound);

struct DoubleDualReport {
    bool match = false;
    bool decided = true;  // false when the bound is too small to decide
    std::string detail;
};

// Betti comparison of E(E(A)) against A within the bounds
DoubleDualReport double_dual_check(const AinfAlgebra& A, int adams_bound, int deg_lo, int deg_hi);

}  // namespace dgaw
