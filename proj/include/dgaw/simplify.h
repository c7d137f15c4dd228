#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dgaw/presentation.h"

namespace dgaw {

struct CancelStep {
    std::string cancelled;     // a_i, removed together with the partner
    std::string partner;       // a_j, bare unit term of d(a_i)
    Scalar unit;               // coefficient of a_j in d(a_i)
    std::string substitution;  // a_j |-> this polynomial, printed over the pre-step gens
    int filtration = 0;        // strategy key value of a_i at the time of the step
    std::string unit_text;     // textual unit, set when parsed from a trace file
};

struct CancellationTrace {
    std::vector<CancelStep> steps;

    std::string serialize() const;
    static CancellationTrace parse(const std::string& text);
};

// Strategy: smaller keys cancel first. The default orders candidates by
// (cohomological degree of the cancelled generator, sheet gap n-m where
// the name carries one, declaration index).
using StrategyKey = std::function<std::tuple<int, int, int>(const DgaPresentation&, int)>;
StrategyKey default_strategy();
// alternate deterministic strategy used by the confluence tests
StrategyKey gap_first_strategy();

// sheet gap parsed from names of the form x#^{m,n}; 0 otherwise
int name_gap(const std::string& name);

struct CancellablePair {
    int i;  // cancelled generator
    int j;  // partner
    Scalar unit;
};

std::optional<CancellablePair> find_cancellable_pair(const DgaPresentation& pres,
                                                     const StrategyKey& key);

struct CancelResult {
    DgaPresentation pres;
    CancelStep step;
    // quotient map of the step: old generators -> polynomials over the new ones
    std::vector<NCPoly> images;
};

CancelResult cancel_pair(const DgaPresentation& pres, int i, int j, const Scalar& unit,
                         const StrategyKey& key, bool assert_d2 = true);

struct SimplifyResult {
    DgaPresentation pres;
    CancellationTrace trace;
    // composed quotient map: input generators -> polynomials over the output
    std::vector<NCPoly> images;
};

SimplifyResult simplify(const DgaPresentation& pres, const StrategyKey& key = default_strategy(),
                        bool assert_each_step = false, bool track_images = true);

// replay a serialized trace against an input presentation; throws when a
// step no longer matches (stale trace)
DgaPresentation replay_trace(const DgaPresentation& pres, const CancellationTrace& trace);

// append a pair da = b, db = 0 with |a| = deg, based at the given vertex
DgaPresentation stabilize(const DgaPresentation& pres, int deg, int vertex = 0);

// elementary tame automorphism g -> g + v transported onto the diff table;
// returns the transformed presentation and the automorphism as a morphism
std::pair<DgaPresentation, std::vector<NCPoly>> apply_elementary_automorphism(
    const DgaPresentation& pres, int gen, const NCPoly& v);

// true iff candidate is a chain map admitting a two-sided inverse on
// generators (found by linear solve on length-1 parts plus substitution)
bool verify_iso(const DgaPresentation& pres1, const DgaPresentation& pres2,
                const DgaMorphism& candidate);

struct GaugeAssignment {
    std::map<std::string, Scalar> lambda;
};

// finds a +-1 rescaling of the generators carrying diff1 to diff2; the
// exponent system is solved over GF(2)
std::optional<GaugeAssignment> sign_gauge_solve(const DgaPresentation& pres1,
                                                const DgaPresentation& pres2);

}  // namespace dgaw
