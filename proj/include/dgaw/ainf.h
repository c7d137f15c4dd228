#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgaw/quiver.h"

namespace dgaw {

// linear combination of basis elements
using LinComb = std::map<int, Scalar>;

struct AinfBasisEl {
    std::string name;
    int deg = 0;
    int adams = 0;
    int src = -1;
    int tgt = -1;
    bool is_unit = false;  // the idempotent e_v at vertex src == tgt
};

// Finite-dimensional bigraded strictly unital A-infinity algebra over the
// base: sparse operation tables keyed by input id tuples (g_k, ..., g_1),
// rightmost input applied first. Missing key means zero.
class AinfAlgebra {
public:
    BaseRing base;
    Field field = Field::gf2();
    std::vector<AinfBasisEl> basis;
    std::map<std::vector<int>, LinComb> ops;
    int max_arity = 2;

    int index(const std::string& name) const;
    int unit_at(int vertex) const;
    LinComb mu(const std::vector<int>& inputs) const;
    // extend mu multilinearly in one slot
    LinComb mu_lin(const std::vector<LinComb>& inputs) const;

    void add_op(std::vector<int> inputs, int out, const Scalar& c);
    // fill the strict-unit part of mu^2
    void install_units();
};

struct PairingForm {
    // nonzero entries of <g1, g2>_B, by basis index pair
    std::map<std::pair<int, int>, Scalar> entries;

    Scalar at(const AinfAlgebra& A, int i, int j) const;
    Scalar at(Field f, int i, int j) const;
    bool nondegenerate(const AinfAlgebra& A) const;
};

// compact cyclic algebra B(Q, w): ops read off the Ginzburg differential
std::pair<AinfAlgebra, PairingForm> cyclic_from_potential(const Quiver& q, const Potential& w,
                                                          Field f);

// finite graded associative algebra given by structure constants
struct AssocAlgebra {
    BaseRing base;
    Field field = Field::gf2();
    std::vector<AinfBasisEl> basis;                 // adams unused (0)
    std::map<std::pair<int, int>, LinComb> mult;    // (i, j) -> i * j, j applied first
    bool is_associative() const;
    int unit_at(int vertex) const;
};

// quotient algebra of a quadratic presentation on a finite path basis;
// grading: 0 = trivially graded, 1 = arrows in degree one
AssocAlgebra quadratic_quotient_algebra(const QuadraticPresentation& pres, int grading);

// n-cyclic completion A + A^dual[-n]
AinfAlgebra trivial_extension(const AssocAlgebra& A, int n);

// the evaluation pairing <(a,phi),(b,psi)> = psi(a) + phi(b) on a trivial
// extension built by trivial_extension
PairingForm trivial_extension_pairing(const AinfAlgebra& B);

// violated Stasheff identities up to max_arity, as readable strings
std::vector<std::string> check_ainf_relations(const AinfAlgebra& A, int max_arity);

bool check_cyclic(const AinfAlgebra& A, const PairingForm& P, int max_arity);

AinfAlgebra directed_subalgebra(const AinfAlgebra& A, const std::vector<std::string>& ordering);

struct OneWayAlgebra {
    AssocAlgebra algebra;
};

bool one_way_check(const OneWayAlgebra& A);

// JSON round trip per the ainf.json schema
std::string ainf_to_json(const AinfAlgebra& A);
AinfAlgebra ainf_from_json(const std::string& text, Field f);

}  // namespace dgaw
