#pragma once

#include "dgaw/ainf.h"

namespace dgaw {

// degree-preserving linear endomorphism given by its matrix on the basis
struct Cochain10 {
    std::vector<LinComb> columns;  // image of each basis element
};

// basis of the ungraded center: x with xb = bx for every basis b
std::vector<LinComb> center(const AssocAlgebra& A);

// Euler derivation b -> |b| b; asserted to be a derivation
Cochain10 euler_derivation(const AssocAlgebra& B);

// the unique x with <x, b> = <c(b), 1> for all b (linear solve against
// the pairing Gram matrix)
LinComb bv_degree1(const Cochain10& c, const AssocAlgebra& B, const PairingForm& P);

// trivial extension of a one-way algebra as an associative algebra
// together with its evaluation pairing
std::pair<AssocAlgebra, PairingForm> cyclic_completion_assoc(const AssocAlgebra& A, int n);

// dim Z(B) and the two summands of Z(A) |x Ann_{A^dual}(C(A))
struct CenterCensus {
    int dim_ZB = 0;
    int dim_ZA = 0;
    int dim_ann = 0;
};
CenterCensus center_census(const AssocAlgebra& A, int n);

// constructs B = A + A^dual[-n], the evaluation pairing, and checks
// Delta_cyc(eu/n) = 1; requires n invertible and one_way_check(A)
bool verify_quasi_dilation(const OneWayAlgebra& A, int n);

}  // namespace dgaw
