#include "dgaw/bv.h"

namespace dgaw {

namespace {

LinComb prod(const AssocAlgebra& A, int i, int j) {
    auto it = A.mult.find({i, j});
    return it == A.mult.end() ? LinComb{} : it->second;
}

void axpy(LinComb& acc, const Scalar& c, const LinComb& v) {
    for (const auto& [b, x] : v) {
        auto [it, fresh] = acc.try_emplace(b, Scalar::zero(x.field()));
        it->second += c * x;
        if (it->second.is_zero()) acc.erase(it);
    }
}

// solve M x = rhs for dense M (columns indexed by unknowns); nullopt when
// inconsistent
std::optional<std::vector<Scalar>> solve_dense(std::vector<std::vector<Scalar>> M,
                                               std::vector<Scalar> rhs, Field f) {
    int nr = static_cast<int>(M.size());
    int nc = nr ? static_cast<int>(M[0].size()) : 0;
    std::vector<int> pivot_of_col(static_cast<size_t>(nc), -1);
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (!M[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(rank)]);
        std::swap(rhs[static_cast<size_t>(piv)], rhs[static_cast<size_t>(rank)]);
        Scalar inv = M[static_cast<size_t>(rank)][static_cast<size_t>(col)].inverse();
        for (int k = 0; k < nc; ++k) M[static_cast<size_t>(rank)][static_cast<size_t>(k)] *= inv;
        rhs[static_cast<size_t>(rank)] *= inv;
        for (int r = 0; r < nr; ++r) {
            if (r == rank) continue;
            Scalar m = M[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (m.is_zero()) continue;
            for (int k = 0; k < nc; ++k)
                M[static_cast<size_t>(r)][static_cast<size_t>(k)] =
                    M[static_cast<size_t>(r)][static_cast<size_t>(k)] - m * M[static_cast<size_t>(rank)][static_cast<size_t>(k)];
            rhs[static_cast<size_t>(r)] = rhs[static_cast<size_t>(r)] - m * rhs[static_cast<size_t>(rank)];
        }
        pivot_of_col[static_cast<size_t>(col)] = rank;
        ++rank;
    }
    for (int r = rank; r < nr; ++r)
        if (!rhs[static_cast<size_t>(r)].is_zero()) return std::nullopt;
    std::vector<Scalar> x(static_cast<size_t>(nc), Scalar::zero(f));
    for (int col = 0; col < nc; ++col)
        if (pivot_of_col[static_cast<size_t>(col)] >= 0) x[static_cast<size_t>(col)] = rhs[static_cast<size_t>(pivot_of_col[static_cast<size_t>(col)])];
    return x;
}

}  // namespace

std::vector<LinComb> center(const AssocAlgebra& A) {
    int n = static_cast<int>(A.basis.size());
    Field f = A.field;
    // kernel of x -> (xb - bx)_b: rows indexed by (b, output basis)
    std::vector<std::vector<Scalar>> M;
    for (int b = 0; b < n; ++b) {
        // one block of n rows
        std::vector<std::vector<Scalar>> block(static_cast<size_t>(n),
                                               std::vector<Scalar>(static_cast<size_t>(n), Scalar::zero(f)));
        for (int x = 0; x < n; ++x) {
            for (const auto& [o, c] : prod(A, x, b)) block[static_cast<size_t>(o)][static_cast<size_t>(x)] += c;
            for (const auto& [o, c] : prod(A, b, x)) {
                block[static_cast<size_t>(o)][static_cast<size_t>(x)] = block[static_cast<size_t>(o)][static_cast<size_t>(x)] - c;
            }
        }
        for (auto& row : block) M.push_back(std::move(row));
    }
    // kernel via column elimination
    int nr = static_cast<int>(M.size());
    std::vector<int> pivot_cols;
    int rank = 0;
    std::vector<std::vector<Scalar>> R = M;
    std::vector<int> pivot_row_of(static_cast<size_t>(n), -1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (!R[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(R[static_cast<size_t>(piv)], R[static_cast<size_t>(rank)]);
        Scalar inv = R[static_cast<size_t>(rank)][static_cast<size_t>(col)].inverse();
        for (int k = 0; k < n; ++k) R[static_cast<size_t>(rank)][static_cast<size_t>(k)] *= inv;
        for (int r = 0; r < nr; ++r) {
            if (r == rank) continue;
            Scalar m = R[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (m.is_zero()) continue;
            for (int k = 0; k < n; ++k)
                R[static_cast<size_t>(r)][static_cast<size_t>(k)] =
                    R[static_cast<size_t>(r)][static_cast<size_t>(k)] - m * R[static_cast<size_t>(rank)][static_cast<size_t>(k)];
        }
        pivot_row_of[static_cast<size_t>(col)] = rank;
        pivot_cols.push_back(col);
        ++rank;
    }
    std::vector<LinComb> basis;
    for (int col = 0; col < n; ++col) {
        if (pivot_row_of[static_cast<size_t>(col)] >= 0) continue;
        LinComb v;
        v[col] = Scalar::one(f);
        for (int pc : pivot_cols) {
            Scalar coeff = R[static_cast<size_t>(pivot_row_of[static_cast<size_t>(pc)])][static_cast<size_t>(col)];
            if (!coeff.is_zero()) v[pc] = -coeff;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Cochain10 euler_derivation(const AssocAlgebra& B) {
    Cochain10 c;
    Field f = B.field;
    for (int b = 0; b < static_cast<int>(B.basis.size()); ++b) {
        LinComb v;
        int d = B.basis[static_cast<size_t>(b)].deg;
        if (d != 0) v[b] = Scalar(f, d);
        c.columns.push_back(std::move(v));
    }
    // derivation property eu(xy) = eu(x) y + x eu(y) on the basis
    for (const auto& [xy, out] : B.mult) {
        LinComb lhs;
        for (const auto& [o, k] : out) axpy(lhs, k, c.columns[static_cast<size_t>(o)]);
        LinComb rhs;
        for (const auto& [m, k] : c.columns[static_cast<size_t>(xy.first)]) axpy(rhs, k, prod(B, m, xy.second));
        for (const auto& [m, k] : c.columns[static_cast<size_t>(xy.second)]) axpy(rhs, k, prod(B, xy.first, m));
        if (lhs != rhs) throw error("euler_derivation: not a derivation");
    }
    return c;
}

LinComb bv_degree1(const Cochain10& c, const AssocAlgebra& B, const PairingForm& P) {
    int n = static_cast<int>(B.basis.size());
    Field f = B.field;
    // Gram matrix G[b][x] = <x, b>, unknown x with G x = rhs,
    // rhs_b = <c(b), 1>
    std::vector<std::vector<Scalar>> G(static_cast<size_t>(n),
                                       std::vector<Scalar>(static_cast<size_t>(n), Scalar::zero(f)));
    for (const auto& [ij, v] : P.entries) G[static_cast<size_t>(ij.second)][static_cast<size_t>(ij.first)] = v;
    // the identity is the sum of unit idempotents
    std::vector<int> units;
    for (int b = 0; b < n; ++b)
        if (B.basis[static_cast<size_t>(b)].is_unit) units.push_back(b);
    std::vector<Scalar> rhs(static_cast<size_t>(n), Scalar::zero(f));
    for (int b = 0; b < n; ++b) {
        Scalar s = Scalar::zero(f);
        for (const auto& [o, k] : c.columns[static_cast<size_t>(b)])
            for (int e : units) s += k * P.at(f, o, e);
        rhs[static_cast<size_t>(b)] = s;
    }
    auto x = solve_dense(G, rhs, f);
    if (!x) throw error("bv_degree1: degenerate pairing");
    LinComb out;
    for (int b = 0; b < n; ++b)
        if (!(*x)[static_cast<size_t>(b)].is_zero()) out[b] = (*x)[static_cast<size_t>(b)];
    return out;
}

std::pair<AssocAlgebra, PairingForm> cyclic_completion_assoc(const AssocAlgebra& A, int n) {
    AssocAlgebra B;
    B.base = A.base;
    B.field = A.field;
    int na = static_cast<int>(A.basis.size());
    for (const auto& b : A.basis) B.basis.push_back(b);
    for (const auto& b : A.basis)
        B.basis.push_back(AinfBasisEl{b.name + "^v", n - b.deg, 0, b.tgt, b.src, false});
    // (a, phi)(b, psi) = (ab, a psi + phi b); the dual actions on the
    // trivially-graded core carry no signs
    for (const auto& [ij, out] : A.mult) B.mult[{ij.first, ij.second}] = out;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            LinComb left, right;  // a . phi_b and phi_b . a
            for (int x = 0; x < na; ++x) {
                auto l1 = prod(A, x, a);
                auto i1 = l1.find(b);
                if (i1 != l1.end()) left[na + x] = i1->second;
                auto l2 = prod(A, a, x);
                auto i2 = l2.find(b);
                if (i2 != l2.end()) right[na + x] = i2->second;
            }
            if (!left.empty()) B.mult[{a, na + b}] = left;
            if (!right.empty()) B.mult[{na + b, a}] = right;
        }
    if (!B.is_associative()) throw error("cyclic_completion_assoc: product not associative");
    PairingForm P;
    Scalar one = Scalar::one(A.field);
    for (int a = 0; a < na; ++a) {
        P.entries[{a, na + a}] = one;
        P.entries[{na + a, a}] = one;
    }
    return {std::move(B), std::move(P)};
}

CenterCensus center_census(const AssocAlgebra& A, int n) {
    CenterCensus cc;
    auto [B, P] = cyclic_completion_assoc(A, n);
    cc.dim_ZB = static_cast<int>(center(B).size());
    cc.dim_ZA = static_cast<int>(center(A).size());
    // Ann_{A^dual}(C(A)): functionals vanishing on the commutator subspace
    int na = static_cast<int>(A.basis.size());
    Field f = A.field;
    std::vector<std::vector<Scalar>> comms;
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y) {
            LinComb v = prod(A, x, y);
            for (const auto& [o, c] : prod(A, y, x)) {
                auto [it, fresh] = v.try_emplace(o, Scalar::zero(f));
                it->second = it->second - c;
                if (it->second.is_zero()) v.erase(it);
            }
            if (v.empty()) continue;
            std::vector<Scalar> row(static_cast<size_t>(na), Scalar::zero(f));
            for (const auto& [o, c] : v) row[static_cast<size_t>(o)] = c;
            comms.push_back(std::move(row));
        }
    // dim Ann = na - rank(commutator subspace)
    int rank = 0;
    int nr = static_cast<int>(comms.size());
    for (int col = 0; col < na && rank < nr; ++col) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (!comms[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(comms[static_cast<size_t>(piv)], comms[static_cast<size_t>(rank)]);
        Scalar inv = comms[static_cast<size_t>(rank)][static_cast<size_t>(col)].inverse();
        for (int k = 0; k < na; ++k) comms[static_cast<size_t>(rank)][static_cast<size_t>(k)] *= inv;
        for (int r = 0; r < nr; ++r) {
            if (r == rank) continue;
            Scalar m = comms[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (m.is_zero()) continue;
            for (int k = 0; k < na; ++k)
                comms[static_cast<size_t>(r)][static_cast<size_t>(k)] =
                    comms[static_cast<size_t>(r)][static_cast<size_t>(k)] - m * comms[static_cast<size_t>(rank)][static_cast<size_t>(k)];
        }
        ++rank;
    }
    cc.dim_ann = na - rank;
    return cc;
}

bool verify_quasi_dilation(const OneWayAlgebra& A, int n) {
    Field f = A.algebra.field;
    Scalar nn(f, n);
    if (nn.is_zero()) throw error("verify_quasi_dilation: n is not invertible in the field");
    if (!one_way_check(A)) throw error("verify_quasi_dilation: input is not a one-way algebra");
    for (const auto& b : A.algebra.basis)
        if (b.deg != 0) throw error("verify_quasi_dilation: input must be trivially graded");
    auto [B, P] = cyclic_completion_assoc(A.algebra, n);
    Cochain10 eu = euler_derivation(B);
    for (auto& col : eu.columns)
        for (auto& [b, c] : col) c *= nn.inverse();
    LinComb delta = bv_degree1(eu, B, P);
    // Delta(eu/n) must be the identity of B
    LinComb unit;
    for (int b = 0; b < static_cast<int>(B.basis.size()); ++b)
        if (B.basis[static_cast<size_t>(b)].is_unit) unit[b] = Scalar::one(f);
    if (delta != unit) return false;
    // and it lands in the center (commutator test)
    for (int x = 0; x < static_cast<int>(B.basis.size()); ++x) {
        LinComb lhs, rhs;
        for (const auto& [b, c] : delta) {
            axpy(lhs, c, prod(B, b, x));
            axpy(rhs, c, prod(B, x, b));
        }
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace dgaw
