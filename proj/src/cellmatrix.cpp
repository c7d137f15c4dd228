#include "dgaw/cellmatrix.h"

namespace dgaw {

bool CellMatrix::strictly_upper() const {
    for (int i = 0; i < r; ++i)
        for (int j = 0; j <= i; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

CellMatrix unit_matrix(const GenSet& gs, const std::vector<int>& diag, Field f) {
    static_cast<void>(gs);
    CellMatrix E(diag, f);
    for (int i = 0; i < E.r; ++i) E.at(i, i) = NCPoly::idem(f, diag[static_cast<size_t>(i)]);
    return E;
}

CellMatrix mat_mul(const GenSet& gs, const CellMatrix& X, const CellMatrix& Y) {
    if (X.r != Y.r) throw error("mat_mul: size mismatch");
    Field f = X.e.empty() ? Field::gf2() : X.e.front().field();
    CellMatrix Z(X.diag, f);
    for (int m = 0; m < X.r; ++m)
        for (int n = 0; n < X.r; ++n) {
            NCPoly acc(f);
            for (int k = 0; k < X.r; ++k) {
                if (X.at(m, k).is_zero() || Y.at(k, n).is_zero()) continue;
                acc += mul(gs, Y.at(k, n), X.at(m, k));
            }
            Z.at(m, n) = std::move(acc);
        }
    return Z;
}

CellMatrix mat_add(const CellMatrix& X, const CellMatrix& Y) {
    if (X.r != Y.r) throw error("mat_add: size mismatch");
    CellMatrix Z = X;
    for (size_t i = 0; i < Z.e.size(); ++i) Z.e[i] += Y.e[i];
    return Z;
}

CellMatrix unitri_inverse(const GenSet& gs, const CellMatrix& B, Field f) {
    if (!B.strictly_upper()) throw error("unitri_inverse: matrix is not strictly upper triangular");
    CellMatrix E = unit_matrix(gs, B.diag, f);
    CellMatrix acc = E;
    CellMatrix power = B;
    int sign = -1;
    for (int k = 1; k < B.r; ++k) {
        CellMatrix term = power;
        if (sign < 0 && f.kind != FieldKind::GF2)
            for (auto& p : term.e) p = -p;
        acc = mat_add(acc, term);
        power = mat_mul(gs, power, B);
        sign = -sign;
    }
    return acc;
}

}  // namespace dgaw
