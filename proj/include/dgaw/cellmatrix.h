#pragma once

#include "dgaw/presentation.h"

namespace dgaw {

// Square matrix of polynomial entries over a fixed frame of idempotents,
// as used by the cellular matrix differentials. Entry (i, j) carries a
// value with source diag[i] and target diag[j].
struct CellMatrix {
    int r = 0;
    std::vector<int> diag;  // idempotent index per frame slot
    std::vector<NCPoly> e;

    CellMatrix(std::vector<int> diagonal, Field f)
        : r(static_cast<int>(diagonal.size())), diag(std::move(diagonal)),
          e(static_cast<size_t>(r * r), NCPoly(f)) {}

    NCPoly& at(int i, int j) { return e[static_cast<size_t>(i * r + j)]; }
    const NCPoly& at(int i, int j) const { return e[static_cast<size_t>(i * r + j)]; }
    bool strictly_upper() const;
    bool operator==(const CellMatrix& o) const { return diag == o.diag && e == o.e; }
};

CellMatrix unit_matrix(const GenSet& gs, const std::vector<int>& diag, Field f);

// matrix product in diagrammatic order: (X Y)[m][n] = sum over k of
// "X[m][k] then Y[k][n]"; in the right-to-left algebra the entry is
// mul(Y[k][n], X[m][k])
CellMatrix mat_mul(const GenSet& gs, const CellMatrix& X, const CellMatrix& Y);
CellMatrix mat_add(const CellMatrix& X, const CellMatrix& Y);

// (E + B)^{-1} = E - B + B^2 - ... truncated at B^{r-1}; throws when B is
// not strictly upper triangular
CellMatrix unitri_inverse(const GenSet& gs, const CellMatrix& B, Field f);

}  // namespace dgaw
