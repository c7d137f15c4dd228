#pragma once

#include <map>
#include <string>
#include <vector>

#include "dgaw/presentation.h"

namespace dgaw {

struct Arrow {
    std::string id;
    std::string src;
    std::string tgt;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int arrow_index(const std::string& id) const;  // -1 when absent
};

// A potential term: exact coefficient and a closed cyclic word of arrow
// ids in product order (rightmost factor applied first).
struct CycleTerm {
    Scalar coeff;
    std::vector<int> arrows;  // indices into Quiver::arrows, print order
};

class Potential {
public:
    Potential() = default;
    explicit Potential(Field f) : field_(f) {}

    const Field& field() const { return field_; }
    const std::vector<CycleTerm>& terms() const { return terms_; }

    // inserts with canonical-rotation merging; rejects non-closed cycles
    void add_term(const Quiver& q, Scalar c, std::vector<int> arrow_word);
    void add_term(const Quiver& q, Scalar c, const std::vector<std::string>& arrow_ids);

private:
    Field field_ = Field::gf2();
    std::vector<CycleTerm> terms_;
};

bool potential_is_reduced(const Potential& w);

// circular derivative: sum of vu over decompositions u a v of the cyclic
// permutations of each term; lives in the Ginzburg generator set, so the
// result is returned as arrow-id words with coefficients.
std::vector<std::pair<Scalar, std::vector<int>>> cyclic_derivative(const Quiver& q,
                                                                   const Potential& w,
                                                                   const std::string& arrow);

// Sign decoration of the standard Ginzburg differentials: one sign per
// (generator name, canonical monomial string) slot.
struct SignVector {
    std::map<std::pair<std::string, std::string>, int> eps;  // value in {+1,-1}
};

DgaPresentation ginzburg(const Quiver& q, const Potential& w, Field f,
                         const SignVector* signs = nullptr);

struct QuadraticRelation {
    std::string label;  // becomes the id of the reversing arrow
    // sum of coefficient * (two-letter arrow word in product order)
    std::vector<std::pair<Scalar, std::array<std::string, 2>>> terms;
};

struct QuadraticPresentation {
    Quiver quiver;
    Field field = Field::gf2();
    std::vector<QuadraticRelation> relations;
};

// 3-CY completion data of a quadratic quiver algebra: one reversing arrow
// per relation, potential = sum of label * relation.
std::pair<Quiver, Potential> cy3_from_quadratic(const QuadraticPresentation& pres);

// The directed quiver of the A(p,q,r) family with its three relations.
QuadraticPresentation builtin_Apqr(int p, int q, int r, Field f);

// The same quiver with the tilting-algebra ideal: the three relations
// plus vanishing arm compositions. Quotients by this presentation have
// the Hilbert series that pairs with B(Q_{p,q,r}, w_{p,q,r}).
QuadraticPresentation builtin_Apqr_tilting(int p, int q, int r, Field f);

// Ginzburg algebra of (Q_{p,q,r}, w_{p,q,r}).
DgaPresentation builtin_ginzburg_pqr(int p, int q, int r, Field f, const SignVector* signs = nullptr);

// quiver of the linear A_r diagram; arrows point from vertex k+1 to k so
// that the cellular comparison maps land identically
DgaPresentation builtin_ginzburg_Ar(int r, Field f);

// JSON round trip per the quiver.json schema
std::string quiver_to_json(const Quiver& q, const Potential& w);
std::pair<Quiver, Potential> quiver_from_json(const std::string& text, Field f);

}  // namespace dgaw
