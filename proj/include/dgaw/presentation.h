#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgaw/scalar.h"

namespace dgaw {

// Semisimple base ring: one idempotent per labelled vertex/component.
struct BaseRing {
    std::vector<std::string> vertices;

    int index(const std::string& v) const;
    int size() const { return static_cast<int>(vertices.size()); }
    bool operator==(const BaseRing& o) const { return vertices == o.vertices; }
};

struct GenInfo {
    std::string name;
    int src = -1;  // idempotent index, first applied end
    int tgt = -1;
    int deg = 0;
    std::optional<int> adams;
};

// Ordered generator table over a base ring. Generator ids are indices
// into the declaration order; all words intern through these ids.
class GenSet {
public:
    GenSet() = default;
    explicit GenSet(BaseRing base) : base_(std::move(base)) {}

    int add(const std::string& name, int src, int tgt, int deg,
            std::optional<int> adams = std::nullopt);
    int add(const std::string& name, const std::string& src, const std::string& tgt, int deg,
            std::optional<int> adams = std::nullopt);

    const BaseRing& base() const { return base_; }
    int size() const { return static_cast<int>(gens_.size()); }
    const GenInfo& operator[](int id) const { return gens_[static_cast<size_t>(id)]; }
    int index(const std::string& name) const;  // -1 when absent
    bool has(const std::string& name) const { return index(name) >= 0; }

private:
    BaseRing base_;
    std::vector<GenInfo> gens_;
    std::map<std::string, int> byname_;
};

// Composable word of generators, stored in print order: factors.front()
// is applied last, factors.back() first (products read right-to-left).
// The empty word at a vertex is the idempotent e_v.
struct Word {
    std::vector<int> factors;
    int vertex = -1;  // used only when factors is empty

    static Word idem(int v) { return Word{{}, v}; }
    static Word gen(int g) { return Word{{g}, -1}; }

    bool is_idem() const { return factors.empty(); }
    size_t length() const { return factors.size(); }
    int src(const GenSet& gs) const { return is_idem() ? vertex : gs[factors.back()].src; }
    int tgt(const GenSet& gs) const { return is_idem() ? vertex : gs[factors.front()].tgt; }
    int deg(const GenSet& gs) const;
    std::optional<int> adams(const GenSet& gs) const;

    bool operator<(const Word& o) const {
        if (factors != o.factors) return factors < o.factors;
        return vertex < o.vertex;
    }
    bool operator==(const Word& o) const { return factors == o.factors && vertex == o.vertex; }
};

// w2 * w1, zero (nullopt) when the endpoints do not compose.
std::optional<Word> concat(const GenSet& gs, const Word& w2, const Word& w1);

// Exact-coefficient noncommutative polynomial: Word -> Scalar, zero
// coefficients never stored.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(Field f) : field_(f) {}
    static NCPoly zero(Field f) { return NCPoly(f); }
    static NCPoly idem(Field f, int v) { return NCPoly(f).added(Word::idem(v), Scalar::one(f)); }
    static NCPoly gen(Field f, int g) { return NCPoly(f).added(Word::gen(g), Scalar::one(f)); }

    const Field& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }

    void add_term(const Word& w, const Scalar& c);
    NCPoly added(const Word& w, const Scalar& c) const {
        NCPoly r = *this;
        r.add_term(w, c);
        return r;
    }
    Scalar coeff(const Word& w) const;

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const Scalar& c) const;
    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    // true when every word shares the given endpoints
    bool endpoints_are(const GenSet& gs, int src, int tgt) const;
    // degree when homogeneous, nullopt otherwise (zero poly: nullopt)
    std::optional<int> homogeneous_deg(const GenSet& gs) const;

    std::string str(const GenSet& gs) const;

private:
    Field field_ = Field::gf2();
    std::map<Word, Scalar> terms_;
};

// bilinear product p2 * p1 (p1 applied first); non-composable pairs drop
NCPoly mul(const GenSet& gs, const NCPoly& p2, const NCPoly& p1);

// parse a polynomial in canonical text form against a generator table
NCPoly parse_ncpoly(const GenSet& gs, Field f, const std::string& text);

// The unit 1 = sum of all idempotents.
NCPoly unit_poly(const GenSet& gs, Field f);

// Graded derivation determined by generator images, extended by
// D(xy) = D(x) y + (-1)^{der_deg |x|} x D(y).
class Derivation {
public:
    Derivation(const GenSet& gs, Field f, int der_deg);
    void set_image(int gen, NCPoly img);
    const NCPoly& image(int gen) const { return images_[static_cast<size_t>(gen)]; }
    int der_deg() const { return der_deg_; }

    NCPoly apply_word(const Word& w) const;
    NCPoly apply(const NCPoly& p) const;

private:
    const GenSet* gs_;
    Field field_;
    int der_deg_;
    std::vector<NCPoly> images_;
};

// Semi-free dg algebra presentation: generators plus differential table.
class DgaPresentation {
public:
    DgaPresentation() = default;
    DgaPresentation(GenSet gs, Field f);

    const GenSet& gens() const { return gens_; }
    const Field& field() const { return field_; }
    const NCPoly& diff(int gen) const { return diff_[static_cast<size_t>(gen)]; }
    void set_diff(int gen, NCPoly d);
    void set_diff(const std::string& gen, const NCPoly& d);

    NCPoly d(const NCPoly& p) const;  // Leibniz extension of the diff table

    // ids of generators violating deg(d g) = deg(g)+1 or endpoint match
    std::vector<int> check_degrees() const;
    // ids of generators with d(d g) != 0
    std::vector<int> check_d_squared() const;

    std::string dump() const;  // canonical text form
    static DgaPresentation parse(const std::string& text);

private:
    GenSet gens_;
    Field field_ = Field::gf2();
    std::vector<NCPoly> diff_;
};

// extend_derivation per the operation contract; throws on degree or
// endpoint mismatch in the images.
Derivation extend_derivation(const DgaPresentation& pres,
                             const std::map<int, NCPoly>& images, int der_deg);

struct DgaMorphism {
    const DgaPresentation* source = nullptr;
    const DgaPresentation* target = nullptr;
    std::vector<NCPoly> images;  // indexed by source generator id

    NCPoly apply(const NCPoly& p) const;
};

DgaMorphism identity_morphism(const DgaPresentation& pres);
bool check_morphism(const DgaMorphism& f);

}  // namespace dgaw
