#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace dgaw {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class FieldKind : uint8_t { GF2, GFp, Rational };

struct Field {
    FieldKind kind = FieldKind::GF2;
    unsigned p = 2;  // modulus for GFp; 2 for GF2; unused for Rational

    static Field gf2() { return {FieldKind::GF2, 2}; }
    static Field gfp(unsigned p);
    static Field rational() { return {FieldKind::Rational, 0}; }
    static Field parse(const std::string& tag);

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }
    std::string str() const;
};

// Exact field element. GF(2) and GF(p) store a reduced residue, the
// rationals use GMP and stay in lowest terms with positive denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Field& f, long value);

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }
    static Scalar from_mpq(const Field& f, const mpq_class& q);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const { return !is_zero(); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // total order within one field, for deterministic printing
    bool operator<(const Scalar& o) const;

    std::string str() const;
    static Scalar parse(const Field& f, const std::string& text);

private:
    void check_same(const Scalar& o) const;

    Field field_ = Field::gf2();
    unsigned residue_ = 0;  // GF2 / GFp
    mpq_class q_ = 0;       // Rational
};

}  // namespace dgaw
