#include "dgaw/scalar.h"

namespace dgaw {

Field Field::gfp(unsigned p) {
    if (p < 2) throw error("GF(p): modulus must be a prime >= 2");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw error("GF(p): " + std::to_string(p) + " is not prime");
    return {p == 2 ? FieldKind::GF2 : FieldKind::GFp, p};
}

Field Field::parse(const std::string& tag) {
    if (tag == "gf2") return gf2();
    if (tag == "q" || tag == "Q" || tag == "rat") return rational();
    if (tag.rfind("gf", 0) == 0) return gfp(static_cast<unsigned>(std::stoul(tag.substr(2))));
    throw error("unknown field tag '" + tag + "' (expected gf2, gfP or q)");
}

std::string Field::str() const {
    switch (kind) {
        case FieldKind::GF2: return "gf2";
        case FieldKind::GFp: return "gf" + std::to_string(p);
        case FieldKind::Rational: return "q";
    }
    return "?";
}

Scalar::Scalar(const Field& f, long value) : field_(f) {
    switch (f.kind) {
        case FieldKind::GF2: residue_ = static_cast<unsigned>(((value % 2) + 2) % 2); break;
        case FieldKind::GFp: {
            long m = value % static_cast<long>(f.p);
            if (m < 0) m += f.p;
            residue_ = static_cast<unsigned>(m);
            break;
        }
        case FieldKind::Rational: q_ = value; break;
    }
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
    if (f.kind != FieldKind::Rational) throw error("from_mpq: field is not the rationals");
    Scalar s;
    s.field_ = f;
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_) throw error("field-tag mismatch: " + field_.str() + " vs " + o.field_.str());
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::Rational ? q_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::Rational ? q_ == 1 : residue_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (field_.kind == FieldKind::Rational) {
        r.q_ += o.q_;
        r.q_.canonicalize();
    } else {
        r.residue_ = (residue_ + o.residue_) % field_.p;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.kind == FieldKind::Rational)
        r.q_ = -q_;
    else if (residue_ != 0)
        r.residue_ = field_.p - residue_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (field_.kind == FieldKind::Rational) {
        r.q_ *= o.q_;
        r.q_.canonicalize();
    } else {
        r.residue_ = static_cast<unsigned>((static_cast<uint64_t>(residue_) * o.residue_) % field_.p);
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("inverse of zero");
    Scalar r = *this;
    if (field_.kind == FieldKind::Rational) {
        r.q_ = 1 / q_;
        r.q_.canonicalize();
        return r;
    }
    // extended Euclid mod p
    long t = 0, newt = 1;
    long rr = field_.p, newr = residue_;
    while (newr != 0) {
        long quot = rr / newr;
        long tmp = t - quot * newt;
        t = newt;
        newt = tmp;
        tmp = rr - quot * newr;
        rr = newr;
        newr = tmp;
    }
    if (t < 0) t += field_.p;
    r.residue_ = static_cast<unsigned>(t);
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.kind == FieldKind::Rational ? q_ == o.q_ : residue_ == o.residue_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same(o);
    return field_.kind == FieldKind::Rational ? q_ < o.q_ : residue_ < o.residue_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::Rational) return q_.get_str();
    return std::to_string(residue_);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (f.kind == FieldKind::Rational) {
        try {
            return from_mpq(f, mpq_class(text));
        } catch (const std::invalid_argument&) {
            throw error("cannot parse rational '" + text + "'");
        }
    }
    return Scalar(f, std::stol(text));
}

}  // namespace dgaw
