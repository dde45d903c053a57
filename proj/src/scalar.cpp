#include "rsalg/scalar.hpp"

#include "rsalg/errors.hpp"

namespace rsalg {

RingDesc RingDesc::rationals() { return RingDesc{}; }

RingDesc RingDesc::poly(RingPtr r) {
    if (!r) throw validation_error("null variable universe");
    return RingDesc{RingKind::Poly, std::move(r), 0};
}

RingDesc RingDesc::poly(std::vector<std::string> vars) {
    return poly(PolyRing::make(std::move(vars)));
}

RingDesc RingDesc::fraction(RingPtr r) {
    if (!r) throw validation_error("null variable universe");
    return RingDesc{RingKind::Fraction, std::move(r), 0};
}

RingDesc RingDesc::fraction(std::vector<std::string> vars) {
    return fraction(PolyRing::make(std::move(vars)));
}

RingDesc RingDesc::gf(std::uint64_t p) {
    if (p == 2 || p == 3)
        throw characteristic_error("characteristic " + std::to_string(p) + " is not supported");
    if (!is_prime_u64(p))
        throw characteristic_error(std::to_string(p) + " is not prime");
    return RingDesc{RingKind::PrimeField, nullptr, p};
}

RingDesc RingDesc::field_of_fractions() const {
    if (kind == RingKind::Poly) return fraction(ring);
    return *this;
}

bool RingDesc::operator==(const RingDesc& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
    case RingKind::Rationals: return true;
    case RingKind::PrimeField: return modulus == o.modulus;
    default: return ring == o.ring || (ring && o.ring && ring->same_as(*o.ring));
    }
}

std::string RingDesc::to_string() const {
    auto join = [&] {
        std::string s;
        for (std::size_t i = 0; i < ring->nvars(); ++i) {
            if (i) s += ",";
            s += ring->var(i);
        }
        return s;
    };
    switch (kind) {
    case RingKind::Rationals: return "QQ";
    case RingKind::Poly: return "QQ[" + join() + "]";
    case RingKind::Fraction: return "QQ(" + join() + ")";
    case RingKind::PrimeField: return "GF(" + std::to_string(modulus) + ")";
    }
    return "?";
}

Scalar Scalar::zero(const RingDesc& ring) { return from_int(ring, 0); }
Scalar Scalar::one(const RingDesc& ring) { return from_int(ring, 1); }

Scalar Scalar::from_int(const RingDesc& ring, std::int64_t n) {
    return from_rational(ring, Rational(static_cast<long>(n)));
}

Scalar Scalar::from_rational(const RingDesc& ring, const Rational& q) {
    switch (ring.kind) {
    case RingKind::Rationals: return Scalar(q);
    case RingKind::Poly: return Scalar(Polynomial::constant(ring.ring, q));
    case RingKind::Fraction: return Scalar(RationalFunction::constant(ring.ring, q));
    case RingKind::PrimeField:
        return Scalar(PrimeFieldElement{rational_mod(q, ring.modulus), ring.modulus});
    }
    throw validation_error("bad ring kind");
}

Scalar Scalar::parse(const RingDesc& ring, const std::string& text) {
    RingPtr vars = ring.ring ? ring.ring : PolyRing::make({});
    RationalFunction f = RationalFunction::parse(vars, text);
    switch (ring.kind) {
    case RingKind::Rationals:
        return Scalar(f.as_polynomial().is_zero() ? Rational(0)
                                                  : f.as_polynomial().constant_value());
    case RingKind::Poly: {
        if (!f.is_polynomial())
            throw parse_error("expression is not a polynomial: " + text);
        return Scalar(f.as_polynomial());
    }
    case RingKind::Fraction:
        return Scalar(f);
    case RingKind::PrimeField: {
        Polynomial p = f.as_polynomial();
        Rational q = p.is_zero() ? Rational(0) : p.constant_value();
        return Scalar(PrimeFieldElement{rational_mod(q, ring.modulus), ring.modulus});
    }
    }
    throw validation_error("bad ring kind");
}

RingKind Scalar::kind() const {
    switch (v_.index()) {
    case 0: return RingKind::Rationals;
    case 1: return RingKind::Poly;
    case 2: return RingKind::Fraction;
    default: return RingKind::PrimeField;
    }
}

RingDesc Scalar::ring() const {
    switch (kind()) {
    case RingKind::Rationals: return RingDesc::rationals();
    case RingKind::Poly: return RingDesc{RingKind::Poly, as_poly().ring(), 0};
    case RingKind::Fraction: return RingDesc{RingKind::Fraction, as_fraction().ring(), 0};
    case RingKind::PrimeField: return RingDesc{RingKind::PrimeField, nullptr, as_gf().modulus};
    }
    throw validation_error("bad ring kind");
}

bool Scalar::is_zero() const {
    switch (kind()) {
    case RingKind::Rationals: return as_rational() == 0;
    case RingKind::Poly: return as_poly().is_zero();
    case RingKind::Fraction: return as_fraction().is_zero();
    case RingKind::PrimeField: return as_gf().value == 0;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (kind()) {
    case RingKind::Rationals: return as_rational() == 1;
    case RingKind::Poly: return as_poly().is_constant() && as_poly().constant_value() == 1;
    case RingKind::Fraction:
        return as_fraction().is_polynomial() && as_fraction().num().is_constant() &&
               !as_fraction().num().is_zero() &&
               as_fraction().as_polynomial().constant_value() == 1;
    case RingKind::PrimeField: return as_gf().value == 1;
    }
    return false;
}

void Scalar::require_compatible(const Scalar& o) const {
    if (v_.index() != o.v_.index())
        throw domain_mismatch("scalar kinds differ");
    switch (kind()) {
    case RingKind::Poly:
        if (as_poly().ring() != o.as_poly().ring() &&
            !as_poly().ring()->same_as(*o.as_poly().ring()))
            throw domain_mismatch("polynomial rings differ");
        break;
    case RingKind::Fraction:
        if (as_fraction().ring() != o.as_fraction().ring() &&
            !as_fraction().ring()->same_as(*o.as_fraction().ring()))
            throw domain_mismatch("fraction fields differ");
        break;
    case RingKind::PrimeField:
        if (as_gf().modulus != o.as_gf().modulus)
            throw domain_mismatch("prime field moduli differ");
        break;
    default:
        break;
    }
}

Scalar Scalar::operator-() const {
    switch (kind()) {
    case RingKind::Rationals: return Scalar(Rational(-as_rational()));
    case RingKind::Poly: return Scalar(-as_poly());
    case RingKind::Fraction: return Scalar(-as_fraction());
    case RingKind::PrimeField: return Scalar(-as_gf());
    }
    throw validation_error("bad ring kind");
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_compatible(o);
    switch (kind()) {
    case RingKind::Rationals: return Scalar(Rational(as_rational() + o.as_rational()));
    case RingKind::Poly: return Scalar(as_poly() + o.as_poly());
    case RingKind::Fraction: return Scalar(as_fraction() + o.as_fraction());
    case RingKind::PrimeField: return Scalar(as_gf() + o.as_gf());
    }
    throw validation_error("bad ring kind");
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_compatible(o);
    switch (kind()) {
    case RingKind::Rationals: return Scalar(Rational(as_rational() - o.as_rational()));
    case RingKind::Poly: return Scalar(as_poly() - o.as_poly());
    case RingKind::Fraction: return Scalar(as_fraction() - o.as_fraction());
    case RingKind::PrimeField: return Scalar(as_gf() - o.as_gf());
    }
    throw validation_error("bad ring kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_compatible(o);
    switch (kind()) {
    case RingKind::Rationals: return Scalar(Rational(as_rational() * o.as_rational()));
    case RingKind::Poly: return Scalar(as_poly() * o.as_poly());
    case RingKind::Fraction: return Scalar(as_fraction() * o.as_fraction());
    case RingKind::PrimeField: return Scalar(as_gf() * o.as_gf());
    }
    throw validation_error("bad ring kind");
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_compatible(o);
    if (o.is_zero()) throw division_by_zero();
    switch (kind()) {
    case RingKind::Rationals: return Scalar(Rational(as_rational() / o.as_rational()));
    case RingKind::Poly: return Scalar(as_poly().divexact(o.as_poly()));
    case RingKind::Fraction: return Scalar(as_fraction() / o.as_fraction());
    case RingKind::PrimeField: return Scalar(as_gf() / o.as_gf());
    }
    throw validation_error("bad ring kind");
}

Scalar Scalar::inverse() const {
    return one(ring()) / *this;
}

Scalar Scalar::pow(std::int64_t k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar acc = one(ring());
    Scalar base = *this;
    auto e = static_cast<std::uint64_t>(k);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (v_.index() != o.v_.index()) return false;
    switch (kind()) {
    case RingKind::Rationals: return as_rational() == o.as_rational();
    case RingKind::Poly: return as_poly() == o.as_poly();
    case RingKind::Fraction: return as_fraction() == o.as_fraction();
    case RingKind::PrimeField: return as_gf() == o.as_gf();
    }
    return false;
}

Scalar Scalar::lifted_to_field() const {
    if (kind() == RingKind::Poly)
        return Scalar(RationalFunction::from_polynomial(as_poly()));
    return *this;
}

std::uint64_t Scalar::eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const {
    switch (kind()) {
    case RingKind::Rationals: return rational_mod(as_rational(), p);
    case RingKind::Poly: return as_poly().eval_mod(point, p);
    case RingKind::Fraction: return as_fraction().eval_mod(point, p);
    case RingKind::PrimeField:
        if (as_gf().modulus != p) throw domain_mismatch("prime field moduli differ");
        return as_gf().value;
    }
    throw validation_error("bad ring kind");
}

std::size_t Scalar::complexity() const {
    switch (kind()) {
    case RingKind::Poly: return as_poly().terms().size();
    case RingKind::Fraction:
        return as_fraction().num().terms().size() + as_fraction().den().terms().size();
    default: return 1;
    }
}

std::string Scalar::to_string() const {
    switch (kind()) {
    case RingKind::Rationals: return rsalg::to_string(as_rational());
    case RingKind::Poly: return as_poly().to_string();
    case RingKind::Fraction: return as_fraction().to_string();
    case RingKind::PrimeField: return std::to_string(as_gf().value);
    }
    return "?";
}

} // namespace rsalg
