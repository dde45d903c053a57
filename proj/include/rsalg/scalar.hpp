#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rsalg/polynomial.hpp"
#include "rsalg/primefield.hpp"
#include "rsalg/ratfunc.hpp"

namespace rsalg {

enum class RingKind { Rationals, Poly, Fraction, PrimeField };

// Coefficient domain descriptor. Poly and Fraction carry a variable
// universe; PrimeField carries the modulus.
struct RingDesc {
    RingKind kind = RingKind::Rationals;
    RingPtr ring;                 // Poly, Fraction
    std::uint64_t modulus = 0;    // PrimeField

    static RingDesc rationals();
    static RingDesc poly(RingPtr r);
    static RingDesc poly(std::vector<std::string> vars);
    static RingDesc fraction(RingPtr r);
    static RingDesc fraction(std::vector<std::string> vars);
    static RingDesc gf(std::uint64_t p);    // p prime, p >= 5

    bool is_field() const { return kind != RingKind::Poly; }
    RingDesc field_of_fractions() const;

    bool operator==(const RingDesc& o) const;
    std::string to_string() const;
};

// One coefficient; the active alternative matches the ring kind.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    explicit Scalar(Rational r) : v_(std::move(r)) {}
    explicit Scalar(Polynomial p) : v_(std::move(p)) {}
    explicit Scalar(RationalFunction f) : v_(std::move(f)) {}
    explicit Scalar(PrimeFieldElement e) : v_(e) {}

    static Scalar zero(const RingDesc& ring);
    static Scalar one(const RingDesc& ring);
    static Scalar from_int(const RingDesc& ring, std::int64_t n);
    static Scalar from_rational(const RingDesc& ring, const Rational& q);
    static Scalar parse(const RingDesc& ring, const std::string& text);

    RingKind kind() const;
    RingDesc ring() const;

    const Rational& as_rational() const { return std::get<Rational>(v_); }
    const Polynomial& as_poly() const { return std::get<Polynomial>(v_); }
    const RationalFunction& as_fraction() const { return std::get<RationalFunction>(v_); }
    const PrimeFieldElement& as_gf() const { return std::get<PrimeFieldElement>(v_); }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    // exact division; for Poly coefficients the quotient must again be a
    // polynomial
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(std::int64_t k) const;
    bool operator==(const Scalar& o) const;

    // Poly -> Fraction embedding; other kinds unchanged
    Scalar lifted_to_field() const;

    // image in GF(p) after substituting the given values for the ring's
    // variables (ignored for variable-free kinds)
    std::uint64_t eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const;

    // rough size measure (term counts) used for pivot selection
    std::size_t complexity() const;

    std::string to_string() const;

private:
    void require_compatible(const Scalar& o) const;

    std::variant<Rational, Polynomial, RationalFunction, PrimeFieldElement> v_;
};

} // namespace rsalg
