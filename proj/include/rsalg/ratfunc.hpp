#pragma once

#include <string>

#include "rsalg/polynomial.hpp"

namespace rsalg {

// Quotient of polynomials in canonical form: reduced, denominator monic
// under the graded-lex order. Equality is structural.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(Polynomial num, Polynomial den);   // canonicalizes
    static RationalFunction zero(RingPtr ring);
    static RationalFunction constant(RingPtr ring, const Rational& c);
    static RationalFunction variable(RingPtr ring, std::size_t index);
    static RationalFunction from_polynomial(Polynomial p);
    // expression grammar: + - * / ^ parentheses, integer and rational
    // constants, the ring's variable names
    static RationalFunction parse(RingPtr ring, const std::string& text);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    Polynomial as_polynomial() const;           // requires is_polynomial

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction pow(std::int64_t k) const;
    bool operator==(const RationalFunction& o) const;

    Rational eval(const std::vector<Rational>& point) const;
    std::uint64_t eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const;
    RationalFunction substitute(std::size_t var, const RationalFunction& value) const;

    std::string to_string() const;

private:
    void canonicalize();
    void make_monic();

    Polynomial num_, den_;   // default state is invalid; factories set both
};

} // namespace rsalg
