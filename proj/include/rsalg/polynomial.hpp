#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsalg/rational.hpp"

namespace rsalg {

// Ordered variable universe shared by all polynomials of one computation.
class PolyRing {
public:
    static std::shared_ptr<const PolyRing> make(std::vector<std::string> vars);

    std::size_t nvars() const { return vars_.size(); }
    const std::string& var(std::size_t i) const { return vars_.at(i); }
    const std::vector<std::string>& vars() const { return vars_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool same_as(const PolyRing& other) const { return vars_ == other.vars_; }

private:
    explicit PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Monomial {
    std::vector<std::uint32_t> exps;

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    bool operator==(const Monomial&) const = default;
};

// graded lexicographic, ties by variable index; "greater" so that map
// iteration starts at the leading term
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exps > b.exps;
    }
};

// Sparse multivariate polynomial over the rationals, canonical by
// construction: no zero terms, fixed term order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c);
    // expression string over the ring's variable names; must have no
    // non-exact division
    static Polynomial parse(RingPtr ring, const std::string& text);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::uint64_t total_degree() const;         // 0 for the zero polynomial
    std::uint64_t degree_in(std::size_t var) const;
    Rational constant_value() const;            // requires is_constant
    const Monomial& leading_monomial() const;   // requires nonzero
    const Rational& leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(std::uint64_t k) const;
    bool operator==(const Polynomial& o) const;

    // positive rational c such that (*this)/c has coprime integer
    // coefficients; content of 0 is 1
    Rational content() const;
    Polynomial primitive_part() const;

    // exact division; throws error when the division leaves a remainder
    Polynomial divexact(const Polynomial& d) const;

    // primitive gcd with positive leading coefficient; gcd(0,0) = 0
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    // full evaluation
    Rational eval(const std::vector<Rational>& point) const;
    std::uint64_t eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const;

    // replace one variable by a polynomial of the same ring
    Polynomial substitute(std::size_t var, const Polynomial& value) const;

    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
    std::string to_string() const;

private:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    void insert_term(Monomial m, Rational c);    // accumulates, drops zeros
    void require_same_ring(const Polynomial& o) const;

    RingPtr ring_;
    TermMap terms_;
};

} // namespace rsalg
