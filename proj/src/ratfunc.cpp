#include "rsalg/ratfunc.hpp"

#include <cctype>

#include "rsalg/errors.hpp"
#include "rsalg/primefield.hpp"

namespace rsalg {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

RationalFunction RationalFunction::zero(RingPtr ring) {
    return from_polynomial(Polynomial::zero(std::move(ring)));
}

RationalFunction RationalFunction::constant(RingPtr ring, const Rational& c) {
    return from_polynomial(Polynomial::constant(std::move(ring), c));
}

RationalFunction RationalFunction::variable(RingPtr ring, std::size_t index) {
    return from_polynomial(Polynomial::variable(std::move(ring), index));
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
    RationalFunction f;
    f.den_ = Polynomial::constant(p.ring(), Rational(1));
    f.num_ = std::move(p);
    return f;
}

void RationalFunction::canonicalize() {
    if (den_.is_zero())
        throw division_by_zero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.ring(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    make_monic();
}

void RationalFunction::make_monic() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.ring(), Rational(1));
        return;
    }
    const Rational& lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool RationalFunction::is_polynomial() const {
    return den_.is_constant() && !den_.is_zero();
}

Polynomial RationalFunction::as_polynomial() const {
    if (!is_polynomial())
        throw error("rational function with nontrivial denominator");
    return num_.scaled(Rational(1) / den_.constant_value());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

// both operands are already reduced, so cancellation only ever happens
// against the small shared parts (Knuth 4.5.1); this keeps the gcd calls
// far below the size of a naive cross-multiply
RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    RationalFunction r;
    if (den_ == o.den_) {
        Polynomial t = num_ + o.num_;
        if (den_.is_constant() || t.is_zero()) {
            r.num_ = std::move(t);
            r.den_ = den_;
        } else {
            Polynomial g1 = Polynomial::gcd(t, den_);
            if (g1.is_constant()) {
                r.num_ = std::move(t);
                r.den_ = den_;
            } else {
                r.num_ = t.divexact(g1);
                r.den_ = den_.divexact(g1);
            }
        }
        r.make_monic();
        return r;
    }
    Polynomial g0 = Polynomial::gcd(den_, o.den_);
    if (g0.is_constant()) {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
    } else {
        Polynomial t = num_ * o.den_.divexact(g0) + o.num_ * den_.divexact(g0);
        Polynomial g1 = Polynomial::gcd(t, g0);
        if (g1.is_constant()) {
            r.num_ = std::move(t);
            r.den_ = den_.divexact(g0) * o.den_;
        } else {
            r.num_ = t.divexact(g1);
            r.den_ = den_.divexact(g0) * o.den_.divexact(g1);
        }
    }
    r.make_monic();
    return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero())
        return zero(ring());
    Polynomial g1 = Polynomial::gcd(num_, o.den_);
    Polynomial g2 = Polynomial::gcd(o.num_, den_);
    RationalFunction r;
    r.num_ = (g1.is_constant() ? num_ : num_.divexact(g1)) *
             (g2.is_constant() ? o.num_ : o.num_.divexact(g2));
    r.den_ = (g2.is_constant() ? den_ : den_.divexact(g2)) *
             (g1.is_constant() ? o.den_ : o.den_.divexact(g1));
    r.make_monic();
    return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero())
        throw division_by_zero();
    if (is_zero())
        return zero(ring());
    Polynomial g1 = Polynomial::gcd(num_, o.num_);
    Polynomial g2 = Polynomial::gcd(o.den_, den_);
    RationalFunction r;
    r.num_ = (g1.is_constant() ? num_ : num_.divexact(g1)) *
             (g2.is_constant() ? o.den_ : o.den_.divexact(g2));
    r.den_ = (g2.is_constant() ? den_ : den_.divexact(g2)) *
             (g1.is_constant() ? o.num_ : o.num_.divexact(g1));
    r.make_monic();
    return r;
}

RationalFunction RationalFunction::pow(std::int64_t k) const {
    if (k < 0) {
        if (is_zero())
            throw division_by_zero();
        RationalFunction inv;
        inv.num_ = den_;
        inv.den_ = num_;
        inv.make_monic();
        return inv.pow(-k);
    }
    RationalFunction r;
    r.num_ = num_.pow(static_cast<std::uint64_t>(k));
    r.den_ = den_.pow(static_cast<std::uint64_t>(k));
    r.make_monic();
    return r;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

Rational RationalFunction::eval(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0)
        throw division_by_zero("pole at evaluation point");
    return num_.eval(point) / d;
}

std::uint64_t RationalFunction::eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const {
    std::uint64_t d = den_.eval_mod(point, p);
    if (d == 0)
        throw division_by_zero("pole at evaluation point mod " + std::to_string(p));
    return mod_mul(num_.eval_mod(point, p), mod_inv(d, p), p);
}

RationalFunction RationalFunction::substitute(std::size_t var, const RationalFunction& value) const {
    // write num and den as sums over powers of var and recombine
    RationalFunction acc_num = RationalFunction::zero(ring());
    RationalFunction acc_den = RationalFunction::zero(ring());
    auto apply = [&](const Polynomial& p) {
        RationalFunction acc = RationalFunction::zero(ring());
        for (const auto& [m, c] : p.terms()) {
            Monomial rest = m;
            std::uint32_t e = rest.exps.at(var);
            rest.exps[var] = 0;
            auto base = RationalFunction::from_polynomial(Polynomial::monomial(p.ring(), std::move(rest), c));
            acc = acc + base * value.pow(e);
        }
        return acc;
    };
    acc_num = apply(num_);
    acc_den = apply(den_);
    return acc_num / acc_den;
}

std::string RationalFunction::to_string() const {
    if (is_polynomial() && den_.constant_value() == 1)
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

// recursive-descent parser for the scalar expression grammar
struct Parser {
    RingPtr ring;
    std::string s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = unary();
        for (;;) {
            if (eat('*')) acc = acc * unary();
            else if (eat('/')) acc = acc / unary();
            else return acc;
        }
    }

    RationalFunction unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected integer exponent");
            std::int64_t e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                e = e * 10 + (s[pos] - '0');
                if (e > 1'000'000) fail("exponent too large");
                ++pos;
            }
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    RationalFunction atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RationalFunction inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits += s[pos++];
            return RationalFunction::constant(ring, Rational(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                name += s[pos++];
            auto idx = ring->index_of(name);
            if (!idx) fail("unknown variable '" + name + "'");
            return RationalFunction::variable(ring, *idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

std::string normalize_minus(const std::string& in) {
    // accept U+2212 as a minus sign
    std::string out;
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
            static_cast<unsigned char>(in[i + 1]) == 0x88 &&
            static_cast<unsigned char>(in[i + 2]) == 0x92) {
            out += '-';
            i += 2;
        } else {
            out += in[i];
        }
    }
    return out;
}

} // namespace

RationalFunction RationalFunction::parse(RingPtr ring, const std::string& text) {
    Parser p{std::move(ring), normalize_minus(text)};
    RationalFunction r = p.expr();
    p.skip_ws();
    if (p.pos != p.s.size())
        p.fail("trailing input");
    return r;
}

} // namespace rsalg
