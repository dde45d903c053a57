#include "rsalg/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rsalg/errors.hpp"
#include "rsalg/primefield.hpp"
#include "rsalg/ratfunc.hpp"

namespace rsalg {

std::shared_ptr<const PolyRing> PolyRing::make(std::vector<std::string> vars) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty())
            throw validation_error("empty variable name");
        for (char c : v)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw validation_error("bad variable name: '" + v + "'");
        if (std::isdigit(static_cast<unsigned char>(v.front())))
            throw validation_error("variable name starts with a digit: '" + v + "'");
        if (!seen.insert(v).second)
            throw validation_error("duplicate variable name: '" + v + "'");
    }
    return std::shared_ptr<const PolyRing>(new PolyRing(std::move(vars)));
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

Polynomial Polynomial::zero(RingPtr ring) {
    return Polynomial(std::move(ring));
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0)
        p.terms_.emplace(Monomial{std::vector<std::uint32_t>(p.ring_->nvars(), 0)}, c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    Polynomial p(std::move(ring));
    if (index >= p.ring_->nvars())
        throw validation_error("variable index out of range");
    Monomial m{std::vector<std::uint32_t>(p.ring_->nvars(), 0)};
    m.exps[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial p(std::move(ring));
    if (m.exps.size() != p.ring_->nvars())
        throw validation_error("monomial length mismatch");
    if (c != 0)
        p.terms_.emplace(std::move(m), c);
    return p;
}

Polynomial Polynomial::parse(RingPtr ring, const std::string& text) {
    RationalFunction f = RationalFunction::parse(std::move(ring), text);
    if (!f.is_polynomial())
        throw parse_error("expression is not polynomial: '" + text + "'");
    return f.as_polynomial();
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.degree() == 0;
}

std::uint64_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint64_t Polynomial::degree_in(std::size_t var) const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max<std::uint64_t>(d, m.exps.at(var));
    return d;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant())
        throw error("constant_value on nonconstant polynomial");
    return terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty())
        throw error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty())
        throw error("leading term of zero polynomial");
    return terms_.begin()->second;
}

void Polynomial::insert_term(Monomial m, Rational c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(std::move(m), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Polynomial::require_same_ring(const Polynomial& o) const {
    if (ring_ == o.ring_) return;
    if (ring_ && o.ring_ && ring_->same_as(*o.ring_)) return;
    throw domain_mismatch("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.insert_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.insert_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.exps.size(); ++i)
                m.exps[i] += mb.exps[i];
            r.insert_term(std::move(m), ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_)
        r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
    Polynomial acc = Polynomial::constant(ring_, Rational(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    require_same_ring(o);
    return terms_ == o.terms_;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(1);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_class n = abs(c.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(Rational(1) / content());
}

Polynomial Polynomial::divexact(const Polynomial& d) const {
    require_same_ring(d);
    if (d.is_zero())
        throw division_by_zero();
    Polynomial q(ring_);
    Polynomial r = *this;
    const Monomial& dm = d.leading_monomial();
    const Rational& dc = d.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        Monomial t{std::vector<std::uint32_t>(rm.exps.size(), 0)};
        for (std::size_t i = 0; i < rm.exps.size(); ++i) {
            if (rm.exps[i] < dm.exps[i])
                throw error("inexact polynomial division");
            t.exps[i] = rm.exps[i] - dm.exps[i];
        }
        Polynomial step = Polynomial::monomial(ring_, std::move(t), r.leading_coefficient() / dc);
        q = q + step;
        r = r - step * d;
    }
    return q;
}

namespace {

// coefficient of v^k, with v's exponent zeroed out
Polynomial coeff_of_power(const Polynomial& p, std::size_t v, std::uint64_t k) {
    Polynomial r = Polynomial::zero(p.ring());
    for (const auto& [m, c] : p.terms()) {
        if (m.exps[v] == k) {
            Monomial m2 = m;
            m2.exps[v] = 0;
            r = r + Polynomial::monomial(p.ring(), std::move(m2), c);
        }
    }
    return r;
}

Polynomial times_var_power(const Polynomial& p, std::size_t v, std::uint64_t k) {
    Polynomial r = Polynomial::zero(p.ring());
    for (const auto& [m, c] : p.terms()) {
        Monomial m2 = m;
        m2.exps[v] += static_cast<std::uint32_t>(k);
        r = r + Polynomial::monomial(p.ring(), std::move(m2), c);
    }
    return r;
}

// gcd of the polynomial coefficients of p viewed in v
Polynomial content_in(const Polynomial& p, std::size_t v) {
    Polynomial g = Polynomial::zero(p.ring());
    for (std::uint64_t k = 0; k <= p.degree_in(v); ++k) {
        Polynomial c = coeff_of_power(p, v, k);
        if (!c.is_zero()) {
            g = Polynomial::gcd(g, c);
            if (g.is_constant()) break;
        }
    }
    return g;
}

// pseudo-remainder of f by g in the variable v
Polynomial prem(Polynomial f, const Polynomial& g, std::size_t v) {
    const std::uint64_t dg = g.degree_in(v);
    Polynomial lg = coeff_of_power(g, v, dg);
    while (!f.is_zero() && f.degree_in(v) >= dg) {
        std::uint64_t df = f.degree_in(v);
        Polynomial lf = coeff_of_power(f, v, df);
        f = lg * f - times_var_power(lf * g, v, df - dg);
    }
    return f;
}

Polynomial normalize_sign(Polynomial p) {
    if (!p.is_zero() && p.leading_coefficient() < 0)
        return -p;
    return p;
}

// dense univariate gcd over GF(p); coefficient index = exponent
std::vector<std::uint64_t> univ_gcd_mod(std::vector<std::uint64_t> a,
                                        std::vector<std::uint64_t> b,
                                        std::uint64_t p) {
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::uint64_t lb = mod_inv(b.back(), p);
        while (a.size() >= b.size()) {
            std::uint64_t f = mod_mul(a.back(), lb, p);
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i + 1 < b.size(); ++i)
                a[off + i] = mod_sub(a[off + i], mod_mul(f, b[i], p), p);
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

// image of p in GF(prime)[v] with every other variable pinned to point[i]
std::vector<std::uint64_t> univ_image_mod(const Polynomial& p, std::size_t v,
                                          const std::vector<std::uint64_t>& point,
                                          std::uint64_t prime) {
    std::vector<std::uint64_t> img(p.degree_in(v) + 1, 0);
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t t = rational_mod(c, prime);
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (i != v && m.exps[i] > 0)
                t = mod_mul(t, mod_pow(point[i], m.exps[i], prime), prime);
        img[m.exps[v]] = mod_add(img[m.exps[v]], t, prime);
    }
    return img;
}

// certified upper bound for the degree of gcd(a, b) in v: when the leading
// coefficients of both inputs survive a specialization of the other
// variables, the specialized gcd degree can only overestimate.  Returns
// nothing when no usable specialization was found.
std::optional<std::uint64_t> modular_degree_bound(const Polynomial& a, const Polynomial& b,
                                                  std::size_t v) {
    const std::uint64_t da = a.degree_in(v);
    const std::uint64_t db = b.degree_in(v);
    std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(v) * 0xbf58476d1ce4e5b9ull);
    for (std::uint64_t prime : {1000003ull, 998244353ull, 2147483629ull}) {
        for (int attempt = 0; attempt < 4; ++attempt) {
            std::vector<std::uint64_t> point(a.ring()->nvars(), 1);
            for (std::size_t i = 0; i < point.size(); ++i) {
                if (i == v) continue;
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                point[i] = 1 + (state >> 33) % (prime - 1);
            }
            std::vector<std::uint64_t> ia, ib;
            try {
                ia = univ_image_mod(a, v, point, prime);
                ib = univ_image_mod(b, v, point, prime);
            } catch (const characteristic_error&) {
                break;   // coefficient denominator hit the prime, try the next one
            }
            if (ia[da] == 0 || ib[db] == 0) continue;
            auto g = univ_gcd_mod(std::move(ia), std::move(ib), prime);
            return g.empty() ? 0 : g.size() - 1;
        }
    }
    return std::nullopt;
}

// coefficient slices of p relative to the variable set keep: terms are
// grouped by their monomial outside keep, so each slice lives in the keep
// variables only and any common divisor of p in those variables divides
// every slice
void collect_slices(const Polynomial& p, const std::vector<bool>& keep,
                    std::map<std::vector<std::uint32_t>, Polynomial>& out) {
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> key(m.exps.size(), 0);
        Monomial inner = m;
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (!keep[i]) {
                key[i] = m.exps[i];
                inner.exps[i] = 0;
            }
        auto it = out.find(key);
        if (it == out.end())
            it = out.emplace(std::move(key), Polynomial::zero(p.ring())).first;
        it->second = it->second + Polynomial::monomial(p.ring(), std::move(inner), c);
    }
}

// primitive PRS in the chosen main variable
Polynomial gcd_prs(const Polynomial& a, const Polynomial& b, std::size_t v) {
    Polynomial ca = content_in(a, v);
    Polynomial cb = content_in(b, v);
    Polynomial r0 = ca.is_constant() ? a : a.divexact(ca);
    Polynomial r1 = cb.is_constant() ? b : b.divexact(cb);
    if (r0.degree_in(v) < r1.degree_in(v))
        std::swap(r0, r1);
    while (!r1.is_zero()) {
        Polynomial r = prem(r0, r1, v);
        r0 = std::move(r1);
        if (r.is_zero()) {
            r1 = std::move(r);
        } else {
            Polynomial cr = content_in(r, v);
            r1 = cr.is_constant() ? std::move(r) : r.divexact(cr);
        }
    }
    Polynomial g = r0.depends_on(v) ? r0.divexact(content_in(r0, v))
                                    : Polynomial::constant(a.ring(), Rational(1));
    return normalize_sign((Polynomial::gcd(ca, cb) * g).primitive_part());
}

} // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    if (a.is_zero()) return normalize_sign(b.primitive_part());
    if (b.is_zero()) return normalize_sign(a.primitive_part());

    Polynomial pa = normalize_sign(a.primitive_part());
    Polynomial pb = normalize_sign(b.primitive_part());
    const Polynomial one = Polynomial::constant(a.ring(), Rational(1));
    if (pa.is_constant() || pb.is_constant()) return one;
    if (pa == pb) return pa;

    const std::size_t n = a.ring()->nvars();
    if (pa.terms().size() == 1 || pb.terms().size() == 1) {
        // against a monomial, only the shared monomial part survives
        std::vector<std::uint32_t> e(n, std::numeric_limits<std::uint32_t>::max());
        for (const Polynomial* p : {&pa, &pb})
            for (const auto& [m, c] : p->terms())
                for (std::size_t i = 0; i < n; ++i)
                    e[i] = std::min(e[i], m.exps[i]);
        return Polynomial::monomial(a.ring(), Monomial{std::move(e)}, Rational(1));
    }

    // per-variable degree bounds for the gcd, tightened modularly
    std::vector<std::uint64_t> bound(n, 0);
    std::vector<bool> keep(n, false);
    std::size_t kept = 0;
    for (std::size_t v = 0; v < n; ++v) {
        bound[v] = std::min(pa.degree_in(v), pb.degree_in(v));
        if (bound[v] == 0) continue;
        if (auto mb = modular_degree_bound(pa, pb, v))
            bound[v] = std::min(bound[v], *mb);
        if (bound[v] > 0) {
            keep[v] = true;
            ++kept;
        }
    }
    if (kept == 0) return one;

    // the gcd involves only the kept variables, so it divides every
    // coefficient slice taken over the others
    bool outside = false;
    for (const Polynomial* p : {&pa, &pb}) {
        for (const auto& [m, c] : p->terms())
            for (std::size_t i = 0; i < n; ++i)
                if (!keep[i] && m.exps[i] > 0) {
                    outside = true;
                    break;
                }
        if (outside) break;
    }
    if (outside) {
        std::map<std::vector<std::uint32_t>, Polynomial> slices;
        collect_slices(pa, keep, slices);
        collect_slices(pb, keep, slices);
        Polynomial g = Polynomial::zero(a.ring());
        for (auto& [key, s] : slices) {
            g = Polynomial::gcd(g, s);
            if (g.is_constant()) return one;
        }
        return normalize_sign(g.primitive_part());
    }

    // cheapest main variable first
    std::size_t v = 0;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i] && bound[i] < best) {
            best = bound[i];
            v = i;
        }
    return gcd_prs(pa, pb, v);
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (point.size() != ring_->nvars())
        throw incomplete_assignment("evaluation point has wrong length");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            for (std::uint32_t k = 0; k < m.exps[i]; ++k)
                t *= point[i];
        }
        acc += t;
    }
    return acc;
}

std::uint64_t Polynomial::eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const {
    if (point.size() != ring_->nvars())
        throw incomplete_assignment("evaluation point has wrong length");
    std::uint64_t acc = 0;
    for (const auto& [m, c] : terms_) {
        std::uint64_t t = rational_mod(c, p);
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i] > 0)
                t = mod_mul(t, mod_pow(point[i] % p, m.exps[i], p), p);
        acc = mod_add(acc, t, p);
    }
    return acc;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
    require_same_ring(value);
    Polynomial acc = Polynomial::zero(ring_);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        std::uint32_t e = rest.exps.at(var);
        rest.exps[var] = 0;
        acc = acc + Polynomial::monomial(ring_, std::move(rest), c) * value.pow(e);
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational ac = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string body;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += ring_->var(i);
            if (m.exps[i] > 1)
                body += "^" + std::to_string(m.exps[i]);
        }
        if (body.empty()) {
            out += rsalg::to_string(ac);
        } else if (ac == 1) {
            out += body;
        } else {
            out += rsalg::to_string(ac) + "*" + body;
        }
    }
    return out;
}

} // namespace rsalg
