#include "rsalg/lemmas.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rsalg/catalog.hpp"

namespace rsalg {

namespace {

std::string num(std::size_t i) { return std::to_string(i); }

// symbol universe of each model, z first; the order fixes the ring's
// variable indices and the sampling order of the modular shadow
std::vector<std::string> model_symbols(int lemma, std::size_t n) {
    std::vector<std::string> v{"z"};
    switch (lemma) {
    case 1:
        for (std::size_t i = 1; i <= n; ++i)
            v.push_back("alpha" + num(i));
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                v.push_back("beta" + num(i) + num(j));
        break;
    case 2:
        for (const char* base : {"mu", "nu", "xi"})
            for (std::size_t i = 1; i <= 4; ++i)
                v.push_back(std::string(base) + num(i));
        v.insert(v.end(), {"alpha", "beta", "a11", "a12", "a21", "a22"});
        break;
    case 3:
        for (std::size_t i = 1; i <= n; ++i)
            v.push_back("alpha" + num(i));
        for (std::size_t i = 1; i <= n; ++i)
            v.push_back("beta" + num(i));
        break;
    case 4:
        v.insert(v.end(), {"nu", "alpha1", "alpha2", "beta1", "beta2"});
        break;
    case 5:
        v.insert(v.end(), {"z_alpha", "z_beta", "z_gamma", "z_delta",
                           "alpha11", "alpha12", "alpha21", "alpha22",
                           "beta11", "beta12", "beta21", "beta22"});
        break;
    default:
        throw std::invalid_argument("lemma must be 1..5");
    }
    return v;
}

// build the model from a complete symbol -> value table
LocalizedModel assemble(int lemma, std::size_t n, const RingDesc& ring,
                        std::map<std::string, Scalar> vals) {
    LocalizedModel m;
    m.params = std::move(vals);
    auto val = [&](const std::string& s) -> const Scalar& { return m.param(s); };
    const Scalar z = val("z");
    const Scalar one = Scalar::one(ring);
    auto scaled_basis = [&](const AlgebraPtr& alg, std::size_t slot) {
        return Element::basis(alg, slot).scaled(z);
    };
    switch (lemma) {
    case 1: {
        AlgebraPtr alg = matrix_rs(n, ring);
        auto E = [&](std::size_t i, std::size_t j) { return n + i * n + j; };
        std::vector<Scalar> a(alg->dim(), Scalar::zero(ring));
        std::vector<Scalar> u(alg->dim(), Scalar::zero(ring));
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = val("alpha" + num(i + 1));
            u[E(i, i)] = one;
            m.scaled["f" + num(i + 1)] = scaled_basis(alg, i);
            for (std::size_t j = 0; j < n; ++j) {
                a[E(i, j)] = val("beta" + num(i + 1) + num(j + 1));
                m.scaled["f" + num(i + 1) + num(j + 1)] = scaled_basis(alg, E(i, j));
            }
        }
        m.base = alg;
        m.generic_a = Element(alg, std::move(a));
        m.unit = Element(alg, std::move(u));
        break;
    }
    case 2: {
        BulletTable bullet;
        HadamardMask mask;
        for (std::size_t i = 0; i < 4; ++i) {
            bullet.gamma[i] = val("mu" + num(i + 1)) / z;
            bullet.delta[i] = val("nu" + num(i + 1)) / z;
            mask.epsilon[i] = val("xi" + num(i + 1)) / z;
        }
        AlgebraPtr alg = rs_v2m2(bullet, mask, ring);
        auto E = [](std::size_t i, std::size_t j) { return 2 + 2 * i + j; };
        std::vector<Scalar> u(6, Scalar::zero(ring));
        u[E(0, 0)] = one;
        u[E(1, 1)] = one;
        m.scaled["f1"] = scaled_basis(alg, 0);
        m.scaled["f2"] = scaled_basis(alg, 1);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                m.scaled["f" + num(i + 1) + num(j + 1)] = scaled_basis(alg, E(i, j));
        m.base = alg;
        m.generic_a = Element(alg, {val("alpha"), val("beta"), val("a11"),
                                    val("a12"), val("a21"), val("a22")});
        m.unit = Element(alg, std::move(u));
        break;
    }
    case 3: {
        AlgebraPtr alg = b_nn(n, ring);
        std::vector<Scalar> a(2 * n, Scalar::zero(ring));
        std::vector<Scalar> u(2 * n, Scalar::zero(ring));
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = val("alpha" + num(i + 1));
            a[n + i] = val("beta" + num(i + 1));
            u[i] = one;
            m.scaled["f" + num(i + 1)] = scaled_basis(alg, i);
            m.scaled["g" + num(i + 1)] = scaled_basis(alg, n + i);
        }
        m.base = alg;
        m.generic_a = Element(alg, std::move(a));
        m.unit = Element(alg, std::move(u));
        break;
    }
    case 4: {
        AlgebraPtr alg = b_22(val("nu"), ring);
        m.scaled["b1"] = scaled_basis(alg, 0);
        m.scaled["b2"] = scaled_basis(alg, 1);
        m.scaled["d1"] = scaled_basis(alg, 2);
        m.scaled["d2"] = scaled_basis(alg, 3);
        m.base = alg;
        m.generic_a = Element(alg, {val("alpha1"), val("alpha2"), val("beta1"), val("beta2")});
        m.unit = Element(alg, {one, one, Scalar::zero(ring), Scalar::zero(ring)});
        break;
    }
    case 5: {
        WMatrix w{val("z_alpha") / z, val("z_beta") / z, val("z_gamma") / z, val("z_delta") / z};
        AlgebraPtr alg = b_44(w, ring);
        std::vector<Scalar> a;
        for (const char* base : {"alpha", "beta"})
            for (std::size_t i = 1; i <= 2; ++i)
                for (std::size_t j = 1; j <= 2; ++j)
                    a.push_back(val(std::string(base) + num(i) + num(j)));
        std::vector<Scalar> u(8, Scalar::zero(ring));
        u[0] = one;
        u[3] = one;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                m.scaled["f" + num(i + 1) + num(j + 1)] = scaled_basis(alg, 2 * i + j);
                m.scaled["g" + num(i + 1) + num(j + 1)] = scaled_basis(alg, 4 + 2 * i + j);
            }
        m.base = alg;
        m.generic_a = Element(alg, std::move(a));
        m.unit = Element(alg, std::move(u));
        break;
    }
    default:
        throw std::invalid_argument("lemma must be 1..5");
    }
    return m;
}

// GF(p) instance at one random parameter point; symbols feeding an
// inverse (z itself, the two prefactor denominators, the trace of w)
// are kept nonzero
LocalizedModel sampled_model(int lemma, std::size_t n, std::uint64_t p, std::mt19937_64& rng) {
    RingDesc ring = RingDesc::gf(p);
    auto draw = [&]() { return rng() % p; };
    auto draw_nonzero = [&]() {
        std::uint64_t v = draw();
        while (v == 0)
            v = draw();
        return v;
    };
    std::map<std::string, Scalar> vals;
    for (const auto& s : model_symbols(lemma, n)) {
        bool invertible = s == "z" || (lemma == 2 && (s == "nu1" || s == "mu4"));
        vals.emplace(s, Scalar(PrimeFieldElement(invertible ? draw_nonzero() : draw(), p)));
    }
    if (lemma == 5)
        while ((vals.at("z_alpha").as_gf().value + vals.at("z_delta").as_gf().value) % p == 0)
            vals.at("z_delta") = Scalar(PrimeFieldElement(draw(), p));
    return assemble(lemma, n, ring, std::move(vals));
}

// Collects checked equations into a report; with rep == nullptr only the
// pass/fail tallies are kept (modular shadow mode), and callers skip the
// purely informational evaluations.
struct Recorder {
    const LocalizedModel& m;
    LemmaReport* rep = nullptr;
    std::size_t checked = 0;
    std::size_t failed = 0;

    bool verbose() const { return rep != nullptr; }

    const Scalar& param(const std::string& s) const { return m.param(s); }
    const Element& sym(const std::string& s) const { return m.sym(s); }

    std::string describe(const Element& x) const {
        try {
            return "(" + extract_scalar(x, m).to_string() + ") u";
        } catch (const extraction_error&) {
            return x.to_string();
        }
    }

    bool check(const std::string& label, const Element& lhs, const Element& rhs,
               int zd, bool counted, const std::string& note, std::string expected) {
        bool ok = lhs == rhs;
        if (counted) {
            ++checked;
            if (!ok)
                ++failed;
        }
        if (rep) {
            ExtractionRecord r;
            r.label = label;
            r.expected = std::move(expected);
            r.actual = describe(lhs);
            r.z_degree = zd;
            r.matched = ok;
            r.counted = counted;
            r.note = note;
            rep->records.push_back(std::move(r));
        }
        return ok;
    }

    bool unit_display(const std::string& label, const Element& lhs, const Scalar& coeff,
                      int zd, bool counted = true, const std::string& note = {}) {
        Scalar want = coeff * m.z().pow(zd);
        return check(label, lhs, m.unit.scaled(want), zd, counted, note,
                     rep ? "(" + want.to_string() + ") u" : std::string());
    }

    bool element_display(const std::string& label, const Element& lhs, const Element& rhs,
                         int zd, bool counted = true, const std::string& note = {}) {
        return check(label, lhs, rhs, zd, counted, note,
                     rep ? rhs.to_string() : std::string());
    }

    // value logged without an expectation; never enters the verdict
    void observe(const std::string& label, const Element& x, int zd, const std::string& note) {
        if (!rep)
            return;
        ExtractionRecord r;
        r.label = label;
        r.expected = "(recorded only)";
        r.actual = describe(x);
        r.z_degree = zd;
        r.matched = false;
        r.counted = false;
        r.note = note;
        rep->records.push_back(std::move(r));
    }

    void convention(std::string text) {
        if (rep)
            rep->conventions.push_back(std::move(text));
    }
};

void run_lemma1(Recorder& R, std::size_t n) {
    const Element& a = R.m.generic_a;
    auto F = [&](std::size_t i, std::size_t j) -> const Element& {
        return R.sym("f" + num(i + 1) + num(j + 1));
    };
    R.convention("family 1: sum_i (f_im (f_mm (a f_kk))) f_ki = beta_mk z^4 u for m != k");
    R.convention("family 2: sum_i (f_ik (f_kk ((f_kk (a f_kk)) f_ks))) f_si = beta_kk z^6 u "
                 "for s != k; the extracted scalar does not depend on s");
    R.convention("family 3: sum_i (f_ik (f_km (f_mm ((f_kk (a f_kk)) f_km)))) f_mi = alpha_k z^7 u "
                 "for m != k");
    for (std::size_t mm = 0; mm < n; ++mm)
        for (std::size_t k = 0; k < n; ++k) {
            if (mm == k && !R.verbose())
                continue;
            Element sum = Element::zero(R.m.base);
            for (std::size_t i = 0; i < n; ++i)
                sum = sum + multiply(multiply(F(i, mm), multiply(F(mm, mm), multiply(a, F(k, k)))),
                                     F(k, i));
            std::string where = "m=" + num(mm + 1) + " k=" + num(k + 1);
            if (mm != k)
                R.unit_display("family 1, " + where, sum,
                               R.param("beta" + num(mm + 1) + num(k + 1)), 4);
            else
                R.observe("family 1, " + where, sum, 4,
                          "outside the guard m != k; not a unit multiple");
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t s = 0; s < n; ++s) {
            if (s == k)
                continue;
            Element mid = multiply(F(k, k), multiply(multiply(F(k, k), multiply(a, F(k, k))),
                                                     F(k, s)));
            Element sum = Element::zero(R.m.base);
            for (std::size_t i = 0; i < n; ++i)
                sum = sum + multiply(multiply(F(i, k), mid), F(s, i));
            R.unit_display("family 2, k=" + num(k + 1) + " s=" + num(s + 1), sum,
                           R.param("beta" + num(k + 1) + num(k + 1)), 6);
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t mm = 0; mm < n; ++mm) {
            if (mm == k)
                continue;
            Element core = multiply(multiply(F(k, k), multiply(a, F(k, k))), F(k, mm));
            Element mid = multiply(F(k, mm), multiply(F(mm, mm), core));
            Element sum = Element::zero(R.m.base);
            for (std::size_t i = 0; i < n; ++i)
                sum = sum + multiply(multiply(F(i, k), mid), F(mm, i));
            R.unit_display("family 3, k=" + num(k + 1) + " m=" + num(mm + 1), sum,
                           R.param("alpha" + num(k + 1)), 7);
        }
}

void lemma2_matrix_part(Recorder& R, const Element& X) {
    auto F = [&](std::size_t i, std::size_t j) -> const Element& {
        return R.sym("f" + num(i + 1) + num(j + 1));
    };
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const Scalar& c = R.param("a" + num(i + 1) + num(j + 1));
            std::string si = num(i + 1);
            std::string sj = num(j + 1);
            Element left = multiply(multiply(F(0, i), X), F(j, 0)) +
                           multiply(multiply(F(1, i), X), F(j, 1));
            R.unit_display("(f1" + si + " X) f" + sj + "1 + (f2" + si + " X) f" + sj + "2",
                           left, c, 8);
            Element right = multiply(F(0, i), multiply(X, F(j, 0))) +
                            multiply(F(1, i), multiply(X, F(j, 1)));
            R.unit_display("f1" + si + " (X f" + sj + "1) + f2" + si + " (X f" + sj + "2)",
                           right, c, 8);
        }
    R.convention("matrix coordinates verified under both associations ((f X) f and f (X f))");
}

void run_lemma2(Recorder& R, int which_case) {
    const Element& a = R.m.generic_a;
    const Element& f1 = R.sym("f1");
    const Element& f2 = R.sym("f2");
    auto F = [&](std::size_t i, std::size_t j) -> const Element& {
        return R.sym("f" + num(i + 1) + num(j + 1));
    };
    Scalar z = R.m.z();
    const Scalar& al = R.param("alpha");
    const Scalar& be = R.param("beta");
    R.convention("right-multiplication matrices act on row vectors: row i of [R_v] is e_i * v");
    if (which_case == 1) {
        const Scalar& nu1 = R.param("nu1");
        Scalar pref = -nu1.pow(3).inverse();
        Element Q = F(0, 0).scaled(nu1) - F(1, 1).scaled(nu1) +
                    F(1, 0).scaled(R.param("nu3") - R.param("mu1"));
        Element P1 = multiply(F(1, 0),
                              multiply(multiply(multiply(f1, multiply(a, F(0, 0))), F(1, 1)),
                                       F(1, 0)));
        R.unit_display("chi1 = -(1/nu1^3) (f21 (((f1 (a f11)) f22) f21)) Q, "
                       "Q = nu1 f11 - nu1 f22 + (nu3 - mu1) f21",
                       multiply(P1, Q).scaled(pref), al, 4);
        Element P2 = multiply(
            F(1, 0),
            multiply(multiply(multiply(f1, multiply(multiply(a, F(1, 1)), F(1, 0))), F(1, 1)),
                     F(1, 0)));
        R.unit_display("chi2 = -(1/nu1^3) (f21 (((f1 ((a f22) f21)) f22) f21)) Q",
                       multiply(P2, Q).scaled(pref), be, 5);
        Element X = a.scaled(z.pow(6)) - f1.scaled(al * z.pow(5)) - f2.scaled(be * z.pow(5));
        R.convention("X = a z^6 - alpha z^5 f1 - beta z^5 f2 (the matrix part of a z^6)");
        lemma2_matrix_part(R, X);
    } else {
        const Scalar& mu4 = R.param("mu4");
        Scalar inv3 = mu4.pow(3).inverse();
        Element Q = F(0, 0).scaled(-mu4) + F(1, 1).scaled(mu4) +
                    F(0, 1).scaled(R.param("mu2") - R.param("nu4"));
        Element P1 = multiply(F(0, 1),
                              multiply(multiply(multiply(f2, multiply(a, F(1, 1))), F(0, 0)),
                                       F(0, 1)));
        Element P2 = multiply(
            F(0, 1),
            multiply(multiply(multiply(f2, multiply(multiply(a, F(0, 0)), F(0, 1))), F(0, 0)),
                     F(0, 1)));
        Element E1 = multiply(P1, Q);
        Element E2 = multiply(P2, Q);
        R.unit_display("chi1' = -(1/mu4^3) (f12 (((f2 (a f22)) f11) f12)) Q', "
                       "Q' = -mu4 f11 + mu4 f22 + (mu2 - nu4) f12",
                       E1.scaled(-inv3), be, 4);
        R.unit_display("chi2' = -(1/mu4^3) (f12 (((f2 ((a f11) f12)) f11) f12)) Q'",
                       E2.scaled(-inv3), al, 5);
        if (R.verbose()) {
            R.unit_display("chi1' with prefactor +1/mu4^3", E1.scaled(inv3), -be, 4, false,
                           "sign-flipped prefactor; equals the negated scalar");
            R.unit_display("chi2' with prefactor +1/mu4^3", E2.scaled(inv3), -al, 5, false,
                           "sign-flipped prefactor; equals the negated scalar");
        }
        R.convention("case 2 extractions verified with prefactor -1/mu4^3; "
                     "+1/mu4^3 yields the negated scalars (recorded)");
        Element X = a.scaled(z.pow(6)) - f2.scaled(be * z.pow(5)) - f1.scaled(al * z.pow(5));
        R.convention("X = a z^6 - beta z^5 f2 - alpha z^5 f1 (the matrix part of a z^6)");
        lemma2_matrix_part(R, X);
    }
}

void run_lemma3(Recorder& R, std::size_t n) {
    const AlgebraPtr& alg = R.m.base;
    const Element& a = R.m.generic_a;
    Scalar z = R.m.z();
    auto f = [&](std::size_t i) -> const Element& { return R.sym("f" + num(i)); };
    auto g = [&](std::size_t i) -> const Element& { return R.sym("g" + num(i)); };
    auto alpha = [&](std::size_t i) -> const Scalar& { return R.param("alpha" + num(i)); };
    auto beta = [&](std::size_t i) -> const Scalar& { return R.param("beta" + num(i)); };
    auto e = [&](std::size_t i) { return Element::basis(alg, i - 1); };
    auto zp = [&](std::size_t k) { return z.pow(static_cast<std::int64_t>(k)); };
    // position t-s on the cycle 1..n
    auto cyc = [&](std::size_t t, std::size_t s) { return (t + n - s - 1) % n + 1; };
    // grow the chain c_j = g_j (g_j c_prev) around the cycle from the
    // start position, then form the weighted sum
    auto chain_sum = [&](std::size_t t, const Element& start) {
        std::vector<Element> c(n + 1);
        c[t] = start;
        std::size_t prev = t;
        for (std::size_t s = 1; s < n; ++s) {
            std::size_t j = cyc(t, s);
            c[j] = multiply(g(j), multiply(g(j), c[prev]));
            prev = j;
        }
        Element sum = Element::zero(alg);
        for (std::size_t s = 0; s < n; ++s)
            sum = sum + c[cyc(t, s)].scaled(zp(2 * (n - 1 - s)));
        return sum;
    };
    const int final_deg = static_cast<int>(2 * n);

    std::vector<Element> c(n + 1);
    c[n] = multiply(multiply(f(n), a), f(n));
    R.element_display("c_" + num(n) + " = (f_" + num(n) + " a) f_" + num(n), c[n],
                      e(n).scaled(alpha(n) * zp(2)), 2);
    for (std::size_t i = n; i >= 2; --i) {
        c[i - 1] = multiply(g(i - 1), multiply(g(i - 1), c[i]));
        std::size_t zd = 2 * (n - i + 2);
        R.element_display("c_" + num(i - 1) + " = g_" + num(i - 1) + " (g_" + num(i - 1) +
                              " c_" + num(i) + ")",
                          c[i - 1], e(i - 1).scaled(alpha(n) * zp(zd)), static_cast<int>(zd));
    }
    Element S = Element::zero(alg);
    for (std::size_t i = 1; i <= n; ++i)
        S = S + c[i].scaled(zp(2 * (i - 1)));
    R.unit_display("sum_i c_i z^(2(i-1))", S, alpha(n), final_deg);
    if (R.verbose()) {
        Element gsum = Element::zero(alg);
        Element odd_units = Element::zero(alg);
        for (std::size_t i = 1; i <= n; ++i) {
            gsum = gsum + g(i);
            odd_units = odd_units + Element::basis(alg, n + i - 1);
        }
        R.element_display("(g_1 + ... + g_" + num(n) + ") sum_i c_i z^(2(i-1))",
                          multiply(gsum, S),
                          odd_units.scaled(alpha(n) * zp(2 * n + 1)), final_deg + 1, false,
                          "the extra odd factor makes the product odd, not a unit multiple");
    }
    for (std::size_t t = 1; t < n; ++t)
        R.unit_display("chain from (f_" + num(t) + " a) f_" + num(t),
                       chain_sum(t, multiply(multiply(f(t), a), f(t))), alpha(t), final_deg);
    for (std::size_t i = 1; i <= n; ++i) {
        Element startA = multiply(multiply(f(i), multiply(a, g(i))), f(i));
        R.element_display("(f_" + num(i) + " (a g_" + num(i) + ")) f_" + num(i), startA,
                          e(i).scaled(beta(i) * zp(3)), 3);
        R.unit_display("chain from (f_" + num(i) + " (a g_" + num(i) + ")) f_" + num(i),
                       chain_sum(i, startA), beta(i), final_deg + 1);
        Element startB = multiply(multiply(g(i), a), f(i));
        R.element_display("(g_" + num(i) + " a) f_" + num(i), startB,
                          e(i).scaled(beta(i) * zp(2)), 2);
        R.unit_display("chain from (g_" + num(i) + " a) f_" + num(i),
                       chain_sum(i, startB), beta(i), final_deg);
    }
    R.convention("cyclic shifts of the chain extract every even coordinate");
    R.convention("odd coordinates extract two ways: from a g_i (degree 2n+1) and from "
                 "(g_i a) f_i (degree 2n)");
}

void run_lemma4(Recorder& R) {
    const AlgebraPtr& alg = R.m.base;
    const Element& a = R.m.generic_a;
    Scalar z = R.m.z();
    const Element& b1 = R.sym("b1");
    const Element& b2 = R.sym("b2");
    const Element& d1 = R.sym("d1");
    const Element& d2 = R.sym("d2");
    const Scalar& a1 = R.param("alpha1");
    const Scalar& a2 = R.param("alpha2");
    const Scalar& be1 = R.param("beta1");
    const Scalar& be2 = R.param("beta2");
    Element s12 = b1 + b2;
    auto e = [&](std::size_t k) { return Element::basis(alg, k); };
    Element core1 = multiply(b1, multiply(a, b1));
    Element core2 = multiply(b2, multiply(a, b2));
    Element core3 = multiply(b1, multiply(a, b2));
    Element core4 = multiply(b2, multiply(a, b1));
    if (R.verbose()) {
        R.element_display("(b1 + b2 + d2)(b1 (a b1))", multiply(s12 + d2, core1),
                          (e(0) + e(3)).scaled(a1 * z.pow(3)), 3, false,
                          "even plus odd mix; not a unit multiple");
        R.element_display("(b1 + b2 + d1)(b2 (a b2))", multiply(s12 + d1, core2),
                          (e(1) + e(2)).scaled(a2 * z.pow(3)), 3, false,
                          "even plus odd mix; not a unit multiple");
        R.element_display("(b1 + b2 + d2)((b1 (a b2)) d1)",
                          multiply(s12 + d2, multiply(core3, d1)),
                          (e(0) + e(3)).scaled(be1 * z.pow(4)), 4, false,
                          "even plus odd mix; not a unit multiple");
        R.element_display("(b1 + b2 + d1)((b2 (a b1)) d1)",
                          multiply(s12 + d1, multiply(core4, d1)),
                          (e(1) + e(2)).scaled(be2 * z.pow(4)), 4, false,
                          "even plus odd mix; not a unit multiple");
    }
    R.unit_display("(b1 + b2)(b1 (a b1)) + (d2 (a b1)) d1",
                   multiply(s12, core1) + multiply(multiply(d2, multiply(a, b1)), d1), a1, 3);
    R.unit_display("(b1 + b2)(b2 (a b2)) + (d1 (a b2)) d2",
                   multiply(s12, core2) + multiply(multiply(d1, multiply(a, b2)), d2), a2, 3);
    R.unit_display("(b1 + b2)((b1 (a b2)) d1) + (d2 (b1 (a b2)))(b1 + b2)",
                   multiply(s12, multiply(core3, d1)) + multiply(multiply(d2, core3), s12),
                   be1, 4);
    R.unit_display("(b1 + b2)((b2 (a b1)) d1) + (d1 (b2 (a b1)))(b1 + b2)",
                   multiply(s12, multiply(core4, d1)) + multiply(multiply(d1, core4), s12),
                   be2, 4);
    R.convention("identities hold identically in the structure parameter nu");
    R.convention("three-summand left factors mix even and odd output; the verified forms "
                 "split the product into its even and odd contributions");
}

void run_lemma5(Recorder& R) {
    const AlgebraPtr& alg = R.m.base;
    const Element& a = R.m.generic_a;
    const Element& f11 = R.sym("f11");
    const Element& f12 = R.sym("f12");
    const Element& f21 = R.sym("f21");
    const Element& f22 = R.sym("f22");
    const Element& g11 = R.sym("g11");
    const Element& g22 = R.sym("g22");
    Scalar pref = R.param("z_alpha") + R.param("z_delta");

    Element Y = multiply(f11, multiply(multiply(f11, multiply(a, f11)), f11));
    Element Yf = multiply(Y, f12);
    bool ok1 = R.unit_display("f21 (Y f12) + (Y f12) f21, Y = f11 ((f11 (a f11)) f11)",
                              multiply(f21, Yf) + multiply(Yf, f21), R.param("alpha11"), 6);
    Element W = multiply(multiply(multiply(f12, multiply(a, f12)), f22), f21);
    Element Wf = multiply(W, f12);
    bool ok2 = R.unit_display("f21 (W f12) + (W f12) f21, W = ((f12 (a f12)) f22) f21",
                              multiply(f21, Wf) + multiply(Wf, f21), R.param("alpha21"), 6,
                              true, "extracts the (2,1) coordinate");
    Element V = multiply(multiply(multiply(f21, multiply(a, f21)), f11), f12);
    Element Vf = multiply(V, f21);
    bool ok3 = R.unit_display("f12 (V f21) + (V f21) f12, V = ((f21 (a f21)) f11) f12",
                              multiply(f12, Vf) + multiply(Vf, f12), R.param("alpha12"), 6,
                              true, "extracts the (1,2) coordinate");
    Element U = multiply(f22, multiply(multiply(f22, multiply(a, f22)), f22));
    Element Uf = multiply(U, f21);
    bool ok4 = R.unit_display("(U f21) f12 + f12 (U f21), U = f22 ((f22 (a f22)) f22)",
                              multiply(Uf, f12) + multiply(f12, Uf), R.param("alpha22"), 6);

    auto bword = [&](const Element& gg, const Element& ff, const Element& t1,
                     const Element& t2, const Element& outer) {
        Element ct = multiply(multiply(gg, multiply(a, ff)), t1);
        return (multiply(ct, t2) + multiply(outer, ct)).scaled(pref);
    };
    R.unit_display("(z_alpha + z_delta)[((g22 (a f22)) f21) f12 + f12 ((g22 (a f22)) f21)]",
                   bword(g22, f22, f21, f12, f12), R.param("beta11"), 5);
    if (R.verbose())
        R.element_display("(z_alpha + z_delta)[((g22 (a f22)) f12) f21 + f21 ((g22 (a f22)) f12)]",
                          bword(g22, f22, f12, f21, f21), Element::zero(alg), 0, false,
                          "vanishes identically; swapping f12 and f21 recovers beta11 z^5 u");
    R.unit_display("(z_alpha + z_delta)[((g11 (a f21)) f12) f21 + f21 ((g11 (a f21)) f12)]",
                   bword(g11, f21, f12, f21, f21), -R.param("beta12"), 5);
    R.unit_display("(z_alpha + z_delta)[((g22 (a f12)) f21) f12 + f12 ((g22 (a f12)) f21)]",
                   bword(g22, f12, f21, f12, f12), -R.param("beta21"), 5);
    R.unit_display("(z_alpha + z_delta)[((g11 (a f11)) f12) f21 + f21 ((g11 (a f11)) f12)]",
                   bword(g11, f11, f12, f21, f21), R.param("beta22"), 5);
    R.convention("even coordinates extract with exponent 6; odd coordinates with exponent 5 and "
                 "signs (+, -, -, +)");
    R.convention("the second and third even words extract the transposed coordinates "
                 "(alpha21 and alpha12)");
    if (R.verbose() && ok1 && ok2 && ok3 && ok4)
        R.convention("even extraction defects vanish identically, so they involve neither "
                     "z_beta nor z_gamma");
}

void run_lemma(Recorder& R, int lemma, std::size_t n, int which_case) {
    switch (lemma) {
    case 1: run_lemma1(R, n); break;
    case 2: run_lemma2(R, which_case); break;
    case 3: run_lemma3(R, n); break;
    case 4: run_lemma4(R); break;
    case 5: run_lemma5(R); break;
    default: throw std::invalid_argument("lemma must be 1..5");
    }
}

LemmaReport symbolic_report(int lemma, std::size_t n, int which_case) {
    LocalizedModel m = build_localized_model(lemma, n);
    LemmaReport rep;
    rep.lemma = lemma;
    rep.model = m.base->name() + " over " + m.base->ring().to_string();
    Recorder R{m, &rep};
    run_lemma(R, lemma, n, which_case);
    rep.pass = R.checked > 0 && R.failed == 0;
    return rep;
}

} // namespace

const Scalar& LocalizedModel::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end())
        throw std::out_of_range("unknown model symbol: " + name);
    return it->second;
}

const Element& LocalizedModel::sym(const std::string& name) const {
    auto it = scaled.find(name);
    if (it == scaled.end())
        throw std::out_of_range("unknown scaled generator: " + name);
    return it->second;
}

LocalizedModel build_localized_model(int lemma, std::size_t n) {
    if (lemma < 1 || lemma > 5)
        throw std::invalid_argument("lemma must be 1..5");
    if ((lemma == 1 || lemma == 3) && n < 2)
        throw std::invalid_argument("model needs n >= 2");
    std::vector<std::string> names = model_symbols(lemma, n);
    RingDesc ring = RingDesc::fraction(names);
    std::map<std::string, Scalar> vals;
    for (std::size_t i = 0; i < names.size(); ++i)
        vals.emplace(names[i], Scalar(RationalFunction::variable(ring.ring, i)));
    return assemble(lemma, n, ring, std::move(vals));
}

Scalar extract_scalar(const Element& x, const LocalizedModel& model) {
    const std::vector<Scalar>& u = model.unit.coords();
    const std::vector<Scalar>& xc = x.coords();
    if (xc.size() != u.size())
        throw std::invalid_argument("element does not live in the model algebra");
    std::size_t lead = u.size();
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead == u.size())
        throw std::logic_error("model unit is zero");
    Scalar c = xc[lead] / u[lead];
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!(xc[i] == u[i] * c))
            bad.push_back(i);
    if (!bad.empty()) {
        std::string msg = "not a scalar multiple of the unit; offending coordinates:";
        for (std::size_t i : bad)
            msg += " " + model.base->labels()[i];
        throw extraction_error(msg, std::move(bad));
    }
    return c;
}

std::size_t LemmaReport::counted_displays() const {
    std::size_t k = 0;
    for (const auto& r : records)
        if (r.counted)
            ++k;
    return k;
}

std::size_t LemmaReport::findings() const { return records.size() - counted_displays(); }

std::string LemmaReport::to_text() const {
    std::ostringstream os;
    os << "lemma " << lemma << ": " << (pass ? "PASS" : "FAIL") << "  ("
       << counted_displays() << " displays, " << findings() << " findings)\n";
    os << "  model: " << model << "\n";
    for (const auto& c : conventions)
        os << "  note: " << c << "\n";
    for (const auto& r : records) {
        os << (r.counted ? (r.matched ? "  ok    " : "  FAIL  ") : "  info  ") << r.label
           << "\n        = " << r.expected;
        if (!r.matched || !r.counted)
            os << "   [actual: " << r.actual << "]";
        if (!r.note.empty())
            os << "   (" << r.note << ")";
        os << "\n";
    }
    return os.str();
}

LemmaReport verify_lemma1(std::size_t n) { return symbolic_report(1, n, 0); }

LemmaReport verify_lemma2(int which_case) {
    if (which_case != 1 && which_case != 2)
        throw std::invalid_argument("case must be 1 or 2");
    return symbolic_report(2, 2, which_case);
}

LemmaReport verify_lemma3(std::size_t n) { return symbolic_report(3, n, 0); }

LemmaReport verify_lemma4() { return symbolic_report(4, 2, 0); }

LemmaReport verify_lemma5() { return symbolic_report(5, 2, 0); }

ShadowReport modular_shadow(int lemma, std::size_t n_or_case, std::uint64_t prime,
                            std::size_t samples, std::uint64_t seed) {
    if (lemma < 1 || lemma > 5)
        throw std::invalid_argument("lemma must be 1..5");
    if (lemma == 2 && n_or_case != 1 && n_or_case != 2)
        throw std::invalid_argument("case must be 1 or 2");
    if ((lemma == 1 || lemma == 3) && n_or_case < 2)
        throw std::invalid_argument("model needs n >= 2");
    ShadowReport out;
    out.lemma = lemma;
    out.arg = n_or_case;
    out.prime = prime;
    out.samples = samples;
    out.seed = seed;
    std::size_t model_n = (lemma == 1 || lemma == 3) ? n_or_case : 2;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < samples; ++t) {
        LocalizedModel m = sampled_model(lemma, model_n, prime, rng);
        Recorder R{m, nullptr};
        run_lemma(R, lemma, model_n, static_cast<int>(n_or_case));
        out.displays = R.checked;
        out.failures += R.failed;
    }
    out.pass = samples > 0 && out.failures == 0;
    return out;
}

} // namespace rsalg
