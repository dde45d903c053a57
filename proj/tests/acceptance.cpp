// End-to-end acceptance runner: prints one pass/fail line per criterion
// and exits with the number of failed criteria. Criterion 10 needs the
// CLI binary path as argv[1]; without it that criterion is a failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "rsalg/catalog.hpp"
#include "rsalg/identities.hpp"
#include "rsalg/lemmas.hpp"
#include "rsalg/serialize.hpp"
#include "rsalg/structure.hpp"

using namespace rsalg;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    double seconds = 0.0;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            notes.push_back(what);
        }
    }
    void budget(double limit, const std::string& what) {
        if (seconds > limit)
            expect(false, what + ": " + std::to_string(seconds) + "s over the " +
                              std::to_string(limit) + "s budget");
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<int, std::size_t> degree_counts(const LemmaReport& r) {
    std::map<int, std::size_t> m;
    for (const auto& rec : r.records)
        if (rec.counted)
            ++m[rec.z_degree];
    return m;
}

bool central_on_all_pairs(const AlgebraPtr& alg, const Element& z) {
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        Element x = Element::basis(alg, i);
        if (!commutator(x, z).is_zero())
            return false;
        for (std::size_t j = 0; j < alg->dim(); ++j) {
            Element y = Element::basis(alg, j);
            if (!associator(z, x, y).is_zero() || !associator(x, z, y).is_zero() ||
                !associator(x, y, z).is_zero())
                return false;
        }
    }
    return true;
}

bool same_spec(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a->name() != b->name() || !(a->ring() == b->ring()) || a->labels() != b->labels() ||
        a->parity() != b->parity() || a->constants().size() != b->constants().size())
        return false;
    for (const auto& [ij, terms] : a->constants()) {
        const auto& other = b->product(ij.first, ij.second);
        if (terms.size() != other.size())
            return false;
        for (std::size_t t = 0; t < terms.size(); ++t)
            if (terms[t].k != other[t].k || !(terms[t].c == other[t].c))
                return false;
    }
    return true;
}

std::string capture(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        out.append(buf, n);
    pclose(p);
    return out;
}

std::vector<AlgebraPtr> catalog_instances() {
    return {matrix_rs(2, RingDesc::rationals()), rs_v2m2_symbolic(),
            b_nn(2, RingDesc::rationals()), b_22_symbolic(), b_44_symbolic()};
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::vector<Criterion> cs;

    {
        Criterion c{1, "lemma 1 displays for n = 2, 3, 4 with exponents 4, 6, 7"};
        for (std::size_t n : {2, 3, 4}) {
            auto t0 = std::chrono::steady_clock::now();
            LemmaReport r = verify_lemma1(n);
            double dt = seconds_since(t0);
            c.seconds += dt;
            c.expect(r.pass, "n=" + std::to_string(n) + " failed");
            auto deg = degree_counts(r);
            std::size_t want = n * (n - 1);
            c.expect(deg == std::map<int, std::size_t>{{4, want}, {6, want}, {7, want}},
                     "n=" + std::to_string(n) + " exponent multiset off");
            c.expect(dt < 10.0, "n=" + std::to_string(n) + " over the 10s budget");
        }
        cs.push_back(std::move(c));
    }

    {
        Criterion c{2, "lemma 2 displays, both cases fully symbolic, exponents 4, 5, 8"};
        auto t0 = std::chrono::steady_clock::now();
        for (int k : {1, 2}) {
            LemmaReport r = verify_lemma2(k);
            c.expect(r.pass, "case " + std::to_string(k) + " failed");
            c.expect(degree_counts(r) == std::map<int, std::size_t>{{4, 1}, {5, 1}, {8, 8}},
                     "case " + std::to_string(k) + " exponent multiset off");
            bool stated = false;
            for (const auto& note : r.conventions)
                if (note.find("association") != std::string::npos)
                    stated = true;
            c.expect(stated, "case " + std::to_string(k) + " does not state the conventions");
            c.expect(r.model.find("QQ(z,mu1,mu2,mu3,mu4,nu1,nu2,nu3,nu4,"
                                  "xi1,xi2,xi3,xi4,alpha,beta,a11,a12,a21,a22)") !=
                         std::string::npos,
                     "model is not fully symbolic");
        }
        c.seconds = seconds_since(t0);
        c.budget(60.0, "both cases");
        cs.push_back(std::move(c));
    }

    {
        Criterion c{3, "lemma 3 chains for n = 2..6 with final scalar alpha_n z^(2n)"};
        for (std::size_t n : {2, 3, 4, 5, 6}) {
            auto t0 = std::chrono::steady_clock::now();
            LemmaReport r = verify_lemma3(n);
            double dt = seconds_since(t0);
            c.seconds += dt;
            c.expect(r.pass, "n=" + std::to_string(n) + " failed");
            bool final_ok = false, chain_ok = true;
            std::string want = "(z^" + std::to_string(2 * n) + "*alpha" + std::to_string(n) +
                               ") u";
            for (const auto& rec : r.records) {
                if (rec.label == "sum_i c_i z^(2(i-1))")
                    final_ok = rec.matched && rec.expected == want;
                if (rec.label.rfind("c_", 0) == 0 && !rec.matched)
                    chain_ok = false;
            }
            c.expect(final_ok, "n=" + std::to_string(n) + " final scalar off");
            c.expect(chain_ok, "n=" + std::to_string(n) + " intermediate c_i off");
            if (n == 6)
                c.expect(dt < 30.0, "n=6 over the 30s budget");
        }
        cs.push_back(std::move(c));
    }

    {
        Criterion c{4, "lemma 4 displays identically in nu with exponents 3, 3, 4, 4"};
        auto t0 = std::chrono::steady_clock::now();
        LemmaReport r = verify_lemma4();
        c.seconds = seconds_since(t0);
        c.expect(r.pass, "report failed");
        c.expect(degree_counts(r) == std::map<int, std::size_t>{{3, 2}, {4, 2}},
                 "exponent multiset off");
        c.expect(r.model.find("QQ(z,nu,") != std::string::npos, "nu is not symbolic");
        c.budget(5.0, "runtime");
        cs.push_back(std::move(c));
    }

    {
        Criterion c{5, "lemma 5 displays, exponents 6 and 5, beta signs +, -, -, +"};
        auto t0 = std::chrono::steady_clock::now();
        LemmaReport r = verify_lemma5();
        c.seconds = seconds_since(t0);
        c.expect(r.pass, "report failed");
        c.expect(degree_counts(r) == std::map<int, std::size_t>{{6, 4}, {5, 4}},
                 "exponent multiset off");
        std::vector<std::string> beta_expected;
        for (const auto& rec : r.records)
            if (rec.counted && rec.z_degree == 5)
                beta_expected.push_back(rec.expected);
        c.expect(beta_expected == std::vector<std::string>{"(z^5*beta11) u", "(-z^5*beta12) u",
                                                           "(-z^5*beta21) u", "(z^5*beta22) u"},
                 "beta sign pattern off");
        c.expect(r.model.find("z_alpha,z_beta,z_gamma,z_delta") != std::string::npos,
                 "w entries are not symbolic");
        c.budget(30.0, "runtime");
        cs.push_back(std::move(c));
    }

    {
        Criterion c{6, "identity suite: right-symmetric, super right-alternative, abelian type"};
        auto run_suite = [&](const std::string& tag, auto&& body) {
            auto t0 = std::chrono::steady_clock::now();
            body();
            double dt = seconds_since(t0);
            c.seconds += dt;
            c.expect(dt < 10.0, tag + " over the 10s budget");
        };
        run_suite("matrix_rs", [&] {
            for (std::size_t n : {2, 3, 4})
                c.expect(check_multilinear_identity(matrix_rs(n, RingDesc::rationals()),
                                                    identity_right_symmetric())
                             .holds,
                         "matrix_rs(" + std::to_string(n) + ") not right-symmetric");
        });
        run_suite("b_nn", [&] {
            for (std::size_t n : {2, 3, 4})
                c.expect(check_super_right_alternative(b_nn(n, RingDesc::rationals())).holds,
                         "b_nn(" + std::to_string(n) + ") not super right-alternative");
        });
        run_suite("b_22", [&] {
            c.expect(check_super_right_alternative(b_22_symbolic()).holds,
                     "b_22 not super right-alternative");
        });
        run_suite("b_44", [&] {
            c.expect(check_super_right_alternative(b_44_symbolic()).holds,
                     "b_44 not super right-alternative");
        });
        run_suite("abelian", [&] {
            for (std::size_t n : {2, 3, 4})
                c.expect(check_abelian_type(b_nn(n, RingDesc::rationals())).holds,
                         "b_nn(" + std::to_string(n) + ") not abelian type");
            c.expect(check_abelian_type(b_22_symbolic()).holds, "b_22 not abelian type");
        });
        cs.push_back(std::move(c));
    }

    {
        Criterion c{7, "a nonzero associator basis triple exists in each catalog algebra"};
        auto t0 = std::chrono::steady_clock::now();
        for (const auto& alg : catalog_instances()) {
            CheckReport r = check_multilinear_identity(alg, identity_associative());
            c.expect(!r.holds && r.witness.has_value(),
                     alg->name() + " has no associator witness");
        }
        c.seconds = seconds_since(t0);
        cs.push_back(std::move(c));
    }

    {
        Criterion c{8, "units, centers and even centers of dim 1, simplicity at n <= 4"};
        auto t0 = std::chrono::steady_clock::now();
        std::vector<AlgebraPtr> algs = catalog_instances();
        for (std::size_t n : {3, 4}) {
            algs.push_back(matrix_rs(n, RingDesc::rationals()));
            algs.push_back(b_nn(n, RingDesc::rationals()));
        }
        for (const auto& alg : algs) {
            auto u = find_unit(alg);
            c.expect(u.has_value(), alg->name() + " has no unit");
            if (!u)
                continue;
            Subspace z = compute_center(alg);
            c.expect(z.dim() == 1 && z.contains(*u),
                     alg->name() + " center is not the span of the unit");
            c.expect(!z.basis.empty() && central_on_all_pairs(alg, z.basis[0]),
                     alg->name() + " center generator fails a defining condition");
            if (alg->graded()) {
                Subspace ez = compute_even_center(alg);
                c.expect(ez.dim() == 1 && ez.contains(*u),
                         alg->name() + " even center is not the span of the unit");
            }
            c.expect(check_simple(alg, alg->graded()).simple, alg->name() + " not simple");
        }
        c.seconds = seconds_since(t0);
        cs.push_back(std::move(c));
    }

    {
        Criterion c{9, "modular shadow: 100 samples over GF(1000003), zero failures"};
        auto t0 = std::chrono::steady_clock::now();
        const std::pair<int, std::size_t> shadows[] = {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2},
                                                       {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6},
                                                       {4, 2}, {5, 2}};
        for (auto [lemma, arg] : shadows) {
            ShadowReport s = modular_shadow(lemma, arg);
            c.expect(s.pass && s.failures == 0 && s.samples == 100,
                     "lemma " + std::to_string(lemma) + " arg " + std::to_string(arg) +
                         " shadow failed");
        }
        for (std::size_t n : {2, 3, 4}) {
            c.expect(randomized_check(matrix_rs(n, RingDesc::rationals()),
                                      identity_right_symmetric(), 1000003, 100, 0)
                         .holds,
                     "matrix_rs(" + std::to_string(n) + ") modular identity check failed");
            c.expect(randomized_check(b_nn(n, RingDesc::rationals()),
                                      identity_right_alternative_super(), 1000003, 100, 0)
                         .holds,
                     "b_nn(" + std::to_string(n) + ") modular identity check failed");
        }
        for (const auto& alg : {b_22_symbolic(), b_44_symbolic()})
            c.expect(randomized_check(alg, identity_right_alternative_super(), 1000003, 100, 0)
                         .holds,
                     alg->name() + " modular identity check failed");
        c.seconds = seconds_since(t0);
        cs.push_back(std::move(c));
    }

    {
        Criterion c{10, "byte-identical CLI reports and exact algebra-file round trips"};
        auto t0 = std::chrono::steady_clock::now();
        for (const auto& alg : catalog_instances())
            c.expect(same_spec(alg, parse_algebra(serialize_algebra(alg))),
                     alg->name() + " round trip not exact");
        if (cli.empty()) {
            c.expect(false, "no CLI path given");
        } else {
            std::string base = "\"" + cli + "\" ";
            for (const char* cmd :
                 {"verify-lemma 2 --json",
                  "random-check --algebra b-44 --identity right-alternative-super "
                  "--trials 20 --seed 5 --json",
                  "center --algebra b-22 --json"}) {
                std::string a = capture(base + cmd);
                std::string b = capture(base + cmd);
                c.expect(!a.empty() && a == b,
                         std::string("CLI output differs between runs: ") + cmd);
            }
        }
        c.seconds = seconds_since(t0);
        cs.push_back(std::move(c));
    }

    int failed = 0;
    for (const auto& c : cs) {
        std::printf("%2d. %s  (%.1fs)  %s\n", c.id, c.pass ? "PASS" : "FAIL", c.seconds,
                    c.title.c_str());
        for (const auto& note : c.notes)
            std::printf("      - %s\n", note.c_str());
        if (!c.pass)
            ++failed;
    }
    std::printf("overall: %zu/%zu criteria pass\n", cs.size() - failed, cs.size());
    return failed;
}
