#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsalg/catalog.hpp"
#include "rsalg/errors.hpp"
#include "rsalg/identities.hpp"
#include "rsalg/lemmas.hpp"
#include "rsalg/serialize.hpp"
#include "rsalg/structure.hpp"
#include "rsalg/version.hpp"

using namespace rsalg;

namespace {

// deterministic output: no timestamps, no durations
struct Run {
    Json results = Json::array();
    std::ostringstream text;
    int exit_status = 0;

    void add(Json j) { results.push_back(std::move(j)); }
    void fail() { exit_status = 1; }
};

struct AlgebraChoice {
    std::string name;
    std::string file;
    std::size_t n = 2;
    std::string nu;
    std::vector<std::string> w;
    std::vector<std::string> gamma, delta, epsilon;
};

void add_algebra_flags(CLI::App* cmd, AlgebraChoice& c) {
    CLI::Option* name_opt = cmd->add_option(
        "--algebra", c.name, "catalog algebra: matrix-rs | rs-v2m2 | b-nn | b-22 | b-44");
    cmd->add_option("--file", c.file, "algebra file (JSON) instead of a catalog name")
        ->excludes(name_opt);
    cmd->add_option("--n", c.n, "size parameter for matrix-rs and b-nn")->check(CLI::Range(1, 16));
    cmd->add_option("--nu", c.nu, "rational parameter for b-22 (omit for symbolic)");
    cmd->add_option("--w", c.w, "four rational entries of w for b-44 (omit for symbolic)")
        ->delimiter(',')
        ->expected(0, 4);
    cmd->add_option("--gamma", c.gamma, "four rational bullet entries for rs-v2m2")
        ->delimiter(',')
        ->expected(0, 4);
    cmd->add_option("--delta", c.delta, "four rational bullet entries for rs-v2m2")
        ->delimiter(',')
        ->expected(0, 4);
    cmd->add_option("--epsilon", c.epsilon, "four rational mask entries for rs-v2m2")
        ->delimiter(',')
        ->expected(0, 4);
}

Scalar rational_value(const RingDesc& ring, const std::string& text, const char* flag) {
    try {
        return Scalar::parse(ring, text);
    } catch (const parse_error&) {
        throw parse_error(std::string(flag) + ": \"" + text + "\" is not a rational literal");
    }
}

AlgebraPtr build_algebra(const AlgebraChoice& c) {
    if (!c.file.empty())
        return load_algebra_file(c.file);
    std::string key = c.name;
    for (char& ch : key)
        if (ch == '_') ch = '-';
    if (key == "matrix-rs")
        return matrix_rs(c.n, RingDesc::rationals());
    if (key == "b-nn")
        return b_nn(c.n, RingDesc::rationals());
    if (key == "b-22") {
        if (c.nu.empty())
            return b_22_symbolic();
        RingDesc qq = RingDesc::rationals();
        return b_22(rational_value(qq, c.nu, "--nu"), qq);
    }
    if (key == "b-44") {
        if (c.w.empty())
            return b_44_symbolic();
        if (c.w.size() != 4)
            throw parse_error("--w needs four comma-separated entries");
        RingDesc qq = RingDesc::rationals();
        return b_44(WMatrix{rational_value(qq, c.w[0], "--w"), rational_value(qq, c.w[1], "--w"),
                            rational_value(qq, c.w[2], "--w"), rational_value(qq, c.w[3], "--w")},
                    qq);
    }
    if (key == "rs-v2m2") {
        if (c.gamma.empty() && c.delta.empty() && c.epsilon.empty())
            return rs_v2m2_symbolic();
        BulletTable t;
        HadamardMask m;
        if (c.gamma.size() != 4 || c.delta.size() != 4 || c.epsilon.size() != 4)
            throw parse_error("rs-v2m2 needs --gamma, --delta and --epsilon with four entries each");
        RingDesc qq = RingDesc::rationals();
        for (std::size_t i = 0; i < 4; ++i) {
            t.gamma[i] = rational_value(qq, c.gamma[i], "--gamma");
            t.delta[i] = rational_value(qq, c.delta[i], "--delta");
            m.epsilon[i] = rational_value(qq, c.epsilon[i], "--epsilon");
        }
        return rs_v2m2(t, m, qq);
    }
    if (key.empty())
        throw parse_error("pick an algebra with --algebra or --file");
    throw parse_error("unknown algebra \"" + c.name +
                      "\"; choices: matrix-rs, rs-v2m2, b-nn, b-22, b-44");
}

std::string tuple_text(const std::vector<std::size_t>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i)
        s += (i ? ", " : "") + std::to_string(idx[i]);
    return s + ")";
}

void report_check(Run& run, const std::string& what, const AlgebraPtr& alg,
                  const CheckReport& r) {
    Json j;
    j["kind"] = what;
    j["algebra"] = alg->name();
    Json body = to_json(r);
    j.update(body);
    run.add(std::move(j));
    run.text << what << " " << r.identity << " on " << alg->name() << ": ";
    if (r.holds)
        run.text << "holds (" << r.tuples_checked << " tuples)\n";
    else {
        run.text << "FAILS";
        if (r.witness)
            run.text << " at basis tuple " << tuple_text(*r.witness) << "  " << r.witness_detail;
        run.text << "\n";
        run.fail();
    }
}

void cmd_catalog(Run& run) {
    struct Entry {
        const char* key;
        const char* params;
        AlgebraPtr dflt;
    };
    const Entry entries[] = {
        {"matrix-rs", "--n (default 2)", matrix_rs(2, RingDesc::rationals())},
        {"rs-v2m2", "--gamma/--delta/--epsilon (default symbolic)",
         build_algebra([] { AlgebraChoice c; c.name = "rs-v2m2"; return c; }())},
        {"b-nn", "--n (default 2)", b_nn(2, RingDesc::rationals())},
        {"b-22", "--nu (default symbolic)",
         build_algebra([] { AlgebraChoice c; c.name = "b-22"; return c; }())},
        {"b-44", "--w (default symbolic)",
         build_algebra([] { AlgebraChoice c; c.name = "b-44"; return c; }())},
    };
    for (const Entry& e : entries) {
        Json j;
        j["kind"] = "catalog";
        j["key"] = e.key;
        j["name"] = e.dflt->name();
        j["dim"] = e.dflt->dim();
        j["graded"] = e.dflt->graded();
        j["ring"] = e.dflt->ring().to_string();
        j["parameters"] = e.params;
        run.add(std::move(j));
        run.text << e.key << ": " << e.dflt->name() << ", dim " << e.dflt->dim() << ", "
                 << (e.dflt->graded() ? "graded" : "ungraded") << ", over "
                 << e.dflt->ring().to_string() << "  [" << e.params << "]\n";
    }
}

void cmd_check(Run& run, const AlgebraChoice& choice, const std::string& identity) {
    AlgebraPtr alg = build_algebra(choice);
    CheckReport r;
    if (identity == "abelian-type") {
        r = check_abelian_type(alg);
    } else if (auto id = identity_by_name(identity)) {
        r = check_multilinear_identity(alg, *id);
    } else {
        throw parse_error("unknown identity \"" + identity +
                          "\"; choices: right-symmetric, right-alternative-super, "
                          "associative, commutative, abelian-type");
    }
    report_check(run, "check", alg, r);
}

void cmd_random_check(Run& run, const AlgebraChoice& choice, const std::string& identity,
                      std::uint64_t prime, std::size_t trials, std::uint64_t seed) {
    AlgebraPtr alg = build_algebra(choice);
    auto id = identity_by_name(identity);
    if (!id)
        throw parse_error("unknown identity \"" + identity +
                          "\"; choices: right-symmetric, right-alternative-super, "
                          "associative, commutative");
    CheckReport r = randomized_check(alg, *id, prime, trials, seed);
    Json j;
    j["kind"] = "random-check";
    j["algebra"] = alg->name();
    j["prime"] = prime;
    j["trials"] = trials;
    j["seed"] = seed;
    j.update(to_json(r));
    run.add(std::move(j));
    run.text << "random-check " << r.identity << " on " << alg->name() << " over GF(" << prime
             << "), " << trials << " trials, seed " << seed << ": "
             << (r.holds ? "holds" : "FAILS") << "\n";
    if (!r.holds) {
        if (!r.witness_detail.empty())
            run.text << "  " << r.witness_detail << "\n";
        run.fail();
    }
}

void cmd_center(Run& run, const AlgebraChoice& choice, bool even) {
    AlgebraPtr alg = build_algebra(choice);
    Subspace s = even ? compute_even_center(alg) : compute_center(alg);
    const char* what = even ? "even-center" : "center";
    Json j;
    j["kind"] = what;
    j["algebra"] = alg->name();
    j.update(to_json(s));
    run.add(std::move(j));
    run.text << what << " of " << alg->name() << ": dim " << s.dim() << "\n";
    for (const auto& v : s.basis)
        run.text << "  " << v.to_string() << "\n";
}

void cmd_unit(Run& run, const AlgebraChoice& choice) {
    AlgebraPtr alg = build_algebra(choice);
    auto u = find_unit(alg);
    Json j;
    j["kind"] = "unit";
    j["algebra"] = alg->name();
    j["found"] = u.has_value();
    if (u)
        j["unit"] = u->to_string();
    run.add(std::move(j));
    run.text << "unit of " << alg->name() << ": " << (u ? u->to_string() : "none") << "\n";
    if (!u)
        run.fail();
}

void cmd_simple(Run& run, const AlgebraChoice& choice, bool graded) {
    AlgebraPtr alg = build_algebra(choice);
    SimplicityVerdict v = check_simple(alg, graded);
    Json j;
    j["kind"] = "simple";
    j["algebra"] = alg->name();
    j.update(to_json(v));
    run.add(std::move(j));
    run.text << "simple check on " << alg->name() << (v.graded ? " (graded)" : "") << ": ";
    if (v.simple)
        run.text << "simple, dim " << v.ambient_dim << "\n";
    else {
        run.text << "NOT simple; ideal from " << v.witness_generator.value_or("?") << " has dim "
                 << v.witness_closure_dim << "\n";
        run.fail();
    }
}

void add_lemma_report(Run& run, const LemmaReport& r) {
    run.add(to_json(r));
    run.text << r.to_text();
    if (!r.pass)
        run.fail();
}

void cmd_verify_lemma(Run& run, int lemma, std::size_t n, int which_case) {
    switch (lemma) {
    case 1:
        add_lemma_report(run, verify_lemma1(n));
        break;
    case 2:
        if (which_case == 0) {
            add_lemma_report(run, verify_lemma2(1));
            add_lemma_report(run, verify_lemma2(2));
        } else {
            add_lemma_report(run, verify_lemma2(which_case));
        }
        break;
    case 3:
        add_lemma_report(run, verify_lemma3(n));
        break;
    case 4:
        add_lemma_report(run, verify_lemma4());
        break;
    case 5:
        add_lemma_report(run, verify_lemma5());
        break;
    default:
        throw parse_error("lemma must be 1..5");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for five right-symmetric and right-alternative algebras"};
    app.fallthrough();
    app.require_subcommand(1);

    bool json_out = false;
    std::uint64_t seed = 0;
    app.add_flag("--json", json_out, "emit the report as JSON");
    app.add_option("--seed", seed, "seed for randomized checks")->default_val(0);

    AlgebraChoice choice;
    std::string identity;
    std::uint64_t prime = 1000003;
    std::size_t trials = 100;
    bool graded = false;
    int lemma = 0;
    std::size_t lemma_n = 2;
    int lemma_case = 0;

    app.add_subcommand("catalog", "list the built-in algebras");

    CLI::App* check = app.add_subcommand("check", "verify an identity on every basis tuple");
    add_algebra_flags(check, choice);
    check->add_option("--identity", identity, "identity name")->required();

    CLI::App* center = app.add_subcommand("center", "compute the center");
    add_algebra_flags(center, choice);

    CLI::App* even_center = app.add_subcommand("even-center", "compute the even center");
    add_algebra_flags(even_center, choice);

    CLI::App* unit = app.add_subcommand("unit", "find the two-sided unit");
    add_algebra_flags(unit, choice);

    CLI::App* simple = app.add_subcommand("simple", "test simplicity by ideal closures");
    add_algebra_flags(simple, choice);
    simple->add_flag("--graded", graded, "close ideals under the grading");

    CLI::App* verify = app.add_subcommand("verify-lemma", "re-derive the scalar extraction displays");
    verify->add_option("lemma", lemma, "which lemma (1..5)")->required()->check(CLI::Range(1, 5));
    CLI::Option* n_opt = verify->add_option("--n", lemma_n, "size for lemmas 1 and 3 (default 2)")
                             ->check(CLI::Range(2, 16));
    CLI::Option* case_opt =
        verify->add_option("--case", lemma_case, "case for lemma 2 (default: both)")
            ->check(CLI::Range(1, 2));

    CLI::App* random = app.add_subcommand("random-check", "sample an identity over a prime field");
    add_algebra_flags(random, choice);
    random->add_option("--identity", identity, "identity name")->required();
    random->add_option("--prime", prime, "modulus")->default_val(1000003);
    random->add_option("--trials", trials, "sample count")->default_val(100);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string echo;
    for (int i = 1; i < argc; ++i)
        echo += (i > 1 ? " " : "") + std::string(argv[i]);

    Run run;
    try {
        if (app.got_subcommand("catalog"))
            cmd_catalog(run);
        else if (app.got_subcommand(check))
            cmd_check(run, choice, identity);
        else if (app.got_subcommand(center))
            cmd_center(run, choice, false);
        else if (app.got_subcommand(even_center))
            cmd_center(run, choice, true);
        else if (app.got_subcommand(unit))
            cmd_unit(run, choice);
        else if (app.got_subcommand(simple))
            cmd_simple(run, choice, graded);
        else if (app.got_subcommand(verify)) {
            if (*n_opt && lemma != 1 && lemma != 3)
                throw parse_error("--n applies to lemmas 1 and 3 only");
            if (*case_opt && lemma != 2)
                throw parse_error("--case applies to lemma 2 only");
            cmd_verify_lemma(run, lemma, lemma_n, lemma_case);
        } else if (app.got_subcommand(random))
            cmd_random_check(run, choice, identity, prime, trials, seed);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (json_out) {
        Json out;
        out["tool"] = std::string("rsalg ") + version_string;
        out["command"] = echo;
        out["results"] = std::move(run.results);
        out["exit_status"] = run.exit_status;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "rsalg " << version_string << "\n"
                  << "command: " << echo << "\n"
                  << run.text.str() << "exit: " << run.exit_status << "\n";
    }
    return run.exit_status;
}
