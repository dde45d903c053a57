#include "rsalg/serialize.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "rsalg/errors.hpp"

namespace rsalg {

namespace {

const Json& require(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw parse_error(std::string("missing field \"") + key + "\"");
    return *it;
}

} // namespace

Json ring_to_json(const RingDesc& ring) {
    Json j;
    switch (ring.kind) {
    case RingKind::Rationals:
        j["kind"] = "rationals";
        break;
    case RingKind::Poly:
    case RingKind::Fraction:
        j["kind"] = "polynomial";
        j["vars"] = ring.ring->vars();
        break;
    case RingKind::PrimeField:
        j["kind"] = "prime_field";
        j["p"] = ring.modulus;
        break;
    }
    return j;
}

RingDesc ring_from_json(const Json& j) {
    std::string kind = require(j, "kind").get<std::string>();
    if (kind == "rationals")
        return RingDesc::rationals();
    if (kind == "polynomial")
        return RingDesc::fraction(require(j, "vars").get<std::vector<std::string>>());
    if (kind == "prime_field")
        return RingDesc::gf(require(j, "p").get<std::uint64_t>());
    throw parse_error("unknown ring kind \"" + kind + "\"");
}

Json algebra_to_json(const AlgebraPtr& alg) {
    Json j;
    j["name"] = alg->name();
    j["ring"] = ring_to_json(alg->ring());
    j["dim"] = alg->dim();
    j["parity"] = alg->parity();
    j["labels"] = alg->labels();
    Json prods = Json::array();
    for (const auto& [ij, terms] : alg->constants()) {
        Json p;
        p["i"] = ij.first;
        p["j"] = ij.second;
        Json ts = Json::array();
        for (const auto& t : terms) {
            Json tj;
            tj["k"] = t.k;
            tj["coeff"] = t.c.to_string();
            ts.push_back(std::move(tj));
        }
        p["terms"] = std::move(ts);
        prods.push_back(std::move(p));
    }
    j["products"] = std::move(prods);
    return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
    std::string name;
    RingDesc ring;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<int> parity;
    AlgebraSpec::ConstantMap constants;
    try {
        name = require(j, "name").get<std::string>();
        ring = ring_from_json(require(j, "ring"));
        dim = require(j, "dim").get<std::size_t>();
        labels = require(j, "labels").get<std::vector<std::string>>();
        if (j.contains("parity") && !j["parity"].is_null())
            parity = j["parity"].get<std::vector<int>>();
        for (const Json& p : require(j, "products")) {
            std::size_t i = require(p, "i").get<std::size_t>();
            std::size_t jj = require(p, "j").get<std::size_t>();
            std::vector<AlgebraSpec::Term> terms;
            for (const Json& t : require(p, "terms")) {
                AlgebraSpec::Term term;
                term.k = require(t, "k").get<std::size_t>();
                term.c = Scalar::parse(ring, require(t, "coeff").get<std::string>());
                if (!term.c.is_zero())
                    terms.push_back(std::move(term));
            }
            if (!constants.emplace(std::make_pair(i, jj), std::move(terms)).second)
                throw validation_error("duplicate product entry for (" + std::to_string(i) +
                                       ", " + std::to_string(jj) + ")");
        }
    } catch (const Json::exception& e) {
        throw parse_error(std::string("algebra file: ") + e.what());
    }
    if (labels.size() != dim)
        throw validation_error("label count differs from dim");
    // empty products denote zero rows; drop them to match the canonical map
    for (auto it = constants.begin(); it != constants.end();)
        it = it->second.empty() ? constants.erase(it) : std::next(it);
    return AlgebraSpec::create(std::move(name), std::move(ring), std::move(labels),
                               std::move(parity), std::move(constants));
}

std::string serialize_algebra(const AlgebraPtr& alg) {
    return algebra_to_json(alg).dump(2) + "\n";
}

AlgebraPtr parse_algebra(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw parse_error(e.what());
    }
    return algebra_from_json(j);
}

AlgebraPtr load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

void save_algebra_file(const AlgebraPtr& alg, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw error("cannot write " + path);
    out << serialize_algebra(alg);
}

Json to_json(const CheckReport& r) {
    Json j;
    j["identity"] = r.identity;
    j["holds"] = r.holds;
    j["tuples_checked"] = r.tuples_checked;
    if (r.witness) {
        j["witness"] = *r.witness;
        j["witness_detail"] = r.witness_detail;
    }
    return j;
}

Json to_json(const Subspace& s) {
    Json j;
    j["dim"] = s.dim();
    Json basis = Json::array();
    for (const auto& v : s.basis)
        basis.push_back(v.to_string());
    j["basis"] = std::move(basis);
    return j;
}

Json to_json(const SimplicityVerdict& v) {
    Json j;
    j["simple"] = v.simple;
    j["graded"] = v.graded;
    j["ambient_dim"] = v.ambient_dim;
    j["generators_tested"] = v.generators_tested;
    if (v.witness_generator) {
        j["witness_generator"] = *v.witness_generator;
        j["witness_closure_dim"] = v.witness_closure_dim;
        Json basis = Json::array();
        for (const auto& e : v.witness_closure_basis)
            basis.push_back(e.to_string());
        j["witness_closure_basis"] = std::move(basis);
    }
    return j;
}

Json to_json(const ExtractionRecord& r) {
    Json j;
    j["label"] = r.label;
    j["expected"] = r.expected;
    j["actual"] = r.actual;
    j["z_degree"] = r.z_degree;
    j["matched"] = r.matched;
    j["counted"] = r.counted;
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

Json to_json(const LemmaReport& r) {
    Json j;
    j["lemma"] = r.lemma;
    j["model"] = r.model;
    j["pass"] = r.pass;
    j["displays"] = r.counted_displays();
    j["findings"] = r.findings();
    j["conventions"] = r.conventions;
    Json recs = Json::array();
    for (const auto& rec : r.records)
        recs.push_back(to_json(rec));
    j["records"] = std::move(recs);
    return j;
}

Json to_json(const ShadowReport& r) {
    Json j;
    j["lemma"] = r.lemma;
    j["arg"] = r.arg;
    j["prime"] = r.prime;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["displays"] = r.displays;
    j["failures"] = r.failures;
    j["pass"] = r.pass;
    return j;
}

} // namespace rsalg
