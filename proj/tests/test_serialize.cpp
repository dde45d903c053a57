#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "rsalg/catalog.hpp"
#include "rsalg/errors.hpp"
#include "rsalg/lemmas.hpp"
#include "rsalg/serialize.hpp"

using namespace rsalg;

namespace {

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

void check_round_trip(const AlgebraPtr& alg) {
    CAPTURE(alg->name());
    AlgebraPtr back = parse_algebra(serialize_algebra(alg));
    CHECK(same_spec(alg, back));
    // serializing the reloaded spec reproduces the bytes
    CHECK(serialize_algebra(back) == serialize_algebra(alg));
}

} // namespace

TEST_CASE("catalog algebras round trip through the file format") {
    check_round_trip(matrix_rs(2, RingDesc::rationals()));
    check_round_trip(matrix_rs(4, RingDesc::rationals()));
    check_round_trip(b_nn(3, RingDesc::rationals()));
    check_round_trip(b_nn(2, RingDesc::gf(1000003)));
    for (int lemma = 1; lemma <= 5; ++lemma)
        check_round_trip(build_localized_model(lemma).base);
}

TEST_CASE("ring descriptors") {
    CHECK(ring_from_json(ring_to_json(RingDesc::rationals())) == RingDesc::rationals());
    RingDesc fr = RingDesc::fraction({"z", "nu"});
    CHECK(ring_from_json(ring_to_json(fr)) == fr);
    CHECK(ring_from_json(ring_to_json(RingDesc::gf(7))) == RingDesc::gf(7));
    CHECK_THROWS_AS(ring_from_json(Json{{"kind", "integers"}}), parse_error);
}

TEST_CASE("file save and load") {
    std::string path = "round_trip_tmp.json";
    AlgebraPtr alg = b_22(Scalar::parse(RingDesc::fraction({"nu"}), "nu"),
                          RingDesc::fraction({"nu"}));
    save_algebra_file(alg, path);
    CHECK(same_spec(alg, load_algebra_file(path)));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_algebra_file("does_not_exist.json"), parse_error);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_algebra("{ not json"), parse_error);
    CHECK_THROWS_AS(parse_algebra("{}"), parse_error);
    try {
        parse_algebra(R"({"name":"x","ring":{"kind":"rationals"},"dim":1,"labels":["e"]})");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("products") != std::string::npos);
    }
    // dim is not a number
    CHECK_THROWS_AS(
        parse_algebra(
            R"({"name":"x","ring":{"kind":"rationals"},"dim":"two","labels":["e"],"products":[]})"),
        parse_error);
}

TEST_CASE("validation on load") {
    auto file = [](const std::string& products) {
        return R"({"name":"t","ring":{"kind":"rationals"},"dim":2,"parity":[0,1],)"
               R"("labels":["x","[y]"],"products":)" + products + "}";
    };
    // product of two even vectors landing on an odd one
    try {
        parse_algebra(file(R"([{"i":0,"j":0,"terms":[{"k":1,"coeff":"1"}]}])"));
        CHECK(false);
    } catch (const validation_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("0") != std::string::npos);
        CHECK(msg.find("hits basis 1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_algebra(file(R"([{"i":0,"j":5,"terms":[{"k":0,"coeff":"1"}]}])")),
                    validation_error);
    CHECK_THROWS_AS(parse_algebra(file(R"([{"i":0,"j":0,"terms":[{"k":0,"coeff":"1"}]},)"
                                       R"({"i":0,"j":0,"terms":[{"k":0,"coeff":"2"}]}])")),
                    validation_error);
    CHECK_THROWS_AS(
        parse_algebra(R"({"name":"t","ring":{"kind":"rationals"},"dim":3,)"
                      R"("labels":["x","y"],"products":[]})"),
        validation_error);
}

TEST_CASE("permissive corners") {
    // zero algebra of dimension 1
    AlgebraPtr z = parse_algebra(
        R"({"name":"zero","ring":{"kind":"rationals"},"dim":1,"labels":["e"],"products":[]})");
    CHECK(z->dim() == 1);
    CHECK(multiply(Element::basis(z, 0), Element::basis(z, 0)).is_zero());
    // zero coefficients are dropped, plain integers accepted
    AlgebraPtr a = parse_algebra(
        R"({"name":"t","ring":{"kind":"rationals"},"dim":1,"labels":["e"],)"
        R"("products":[{"i":0,"j":0,"terms":[{"k":0,"coeff":"0"}]}]})");
    CHECK(a->product(0, 0).empty());
    CHECK(a->constants().empty());
}

TEST_CASE("report serialization") {
    LemmaReport r = verify_lemma1(2);
    Json j = to_json(r);
    CHECK(j["lemma"] == 1);
    CHECK(j["pass"] == true);
    CHECK(j["displays"] == 6);
    CHECK(j["findings"] == 2);
    CHECK(j["records"].size() == 8);
    std::vector<int> degs;
    for (const auto& rec : j["records"])
        if (rec["counted"].get<bool>())
            degs.push_back(rec["z_degree"].get<int>());
    CHECK(std::count(degs.begin(), degs.end(), 4) == 2);
    CHECK(std::count(degs.begin(), degs.end(), 6) == 2);
    CHECK(std::count(degs.begin(), degs.end(), 7) == 2);
    CHECK(to_json(verify_lemma1(2)).dump(2) == j.dump(2));

    ShadowReport s{};
    s.lemma = 4;
    s.prime = 1000003;
    s.samples = 100;
    s.displays = 4;
    s.pass = true;
    Json sj = to_json(s);
    CHECK(sj["prime"] == 1000003);
    CHECK(sj["failures"] == 0);

    CheckReport c;
    c.identity = "associative";
    c.holds = false;
    c.tuples_checked = 5;
    c.witness = std::vector<std::size_t>{0, 0, 3};
    c.witness_detail = "(e1, e1, e12)";
    Json cj = to_json(c);
    CHECK(cj["witness"] == Json::array({0, 0, 3}));
    CheckReport ok;
    ok.identity = "right_symmetric";
    ok.holds = true;
    CHECK_FALSE(to_json(ok).contains("witness"));
}
