#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsalg/catalog.hpp"
#include "rsalg/errors.hpp"
#include "rsalg/identities.hpp"

using namespace rsalg;

namespace {

Element unit_of(const AlgebraPtr& alg, const std::vector<std::size_t>& slots) {
    Element u = Element::zero(alg);
    std::vector<Scalar> c = u.coords();
    for (auto s : slots) c[s] = Scalar::one(alg->ring());
    return Element(alg, std::move(c));
}

void check_two_sided_unit(const AlgebraPtr& alg, const Element& u) {
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        Element b = Element::basis(alg, i);
        CHECK(multiply(u, b) == b);
        CHECK(multiply(b, u) == b);
    }
}

BulletTable symbolic_bullet(const RingDesc& ring) {
    BulletTable t;
    for (std::size_t i = 0; i < 4; ++i) {
        t.gamma[i] = Scalar::parse(ring, "gamma" + std::to_string(i + 1));
        t.delta[i] = Scalar::parse(ring, "delta" + std::to_string(i + 1));
    }
    return t;
}

HadamardMask symbolic_mask(const RingDesc& ring) {
    HadamardMask m;
    for (std::size_t i = 0; i < 4; ++i)
        m.epsilon[i] = Scalar::parse(ring, "epsilon" + std::to_string(i + 1));
    return m;
}

RingDesc v2m2_ring() {
    return RingDesc::poly({"gamma1", "gamma2", "gamma3", "gamma4",
                           "delta1", "delta2", "delta3", "delta4",
                           "epsilon1", "epsilon2", "epsilon3", "epsilon4"});
}

RingDesc w_ring() {
    return RingDesc::fraction({"wa", "wb", "wc", "wd"});
}

WMatrix symbolic_w(const RingDesc& ring) {
    return WMatrix{Scalar::parse(ring, "wa"), Scalar::parse(ring, "wb"),
                   Scalar::parse(ring, "wc"), Scalar::parse(ring, "wd")};
}

} // namespace

TEST_CASE("algebra spec validation") {
    auto qq = RingDesc::rationals();
    auto one = Scalar::one(qq);

    AlgebraSpec::ConstantMap bad_index;
    bad_index[{0, 0}] = {{5, one}};
    CHECK_THROWS_AS(AlgebraSpec::create("t", qq, {"a", "b"}, {}, bad_index), validation_error);

    AlgebraSpec::ConstantMap zero_const;
    zero_const[{0, 0}] = {{0, Scalar::zero(qq)}};
    CHECK_THROWS_AS(AlgebraSpec::create("t", qq, {"a"}, {}, zero_const), validation_error);

    // product of two evens may not land on an odd basis vector
    AlgebraSpec::ConstantMap grading;
    grading[{0, 0}] = {{1, one}};
    CHECK_THROWS_AS(AlgebraSpec::create("t", qq, {"a", "b"}, {0, 1}, grading), validation_error);
    CHECK_NOTHROW(AlgebraSpec::create("t", qq, {"a", "b"}, {0, 0}, grading));

    CHECK_THROWS_AS(AlgebraSpec::create("t", qq, {"a"}, {0, 1}, {}), validation_error);
    CHECK_THROWS_AS(AlgebraSpec::create("t", qq, {"a"}, {2}, {}), validation_error);
}

TEST_CASE("element arithmetic") {
    auto qq = RingDesc::rationals();
    auto alg = b_nn(2, qq);
    Element x = Element::basis(alg, 0) + Element::basis(alg, 2).scaled(Scalar::from_int(qq, 3));
    CHECK(x.coord(0).is_one());
    CHECK(x.coord(2) == Scalar::from_int(qq, 3));
    CHECK((x - x).is_zero());
    CHECK((-x + x).is_zero());
    CHECK(x.to_string() == "e1 + (3)*[e1]");

    auto other = b_nn(3, qq);
    CHECK_THROWS_AS(multiply(x, Element::basis(other, 0)), domain_mismatch);
}

TEST_CASE("matrix_rs products") {
    auto qq = RingDesc::rationals();
    CHECK_THROWS_AS(matrix_rs(1, qq), parameter_error);
    auto alg = matrix_rs(2, qq);
    CHECK(alg->dim() == 6);
    CHECK_FALSE(alg->graded());
    // slots: e1 e2 e11 e12 e21 e22
    auto e1 = Element::basis(alg, 0);
    auto e11 = Element::basis(alg, 2);
    auto e12 = Element::basis(alg, 3);
    CHECK(multiply(e1, e11) == e1);
    CHECK(multiply(e11, e1) == e1);
    CHECK(multiply(e12, e1) == Element::basis(alg, 1) - e12);
    CHECK(multiply(e1, e1) == e1);
    CHECK(multiply(e1, Element::basis(alg, 1)).is_zero());
    CHECK(multiply(e12, e12).is_zero());
    CHECK(multiply(e12, Element::basis(alg, 4)) == e11);
    check_two_sided_unit(alg, unit_of(alg, {2, 5}));

    auto alg3 = matrix_rs(3, qq);
    CHECK(alg3->dim() == 12);
    check_two_sided_unit(alg3, unit_of(alg3, {3, 7, 11}));
}

TEST_CASE("rs_v2m2 products") {
    auto ring = v2m2_ring();
    auto alg = rs_v2m2(symbolic_bullet(ring), symbolic_mask(ring), ring);
    CHECK(alg->dim() == 6);
    auto e1 = Element::basis(alg, 0);
    auto e2 = Element::basis(alg, 1);
    auto p = multiply(e1, e2);
    CHECK(p.coord(0) == Scalar::parse(ring, "gamma2"));
    CHECK(p.coord(1) == Scalar::parse(ring, "delta2"));
    CHECK(p.coord(2) == Scalar::parse(ring, "epsilon2"));
    CHECK(p.coord(3).is_zero());
    CHECK(p.coord(4) == Scalar::parse(ring, "epsilon4"));
    CHECK(p.coord(5).is_zero());
    // identity matrix acts as v <- v on both sides
    Element I = unit_of(alg, {2, 5});
    CHECK(multiply(I, e1) == e1);
    CHECK(multiply(e1, I) == e1);
    CHECK(multiply(I, e2) == e2);

    // zero parameters kill both correction terms
    auto qq = RingDesc::rationals();
    BulletTable zt{{Scalar::zero(qq), Scalar::zero(qq), Scalar::zero(qq), Scalar::zero(qq)},
                   {Scalar::zero(qq), Scalar::zero(qq), Scalar::zero(qq), Scalar::zero(qq)}};
    HadamardMask zm{{Scalar::zero(qq), Scalar::zero(qq), Scalar::zero(qq), Scalar::zero(qq)}};
    auto plain = rs_v2m2(zt, zm, qq);
    CHECK(multiply(Element::basis(plain, 0), Element::basis(plain, 1)).is_zero());
}

TEST_CASE("b_nn products") {
    auto qq = RingDesc::rationals();
    CHECK_THROWS_AS(b_nn(1, qq), parameter_error);
    auto alg = b_nn(2, qq);
    CHECK(alg->dim() == 4);
    CHECK(alg->graded());
    auto e1 = Element::basis(alg, 0);
    auto e2 = Element::basis(alg, 1);
    auto o1 = Element::basis(alg, 2);
    CHECK(multiply(o1, o1) == e1);
    CHECK(multiply(o1, e2) == o1);          // tau(e2) = e1
    CHECK(multiply(o1, e1).is_zero());      // tau(e1) = e2
    CHECK(multiply(e1, o1) == o1);
    CHECK(commutator(e1, o1) == o1);
    check_two_sided_unit(alg, unit_of(alg, {0, 1}));

    auto alg3 = b_nn(3, qq);
    // tau cycles e1 -> e3 -> e2 -> e1
    CHECK(multiply(Element::basis(alg3, 3), Element::basis(alg3, 1)) == Element::basis(alg3, 3));
    CHECK(multiply(Element::basis(alg3, 5), Element::basis(alg3, 0)) == Element::basis(alg3, 5));
    check_two_sided_unit(alg3, unit_of(alg3, {0, 1, 2}));
}

TEST_CASE("b_22 products") {
    auto ring = RingDesc::poly({"nu"});
    auto nu = Scalar::parse(ring, "nu");
    auto alg = b_22(nu, ring);
    CHECK(alg->dim() == 4);
    CHECK(alg->parity() == std::vector<int>{0, 0, 1, 1});
    auto e1 = Element::basis(alg, 0);
    auto e2 = Element::basis(alg, 1);
    auto o1 = Element::basis(alg, 2);
    auto o2 = Element::basis(alg, 3);
    CHECK(multiply(o1, o2) == e1);                  // e1 o chi(e2) = e1 o (1,nu)
    CHECK(multiply(o2, o2) == e2.scaled(nu));
    CHECK(multiply(o1, e2) == o1);                  // star swaps
    CHECK(multiply(o1, e1).is_zero());
    Element u = unit_of(alg, {0, 1});
    check_two_sided_unit(alg, u);
    CHECK(multiply(u, o1 + o2) == o1 + o2);

    CHECK_THROWS_AS(b_22(Scalar::one(RingDesc::rationals()), ring), domain_mismatch);
}

TEST_CASE("b_44 products") {
    auto ring = w_ring();
    auto alg = b_44(symbolic_w(ring), ring);
    CHECK(alg->dim() == 8);
    auto tr_inv = Scalar::parse(ring, "1/(wa+wd)");
    // slots: e11 e12 e21 e22 then odd copies
    auto e11 = Element::basis(alg, 0);
    auto e12 = Element::basis(alg, 1);
    auto o11 = Element::basis(alg, 4);
    auto o12 = Element::basis(alg, 5);
    auto o22 = Element::basis(alg, 7);
    CHECK(multiply(o11, o22) == e11.scaled(tr_inv));
    CHECK(multiply(o11, o12).is_zero());            // tr(e12) = 0
    CHECK(multiply(o11, e12) == -o12);              // bar(e12) = -e12
    CHECK(multiply(e11, e12) == e12);
    Element u = unit_of(alg, {0, 3});
    check_two_sided_unit(alg, u);
    for (std::size_t i = 4; i < 8; ++i)
        CHECK(multiply(u, Element::basis(alg, i)) == Element::basis(alg, i));

    // trace must be invertible
    auto qq = RingDesc::rationals();
    auto mk = [&](int a, int d) {
        return WMatrix{Scalar::from_int(qq, a), Scalar::zero(qq), Scalar::zero(qq),
                       Scalar::from_int(qq, d)};
    };
    CHECK_THROWS_AS(b_44(mk(1, -1), qq), parameter_error);
    CHECK_NOTHROW(b_44(mk(1, 0), qq));
    // polynomial trace is not invertible in the polynomial ring
    auto pr = RingDesc::poly({"wa", "wb", "wc", "wd"});
    WMatrix wp{Scalar::parse(pr, "wa"), Scalar::parse(pr, "wb"),
               Scalar::parse(pr, "wc"), Scalar::parse(pr, "wd")};
    CHECK_THROWS_AS(b_44(wp, pr), parameter_error);
}

TEST_CASE("parity classification") {
    auto qq = RingDesc::rationals();
    auto alg = b_nn(2, qq);
    CHECK(parity_of(Element::basis(alg, 0)) == Parity::Even);
    CHECK(parity_of(Element::basis(alg, 2)) == Parity::Odd);
    CHECK(parity_of(Element::basis(alg, 0) + Element::basis(alg, 2)) == Parity::Mixed);
    CHECK(parity_of(Element::zero(alg)) == Parity::Zero);
    CHECK(parity_name(Parity::Mixed) == "mixed");
}

TEST_CASE("word trees") {
    auto qq = RingDesc::rationals();
    auto alg = matrix_rs(2, qq);
    Element u = unit_of(alg, {2, 5});
    auto x = WordTree::leaf("x");
    auto y = WordTree::leaf("y");
    auto z = WordTree::leaf("z");
    std::map<std::string, Element> env{{"x", u}, {"y", u}, {"z", u}};
    CHECK(evaluate_word(WordTree::node(WordTree::node(x, y), z), env) == u);
    CHECK(evaluate_word(x, env) == u);

    // associativity fails on the witness triple, so the two bracketings differ
    env["x"] = Element::basis(alg, 0);
    env["y"] = Element::basis(alg, 0);
    env["z"] = Element::basis(alg, 3);
    auto lhs = evaluate_word(WordTree::node(WordTree::node(x, y), z), env);
    auto rhs = evaluate_word(WordTree::node(x, WordTree::node(y, z)), env);
    CHECK_FALSE(lhs == rhs);

    auto scaled = WordTree::scaled(WordTree::node(x, y), Scalar::from_int(qq, -2));
    CHECK(evaluate_word(scaled, env) == multiply(env["x"], env["y"]).scaled(Scalar::from_int(qq, -2)));
    CHECK_THROWS_AS(evaluate_word(WordTree::leaf("nope"), env), incomplete_assignment);
}

TEST_CASE("right symmetry of matrix_rs") {
    auto qq = RingDesc::rationals();
    for (std::size_t n : {2, 3}) {
        auto rep = check_multilinear_identity(matrix_rs(n, qq), identity_right_symmetric());
        CHECK(rep.holds);
        CHECK(rep.tuples_checked == (n + n * n) * (n + n * n) * (n + n * n));
    }
}

TEST_CASE("matrix_rs is not associative") {
    auto qq = RingDesc::rationals();
    auto rep = check_multilinear_identity(matrix_rs(2, qq), identity_associative());
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == std::vector<std::size_t>{0, 0, 3});
    auto rep3 = check_multilinear_identity(matrix_rs(3, qq), identity_associative());
    REQUIRE(rep3.witness.has_value());
    CHECK(*rep3.witness == std::vector<std::size_t>{0, 0, 4});
}

TEST_CASE("generic rs_v2m2 is not right-symmetric") {
    auto ring = v2m2_ring();
    auto alg = rs_v2m2(symbolic_bullet(ring), symbolic_mask(ring), ring);
    auto rep = check_multilinear_identity(alg, identity_right_symmetric());
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == std::vector<std::size_t>{0, 0, 1});

    // the defect of (e1,e1,e2) in coordinates
    auto e1 = Element::basis(alg, 0);
    auto e2 = Element::basis(alg, 1);
    Element d = associator(e1, e1, e2) - associator(e1, e2, e1);
    CHECK(d.coord(1) == Scalar::parse(ring,
        "delta1*delta4 - 2*delta1*gamma2 + delta1*gamma3 - delta2^2 + delta2*gamma1 + epsilon1"));
    CHECK(d.coord(4) == Scalar::parse(ring,
        "-delta2*epsilon4 + 2*delta3*epsilon4 - delta4*epsilon3 - epsilon1*gamma4"
        " + epsilon2*gamma3 - epsilon3*gamma2 + epsilon3*gamma3"));
    CHECK(d.coord(5).is_zero());

    // nonassociative even at (e1,e1,e1)
    auto arep = check_multilinear_identity(alg, identity_associative());
    REQUIRE(arep.witness.has_value());
    CHECK(*arep.witness == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("super right alternativity") {
    auto qq = RingDesc::rationals();
    for (std::size_t n : {2, 3}) {
        auto rep = check_super_right_alternative(b_nn(n, qq));
        CHECK(rep.holds);
    }
    auto nu_ring = RingDesc::poly({"nu"});
    CHECK(check_super_right_alternative(b_22(Scalar::parse(nu_ring, "nu"), nu_ring)).holds);
    auto wr = w_ring();
    CHECK(check_super_right_alternative(b_44(symbolic_w(wr), wr)).holds);
    CHECK_THROWS_AS(check_super_right_alternative(matrix_rs(2, qq)), domain_mismatch);
}

TEST_CASE("abelian type") {
    auto qq = RingDesc::rationals();
    CHECK(check_abelian_type(b_nn(2, qq)).holds);
    CHECK(check_abelian_type(b_nn(4, qq)).holds);
    auto nu_ring = RingDesc::poly({"nu"});
    CHECK(check_abelian_type(b_22(Scalar::parse(nu_ring, "nu"), nu_ring)).holds);

    auto wr = w_ring();
    auto alg = b_44(symbolic_w(wr), wr);
    auto rep = check_abelian_type(alg);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness.has_value());
    // one-odd-slot associator that refuses to vanish
    CHECK_FALSE(associator(Element::basis(alg, 0), Element::basis(alg, 0),
                           Element::basis(alg, 4)).is_zero());
    CHECK_THROWS_AS(check_abelian_type(matrix_rs(2, qq)), domain_mismatch);
}

TEST_CASE("specialized structure constants match numeric construction") {
    auto nu_ring = RingDesc::poly({"nu"});
    auto sym = b_22(Scalar::parse(nu_ring, "nu"), nu_ring);
    auto shadow = specialize_mod(sym, {3}, 101);
    auto gf = RingDesc::gf(101);
    auto direct = b_22(Scalar::from_int(gf, 3), gf);
    CHECK(shadow->constants().size() == direct->constants().size());
    for (const auto& [ij, terms] : direct->constants()) {
        const auto& other = shadow->product(ij.first, ij.second);
        REQUIRE(other.size() == terms.size());
        for (std::size_t t = 0; t < terms.size(); ++t) {
            CHECK(other[t].k == terms[t].k);
            CHECK(other[t].c == terms[t].c);
        }
    }
}

TEST_CASE("randomized identity checks") {
    auto qq = RingDesc::rationals();
    auto alg = matrix_rs(2, qq);
    auto good = randomized_check(alg, identity_right_symmetric(), 1000003, 50, 7);
    CHECK(good.holds);
    CHECK(good.tuples_checked == 50);
    auto bad = randomized_check(alg, identity_associative(), 1000003, 50, 7);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness.has_value());
    CHECK(randomized_check(alg, identity_associative(), 1000003, 0, 7).holds);
    CHECK_THROWS_AS(randomized_check(alg, identity_associative(), 4, 5, 7), characteristic_error);
    CHECK_THROWS_AS(randomized_check(alg, identity_associative(), 3, 5, 7), characteristic_error);

    // symbolic parameters get sampled; poles in 1/tr(w) force resampling
    auto wr = w_ring();
    auto rep = randomized_check(b_44(symbolic_w(wr), wr), identity_right_alternative_super(),
                                1000003, 25, 11);
    CHECK(rep.holds);
    // identical seed, identical transcript
    auto rep2 = randomized_check(b_44(symbolic_w(wr), wr), identity_right_alternative_super(),
                                 1000003, 25, 11);
    CHECK(rep2.tuples_checked == rep.tuples_checked);
}
