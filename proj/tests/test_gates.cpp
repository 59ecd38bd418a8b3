#include <doctest.h>

#include "rotorder/gates.hpp"
#include "rotorder/trigpoly.hpp"
#include "testutil.hpp"

using namespace rotorder;
using testutil::pq;
using testutil::pz;
using testutil::q;

namespace {

Gate gate(const char* name, long x, long y, long z, long num, long den) {
    return Gate(name, {mpz_class(x), mpz_class(y), mpz_class(z)}, RationalAngle(num, den));
}

}  // namespace

TEST_CASE("axis_cosine") {
    CHECK(equals_rational(axis_cosine(gate("a", 1, 0, 0, 1, 2), gate("b", 0, 1, 0, 1, 2)), 0));
    CHECK(equals_rational(axis_cosine(gate("a", 1, 0, 0, 1, 2), gate("b", 1, 0, 0, 1, 2)), 1));
    CHECK(equals_rational(axis_cosine(gate("a", 2, 0, 0, 1, 2), gate("b", 3, 0, 0, 1, 2)), 1));
    CHECK(equals_rational(axis_cosine(gate("a", 1, 1, 0, 1, 2), gate("b", -2, -2, 0, 1, 2)), -1));
    CHECK(equals_rational(axis_cosine(gate("a", 3, 4, 0, 1, 1), gate("b", 0, 1, 0, 1, 1)),
                          q("4/5")));

    AlgebraicReal c = axis_cosine(gate("a", 0, 1, 1, 1, 1), gate("b", 0, 0, 1, 1, 2));
    CHECK(c.annihilator() == pz({-1, 0, 2}));  // 2x^2 - 1
    CHECK(sign(c) == 1);
    CHECK(c.approx() == doctest::Approx(0.70710678).epsilon(1e-8));
}

TEST_CASE("gate invariants") {
    CHECK_THROWS_AS(gate("bad", 0, 0, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("product trace identity for perpendicular equal angles, exact") {
    for (long den = 1; den <= 12; ++den) {
        for (long num = 1; num <= den; ++num) {
            mpz_class g, nz = num, dz = den;
            mpz_gcd(g.get_mpz_t(), nz.get_mpz_t(), dz.get_mpz_t());
            if (g != 1) continue;
            Gate a = gate("a", 1, 0, 0, num, den);
            Gate b = gate("b", 0, 0, 1, num, den);
            AlgebraicReal cg = product_cos_gamma(a, b);
            // 2cosγ + 1 == cos²φ + 2cosφ, exactly
            AlgebraicReal lhs = shift_by_rational(1, scale_by_rational(2, cg));
            AlgebraicReal cphi = cos_of(RationalAngle(num, den));
            AlgebraicReal rhs = alg_add(alg_square(cphi), scale_by_rational(2, cphi));
            CHECK(alg_equal(lhs, rhs));
        }
    }
}

TEST_CASE("product trace identity holds to 2^-60 across the q<=30 sweep") {
    for (long den = 13; den <= 30; ++den) {
        for (long num = 1; num <= den; ++num) {
            mpz_class g, nz = num, dz = den;
            mpz_gcd(g.get_mpz_t(), nz.get_mpz_t(), dz.get_mpz_t());
            if (g != 1) continue;
            Gate a = gate("a", 1, 0, 0, num, den);
            Gate b = gate("b", 0, 0, 1, num, den);
            mpq_class cg = product_cos_gamma(a, b).approx_rational(pow2(-70));
            mpq_class cphi = testutil::cos_pi(mpq_class(num, den));
            CHECK(testutil::within(2 * cg + 1, cphi * cphi + 2 * cphi, pow2(-60)));
        }
    }
}

TEST_CASE("inverse pair composes to the identity rotation") {
    Gate a = gate("a", 1, 2, 2, 3, 7);
    Gate m = gate("b", 1, 2, 2, -3, 7);
    CHECK(equals_rational(product_cos_gamma(a, m), 1));
}

TEST_CASE("hadamard-axis relation 2cosγ + 1 = -cos 2φ") {
    for (const auto& [num, den] : std::vector<std::pair<long, long>>{{1, 4}, {1, 5}, {2, 7}}) {
        Gate h = gate("H", 0, 1, 1, 1, 1);
        Gate t = gate("T", 0, 0, 1, 2 * num, den);
        AlgebraicReal cg = product_cos_gamma(h, t);
        AlgebraicReal lhs = shift_by_rational(1, scale_by_rational(2, cg));
        AlgebraicReal rhs = alg_neg(cos_of(RationalAngle(2 * num, den)));
        CHECK(alg_equal(lhs, rhs));
    }
}

TEST_CASE("product matches double-precision evaluation") {
    for (const auto& [ax, az, num1, den1, num2, den2] :
         std::vector<std::array<long, 6>>{{1, 1, 1, 3, 1, 4}, {2, 1, 2, 5, 1, 6}}) {
        Gate a = gate("a", ax, 0, az, num1, den1);
        Gate b = gate("b", 0, 1, 1, num2, den2);
        AlgebraicReal cg = product_cos_gamma(a, b);
        const double pi = 3.14159265358979323846;
        double h1 = 0.5 * pi * double(num1) / double(den1);
        double h2 = 0.5 * pi * double(num2) / double(den2);
        double n1 = std::sqrt(double(ax * ax + az * az)), n2 = std::sqrt(2.0);
        double dotk = double(az) / (n1 * n2);
        double c = std::cos(h1) * std::cos(h2) - std::sin(h1) * std::sin(h2) * dotk;
        double expect = 2 * c * c - 1;
        CHECK(cg.approx() == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("product_order on the corollary cases") {
    ProductVerdict fin = product_order(gate("a", 1, 0, 0, 1, 2), gate("b", 0, 0, 1, 1, 2));
    CHECK_FALSE(fin.infinite());
    CHECK(fin.verdict.angle == RationalAngle(2, 3));
    CHECK(*fin.order == 3);

    ProductVerdict inf = product_order(gate("a", 1, 0, 0, 1, 5), gate("b", 0, 0, 1, 1, 5));
    CHECK(inf.infinite());
    CHECK_FALSE(inf.verdict.rational);

    // commuting same-axis composition: π/3 + π/3 = 2π/3
    ProductVerdict same = product_order(gate("a", 1, 0, 0, 1, 3), gate("b", 1, 0, 0, 1, 3));
    CHECK_FALSE(same.infinite());
    CHECK(same.verdict.angle == RationalAngle(2, 3));
    CHECK(*same.order == 3);
}

TEST_CASE("corollary sweep: finite exactly on multiples of π/2") {
    for (long den = 1; den <= 30; ++den) {
        for (long num = 1; num <= den; ++num) {
            mpz_class g, nz = num, dz = den;
            mpz_gcd(g.get_mpz_t(), nz.get_mpz_t(), dz.get_mpz_t());
            if (g != 1) continue;
            ProductVerdict v =
                product_order(gate("a", 1, 0, 0, num, den), gate("b", 0, 1, 0, num, den));
            CHECK(v.infinite() == !(den == 1 || den == 2));
        }
    }
}

TEST_CASE("ht classifier on the named instances") {
    ProductVerdict a = ht_classify(RationalAngle(1, 8));
    CHECK(a.infinite());

    ProductVerdict b = ht_classify(RationalAngle(1, 4));
    CHECK_FALSE(b.infinite());
    CHECK(b.verdict.angle == RationalAngle(2, 3));
    CHECK(*b.order == 3);

    CHECK(ht_classify(RationalAngle(1, 12)).infinite());

    // φ = 0: the product is the Hadamard rotation itself, order 2
    ProductVerdict h = ht_classify(RationalAngle(0, 1));
    CHECK_FALSE(h.infinite());
    CHECK(h.verdict.angle == RationalAngle(1, 1));
    CHECK(*h.order == 2);

    // φ = π/2: rotation by π/2, order 4
    ProductVerdict s = ht_classify(RationalAngle(1, 2));
    CHECK_FALSE(s.infinite());
    CHECK(*s.order == 4);
}

TEST_CASE("ht classifier sweep matches the finite set mod π") {
    for (long den = 1; den <= 16; ++den) {
        for (long num = 0; num < 2 * den; ++num) {
            mpz_class g, nz = num, dz = den;
            mpz_gcd(g.get_mpz_t(), nz.get_mpz_t(), dz.get_mpz_t());
            if (g != 1) continue;
            RationalAngle phi(num, den);
            // finite iff φ ≡ 0, π/4, π/2, 3π/4 (mod π)
            mpq_class frac = phi.over_pi();
            mpz_class fl(frac.get_num() / frac.get_den());
            if (frac < 0) fl -= 1;
            mpq_class r = frac - mpq_class(fl);
            bool finite = (r == 0 || r == q("1/4") || r == q("1/2") || r == q("3/4"));
            CHECK(ht_classify(phi).infinite() == !finite);
        }
    }
}

TEST_CASE("group closure of quarter-turn generators") {
    ClosureResult one = group_closure({gate("z", 0, 0, 1, 1, 1)}, 10);
    CHECK_FALSE(one.cap_exceeded);
    CHECK(one.order == 2);

    ClosureResult cube =
        group_closure({gate("x", 1, 0, 0, 1, 2), gate("z", 0, 0, 1, 1, 2)}, 1000);
    CHECK_FALSE(cube.cap_exceeded);
    CHECK(cube.order == 24);  // rotation group of the cube

    ClosureResult klein =
        group_closure({gate("x", 1, 0, 0, 1, 1), gate("y", 0, 1, 0, 1, 1)}, 100);
    CHECK_FALSE(klein.cap_exceeded);
    CHECK(klein.order == 4);

    // π rotation about a diagonal axis is still an exact signed permutation
    ClosureResult diag = group_closure({gate("d", 0, 1, 1, 1, 1)}, 10);
    CHECK_FALSE(diag.cap_exceeded);
    CHECK(diag.order == 2);

    CHECK_THROWS_AS(group_closure({gate("bad", 1, 0, 0, 1, 3)}, 10), std::invalid_argument);
    CHECK_THROWS_AS(group_closure({gate("bad", 1, 1, 0, 1, 2)}, 10), std::invalid_argument);

    ClosureResult capped =
        group_closure({gate("x", 1, 0, 0, 1, 2), gate("z", 0, 0, 1, 1, 2)}, 5);
    CHECK(capped.cap_exceeded);
}

TEST_CASE("word search finds the perpendicular witness") {
    std::vector<Gate> gates{gate("A", 1, 0, 0, 1, 5), gate("B", 0, 0, 1, 1, 5)};
    auto w = word_search(gates, 2);
    REQUIRE(w.has_value());
    REQUIRE(w->word.size() == 2);
    CHECK(w->word[0] == Letter{0, false});
    CHECK(w->word[1] == Letter{1, false});
    CHECK(w->verdict.infinite());

    // determinism
    auto w2 = word_search(gates, 2);
    REQUIRE(w2.has_value());
    CHECK(w2->word == w->word);
}

TEST_CASE("word search on an all-finite set reports nothing") {
    std::vector<Gate> gates{gate("H", 0, 1, 1, 1, 1), gate("S", 0, 0, 1, 1, 2)};
    WordSearchStats stats;
    CHECK_FALSE(word_search(gates, 2, &stats).has_value());
    CHECK(stats.words_checked > 0);
    CHECK(stats.degree_overflows.empty());
}

TEST_CASE("a single finite-order gate never yields a witness") {
    std::vector<Gate> gates{gate("R", 2, 1, 0, 3, 7)};
    CHECK_FALSE(word_search(gates, 6).has_value());
}

TEST_CASE("word search records degree overflows instead of failing") {
    // generic skew axes: quaternion components multiply degrees fast
    std::vector<Gate> gates{gate("A", 1, 2, 3, 2, 7), gate("B", 3, 1, 2, 2, 9)};
    WordSearchStats stats;
    auto w = word_search(gates, 2, &stats);
    CHECK(!stats.degree_overflows.empty());
    for (const auto& word : stats.degree_overflows) CHECK(word.size() >= 2);
    (void)w;
}

TEST_CASE("gate set json parsing") {
    const char* good = R"({"gates":[
        {"name":"H","axis":[0,1,1],"angle":{"num":1,"den":1}},
        {"name":"T","axis":[0,0,1],"angle":{"num":1,"den":4}}]})";
    auto gs = parse_gate_set_json(good);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].name == "H");
    CHECK(gs[0].axis[1] == 1);
    CHECK(gs[1].angle == RationalAngle(1, 4));

    CHECK_THROWS_AS(parse_gate_set_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gate_set_json(R"({"gates":[],"extra":1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gate_set_json(R"({"gates":[{"name":"a","axis":[0,0,1],
        "angle":{"num":1,"den":1},"color":"red"}]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gate_set_json(R"({"gates":[{"name":"a","axis":[0,0,1.5],
        "angle":{"num":1,"den":1}}]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gate_set_json(R"({"gates":[{"name":"a","axis":[0,0,1],
        "angle":{"num":1,"den":0}}]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gate_set_json(R"({"gates":[{"name":"a","axis":[0,0,0],
        "angle":{"num":1,"den":1}}]})"), std::invalid_argument);
}
