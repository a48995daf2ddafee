#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apolar/bigint.hpp"
#include "apolar/mpoly.hpp"
#include "apolar/parse.hpp"

using namespace apolar;

namespace {

FpOps K{32003};

RingPtr ring3() { return make_ring({"x1", "x2", "x3"}, FieldSpec{}); }

MPoly<FpOps> P(const std::string& s, RingPtr r) { return parse_poly(s, r, K); }

}  // namespace

TEST_CASE("bigint arithmetic") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-987654321098765432109876543210");
    CHECK((a + b).to_string() == "-864197532086419753208641975320");
    CHECK((a * b).to_string() ==
          "-121932631137021795226185032733622923332237463801111263526900");
    BigInt q, r;
    BigInt::divmod(b, a, q, r);
    CHECK((q * a + r) == b);
    CHECK(BigInt::gcd(BigInt(48), BigInt(-36)).to_string() == "12");
    CHECK(BigInt::from_string("32003000000007").mod_u32(32003) == 7);

    BigRat half(BigInt(1), BigInt(2));
    BigRat third(BigInt(1), BigInt(3));
    CHECK((half + third).to_string() == "5/6");
    CHECK((half / third).to_string() == "3/2");
    CHECK(BigRat::from_string("-6/4").to_string() == "-3/2");
}

TEST_CASE("grevlex order") {
    auto r = ring3();
    // degree 2 monomials on 3 vars, descending:
    // x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2
    auto ms = monomials_of_degree(3, 2);
    REQUIRE(ms.size() == 6);
    CHECK(monomial_to_string(ms[0], *r) == "x1^2");
    CHECK(monomial_to_string(ms[1], *r) == "x1*x2");
    CHECK(monomial_to_string(ms[2], *r) == "x2^2");
    CHECK(monomial_to_string(ms[3], *r) == "x1*x3");
    CHECK(monomial_to_string(ms[4], *r) == "x2*x3");
    CHECK(monomial_to_string(ms[5], *r) == "x3^2");
}

TEST_CASE("parser grammar") {
    auto r = make_ring({"x1", "x2", "x3", "x4"}, FieldSpec{});
    auto p = P("x1*x2*x3 + x2^2*x4", r);
    CHECK(p.nterms() == 2);
    CHECK(p.degree() == 3);
    CHECK(p.homogeneous());

    CHECK(P("x1^0", r) == MPoly<FpOps>::constant(r, K, 1));
    CHECK_THROWS_AS(P("x1**2", r), SyntaxError);
    CHECK_THROWS_AS(P("x9", r), UnknownVariable);
    CHECK_THROWS_AS(P("x1^1/2", r), NonIntegerExponent);
    CHECK_THROWS_AS(P("", r), SyntaxError);
    CHECK_THROWS_AS(P("x1 +", r), SyntaxError);

    // signs, coefficients, implicit constants
    CHECK(P("-x1 + 2*x2 - 3", r) == P("2*x2 - x1 - 3", r));
    CHECK(P("x1 - x1", r).is_zero());
    // uppercase aliases resolve to the same variables (dual notation)
    CHECK(P("X1*X2^2", r) == P("x1*x2^2", r));
}

TEST_CASE("parse-print round trip") {
    auto r = make_ring({"x1", "x2", "x3", "x4"}, FieldSpec{});
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<MPoly<FpOps>::Term> ts;
        int nt = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < nt; ++i) {
            Expo e = expo_zero();
            for (int v = 0; v < 4; ++v) e[v] = static_cast<uint8_t>(rng() % 4);
            ts.push_back({e, K.from_int(static_cast<long long>(rng() % 32003))});
        }
        auto p = MPoly<FpOps>::from_terms(r, K, ts);
        CHECK(P(p.to_string(K), r) == p);
    }
}

TEST_CASE("contraction action") {
    auto r = ring3();
    // contract(x2, X1X2X3 + X1X2^2) = X1X3 + X1X2, coefficient-free
    auto F = P("x1*x2*x3 + x1*x2^2", r);
    auto s = P("x2", r);
    CHECK(contract(s, F, K) == P("x1*x3 + x1*x2", r));
    // b >= a fails
    CHECK(contract(P("x1^2", r), P("x1", r), K).is_zero());
    // identity action
    CHECK(contract(P("x1^0", r), F, K) == F);
    // the divided-power rule really is coefficient-free
    CHECK(contract(P("x2", r), P("x2^2", r), K) == P("x2", r));
}

TEST_CASE("contraction is associative and bilinear (randomized)") {
    auto r = make_ring({"x1", "x2", "x3", "x4"}, FieldSpec{});
    std::mt19937_64 rng(20240817);
    auto random_poly = [&](int deg) {
        std::vector<MPoly<FpOps>::Term> ts;
        auto ms = monomials_of_degree(4, deg);
        for (const auto& m : ms)
            if (rng() % 3 == 0) ts.push_back({m, K.from_int(static_cast<long long>(rng() % 32003))});
        return MPoly<FpOps>::from_terms(r, K, ts);
    };
    for (int trial = 0; trial < 100; ++trial) {
        int ds = 1 + static_cast<int>(rng() % 2);
        int dt = 1 + static_cast<int>(rng() % 2);
        int dF = ds + dt + static_cast<int>(rng() % 2);
        if (dF > 5) dF = 5;
        auto s = random_poly(ds), t = random_poly(dt), F = random_poly(dF);
        CHECK(contract(s.times(t, K), F, K) == contract(s, contract(t, F, K), K));
        auto a = K.from_int(7 + trial), b = K.from_int(11 + trial);
        auto lhs = contract(s.scaled(a, K).plus(t.scaled(b, K), K), F, K);
        auto rhs = contract(s, F, K).scaled(a, K).plus(contract(t, F, K).scaled(b, K), K);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bidegree components") {
    auto r = make_ring({"x1", "x2", "y1"}, FieldSpec{}, {0, 0, 1});
    auto p = P("x1*y1 + x1^2", r);
    auto comps = bidegree_components(p, K);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].first == Bidegree{1, 1});
    CHECK(comps[0].first.mixed());
    CHECK(comps[1].first == Bidegree{2, 0});
    CHECK(comps[1].first.pure_x());
    // components sum back to p
    auto sum = comps[0].second.plus(comps[1].second, K);
    CHECK(sum == p);
    // (0,0) is neither pure nor mixed
    Bidegree zero{0, 0};
    CHECK(!zero.pure_x());
    CHECK(!zero.pure_y());
    CHECK(!zero.mixed());
    // bidegree components sum to total degree
    for (const auto& [bd, q] : comps) CHECK(bd.total() == q.degree());
}

TEST_CASE("rational field mode") {
    RatOps KQ;
    auto r = make_ring({"x1", "x2"}, FieldSpec{FieldSpec::Kind::Rational, 0});
    auto p = parse_poly<RatOps>("1/2*x1^2 - 2/3*x1*x2", r, KQ);
    CHECK(p.nterms() == 2);
    CHECK(parse_poly<RatOps>(p.to_string(KQ), r, KQ) == p);
    auto F = parse_poly<RatOps>("x1*x2", r, KQ);
    CHECK(contract(parse_poly<RatOps>("x1", r, KQ), F, KQ) ==
          parse_poly<RatOps>("x2", r, KQ));
}

TEST_CASE("ring mismatch and parser edge cases") {
    auto r1 = make_ring({"x1", "x2"}, FieldSpec{});
    auto r2 = make_ring({"x1", "x2", "x3"}, FieldSpec{});
    CHECK_THROWS_AS(contract(P("x1", r1), P("x1*x2", r2), K), RingMismatch);
    CHECK_THROWS_AS(P("x1", r1).plus(P("x1", r2), K), RingMismatch);

    CHECK(P("0*x1 + x2", r1) == P("x2", r1));
    CHECK(P("- x1 - x1", r1) == P("32001*x1", r1));    // -2 mod p
    CHECK(P("3/2*x1", r1) == P("16003*x1", r1));       // 3 * inverse(2) mod 32003
    CHECK_THROWS_AS(P("x1^999", r1), SyntaxError);

    // formal derivative follows the product rule on a spot check
    auto p = P("x1^2*x2 + 5*x2^2", r1);
    auto q = P("x1*x2", r1);
    auto lhs = p.times(q, K).derivative(0, K);
    auto rhs = p.derivative(0, K).times(q, K).plus(p.times(q.derivative(0, K), K), K);
    CHECK(lhs == rhs);
}

TEST_CASE("variable limit") {
    std::vector<std::string> names;
    for (int i = 0; i < 17; ++i) names.push_back("x" + std::to_string(i + 1));
    CHECK_THROWS_AS(make_ring(names, FieldSpec{}), VariableLimitExceeded);
}
