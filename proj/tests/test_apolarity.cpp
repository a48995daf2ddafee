#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apolar/apolarity.hpp"
#include "apolar/parse.hpp"

using namespace apolar;

namespace {

FpOps K{32003};

MPoly<FpOps> P(const std::string& s, RingPtr r) { return parse_poly(s, r, K); }

const char* kM5Cubic = "x1*x2*x3 + x2^2*x4 + x3^2*x5 + x1*x4*x5";

}  // namespace

TEST_CASE("annihilator of the worked example, over F_p and Q") {
    auto r = make_ring({"x1", "x2", "x3"}, FieldSpec{});
    auto F = P("x1*x2*x3 + x1*x2^2", r);
    auto gens = annihilator(F, K);
    auto claimed = buchberger<FpOps>({P("x3^2", r), P("x2^2 - x2*x3", r), P("x1^2", r)}, K);
    auto computed = buchberger(gens, K);
    CHECK(ideal_equal(claimed, computed, K));
    // every generator contracts F to zero
    for (const auto& g : gens) CHECK(contract(g, F, K).is_zero());

    RatOps KQ;
    auto rq = make_ring({"x1", "x2", "x3"}, FieldSpec{FieldSpec::Kind::Rational, 0});
    auto FQ = parse_poly<RatOps>("x1*x2*x3 + x1*x2^2", rq, KQ);
    auto gensQ = annihilator(FQ, KQ);
    auto claimedQ = buchberger<RatOps>({parse_poly<RatOps>("x3^2", rq, KQ),
                                        parse_poly<RatOps>("x2^2 - x2*x3", rq, KQ),
                                        parse_poly<RatOps>("x1^2", rq, KQ)},
                                       KQ);
    CHECK(ideal_equal(claimedQ, buchberger(gensQ, KQ), KQ));
}

TEST_CASE("annihilator of pure powers and a rank-2 quadric") {
    auto r1 = make_ring({"x"}, FieldSpec{});
    auto gens = annihilator(P("x^3", r1), K);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == P("x^4", r1));

    auto r2 = make_ring({"x1", "x2"}, FieldSpec{});
    auto gens2 = annihilator(P("x1*x2", r2), K);
    REQUIRE(gens2.size() == 2);
    CHECK(gens2[0] == P("x1^2", r2));
    CHECK(gens2[1] == P("x2^2", r2));
}

TEST_CASE("annihilator rejects bad input") {
    auto r = make_ring({"x1", "x2"}, FieldSpec{});
    CHECK_THROWS_AS(annihilator(MPoly<FpOps>::zero(r), K), ZeroPolynomial);
    CHECK_THROWS_AS(annihilator(P("x1^2 + x2", r), K), Inhomogeneous);
}

TEST_CASE("apolar algebra Hilbert functions") {
    auto r5 = make_ring({"x1", "x2", "x3", "x4", "x5"}, FieldSpec{});
    auto B = apolar_algebra(P(kM5Cubic, r5), K);
    CHECK(B.hf == std::vector<int>{1, 5, 5, 1});
    CHECK(B.length() == 12);
    CHECK(B.catalecticant_hf == B.hf);

    auto r1 = make_ring({"x"}, FieldSpec{});
    CHECK(apolar_algebra(P("x^3", r1), K).hf == std::vector<int>{1, 1, 1, 1});

    auto r3 = make_ring({"x1", "x2", "x3"}, FieldSpec{});
    CHECK(apolar_algebra(P("x1*x2*x3 + x1*x2^2", r3), K).hf == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("socle of apolar algebras is one-dimensional and normalized") {
    auto r = make_ring({"x1", "x2", "x3"}, FieldSpec{});
    auto F = P("x1*x2*x3 + x1*x2^2", r);
    auto B = apolar_algebra(F, K);
    auto s = socle(B, K);
    CHECK(s.gorenstein);
    CHECK(s.dims == std::map<int, int>{{3, 1}});
    REQUIRE(s.normalized_dual.has_value());
    auto pairing = contract(*s.normalized_dual, F, K);
    CHECK(pairing == MPoly<FpOps>::constant(r, K, 1));
}

TEST_CASE("socle of a non-Gorenstein level algebra") {
    auto r = make_ring({"x1", "x2"}, FieldSpec{});
    auto B = presentation_from_generators<FpOps>(
        {P("x1^2", r), P("x1*x2", r), P("x2^2", r)}, K);
    auto s = socle(B, K);
    CHECK(s.total_dim() == 2);
    CHECK(s.dims == std::map<int, int>{{1, 2}});
    CHECK(is_level(B, 1, K));
    CHECK(!s.gorenstein);
}

TEST_CASE("a non-level algebra is detected") {
    auto r = make_ring({"x1", "x2"}, FieldSpec{});
    auto B = presentation_from_generators<FpOps>(
        {P("x1^2", r), P("x1*x2", r), P("x2^3", r)}, K);
    auto s = socle(B, K);
    CHECK(s.dims == std::map<int, int>{{1, 1}, {2, 1}});
    CHECK(!is_level(B, 1, K));
    CHECK(!is_level(B, 2, K));
}

TEST_CASE("apolar algebras are d-level") {
    auto r5 = make_ring({"x1", "x2", "x3", "x4", "x5"}, FieldSpec{});
    auto B = apolar_algebra(P(kM5Cubic, r5), K);
    CHECK(is_level(B, 3, K));
}

TEST_CASE("socle quotient") {
    auto r1 = make_ring({"x"}, FieldSpec{});
    auto B = apolar_algebra(P("x^2", r1), K);  // k[x]/(x^3)
    auto Q = socle_quotient(B, K);
    CHECK(Q.hf == std::vector<int>{1, 1});  // k[x]/(x^2)

    auto r3 = make_ring({"x1", "x2", "x3"}, FieldSpec{});
    auto B3 = apolar_algebra(P("x1*x2*x3 + x1*x2^2", r3), K);
    auto Q3 = socle_quotient(B3, K);
    CHECK(Q3.hf == std::vector<int>{1, 3, 3});
    CHECK(Q3.length() == 7);

    auto r2 = make_ring({"x1", "x2"}, FieldSpec{});
    auto NG = presentation_from_generators<FpOps>(
        {P("x1^2", r2), P("x1*x2", r2), P("x2^2", r2)}, K);
    CHECK_THROWS_AS(socle_quotient(NG, K), NotGorenstein);
}

TEST_CASE("Hilbert symmetry and two-path agreement on random forms") {
    std::mt19937_64 rng(777001);
    int done = 0;
    while (done < 50) {
        int n = 2 + static_cast<int>(rng() % 5);  // 2..6 vars
        int d = 2 + static_cast<int>(rng() % 4);  // 2..5
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        auto r = make_ring(names, FieldSpec{});
        std::vector<MPoly<FpOps>::Term> ts;
        for (const auto& m : monomials_of_degree(n, d))
            if (rng() % 2) ts.push_back({m, K.from_int(static_cast<long long>(rng() % 32003))});
        auto f = MPoly<FpOps>::from_terms(r, K, ts);
        if (f.is_zero()) continue;
        ++done;
        auto B = apolar_algebra(f, K);  // throws if symmetry or two-path fails
        CHECK(B.hf == B.catalecticant_hf);
        int top = B.top_degree();
        for (int i = 0; i <= top; ++i) CHECK(B.hf[i] == B.hf[top - i]);
        for (const auto& g : B.min_gens) CHECK(contract(g, f, K).is_zero());
    }
}
