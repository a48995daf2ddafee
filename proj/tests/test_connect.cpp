#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apolar/connect.hpp"
#include "apolar/parse.hpp"

using namespace apolar;

namespace {

FpOps K{32003};

MPoly<FpOps> P(const std::string& s, RingPtr r) { return parse_poly(s, r, K); }

const char* kM5Cubic = "x1*x2*x3 + x2^2*x4 + x3^2*x5 + x1*x4*x5";

}  // namespace

TEST_CASE("union of two k[x]/(x^2)") {
    auto r1 = make_ring({"x"}, FieldSpec{});
    auto BX = apolar_algebra(P("x", r1), K);  // k[x]/(x^2), HF (1,1)
    auto U = union_along_point(BX, BX, K);
    CHECK(U.hf == std::vector<int>{1, 2});
    CHECK(U.length() == 3);
    // ideal is (x1^2, y1^2, x1*y1)
    CHECK(U.min_gens.size() == 3);
}

TEST_CASE("union with a point returns the other factor") {
    auto r1 = make_ring({"x"}, FieldSpec{});
    auto point = presentation_from_generators<FpOps>({P("x", r1)}, K);  // k
    CHECK(point.length() == 1);
    auto BY = apolar_algebra(P("x^2", r1), K);
    auto U = union_along_point(point, BY, K);
    CHECK(U.hf == BY.hf);
    auto U2 = union_along_point(BY, point, K);
    CHECK(U2.hf == BY.hf);
}

TEST_CASE("union of two (1,5,5,1) algebras") {
    auto r5 = make_ring({"x1", "x2", "x3", "x4", "x5"}, FieldSpec{});
    auto B = apolar_algebra(P(kM5Cubic, r5), K);
    auto U = union_along_point(B, B, K);
    CHECK(U.hf == std::vector<int>{1, 10, 10, 2});
    CHECK(U.length() == 23);
    auto s = socle(U, K);
    CHECK(s.total_dim() == 2);
    CHECK(s.dims == std::map<int, int>{{3, 2}});
    CHECK(U.ring->bigraded());
    CHECK(is_level(U, 3, K));
}

TEST_CASE("connected sum of two cubics in one variable each") {
    auto r1 = make_ring({"x"}, FieldSpec{});
    auto F = P("x^3", r1);
    auto cs = connected_sum(F, F, K);
    CHECK(cs.agree);
    CHECK(cs.direct.hf == std::vector<int>{1, 2, 2, 1});
    // Apolar(X^3 + Y^3) = k[x,y]/(xy, x^3 - y^3)
    auto ur = cs.direct.ring;
    auto expect = buchberger<FpOps>({P("x1*y1", ur), P("x1^3 - y1^3", ur)}, K);
    CHECK(ideal_equal(cs.direct.gb, expect, K));
}

TEST_CASE("connected sum of two m=5 paper cubics") {
    auto r5 = make_ring({"x1", "x2", "x3", "x4", "x5"}, FieldSpec{});
    auto F = P(kM5Cubic, r5);
    auto cs = connected_sum(F, F, K);
    CHECK(cs.agree);
    CHECK(cs.direct.hf == std::vector<int>{1, 10, 10, 1});
    CHECK(cs.direct.length() == 22);  // 2*5 + 2*5 + 2
    CHECK(cs.quotient.hf == cs.direct.hf);
}

TEST_CASE("connected sum degree guards") {
    auto r1 = make_ring({"x"}, FieldSpec{});
    CHECK_THROWS_AS(connected_sum(P("x^3", r1), P("x^4", r1), K), DegreeMismatch);
    CHECK_THROWS_AS(connected_sum(P("x^2", r1), P("x^2", r1), K), DegreeTooSmall);
}

TEST_CASE("product presentation and the hypersurface fiber for X^d, Y^d") {
    auto r1 = make_ring({"x"}, FieldSpec{});
    auto BX = apolar_algebra(P("x^3", r1), K);
    auto sx = socle(BX, K);
    auto uring = make_union_ring(1, 1, FieldSpec{}, "s", "t");
    auto f = shift_into_ring(*sx.normalized_dual, uring, 0, K);
    auto g = shift_into_ring(*sx.normalized_dual, uring, 1, K);
    auto fiber = product_presentation(BX, BX, {f.minus(g, K)}, uring, K);
    // k[s,t]/(s^{d+1}, t^{d+1}, s^d - t^d)
    auto expect = buchberger<FpOps>(
        {P("s1^4", uring), P("t1^4", uring), P("s1^3 - t1^3", uring)}, K);
    CHECK(ideal_equal(fiber.gb, expect, K));
    // reduced GB {s^3 - t^3, s*t^3, t^4}: standard monomials count to 10
    CHECK(fiber.length() == 10);
    CHECK(fiber.hf == std::vector<int>{1, 2, 3, 3, 1});
    // Artinian local of length > 1: non-reduced
    CHECK(fiber.length() > 1);
}

TEST_CASE("connected-sum agreement on random cubic pairs") {
    std::mt19937_64 rng(20250808);
    int done = 0;
    while (done < 3) {
        int n1 = 2 + static_cast<int>(rng() % 2);
        int n2 = 2 + static_cast<int>(rng() % 2);
        auto make = [&](int n) {
            std::vector<std::string> names;
            for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
            auto r = make_ring(names, FieldSpec{});
            std::vector<MPoly<FpOps>::Term> ts;
            for (const auto& m : monomials_of_degree(n, 3))
                if (rng() % 2) ts.push_back({m, K.from_int(static_cast<long long>(rng() % 32003))});
            return MPoly<FpOps>::from_terms(r, K, ts);
        };
        auto f = make(n1), g = make(n2);
        if (f.is_zero() || g.is_zero()) continue;
        ++done;
        auto cs = connected_sum(f, g, K);
        CHECK(cs.agree);
        // fiber-product length identity through the union
        auto U = union_along_point(cs.bx, cs.by, K);
        CHECK(U.length() == cs.bx.length() + cs.by.length() - 1);
        CHECK(cs.direct.length() == U.length() - 1);
    }
}
