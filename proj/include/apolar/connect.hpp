#pragma once

#include "apolar/apolarity.hpp"

namespace apolar {

// Transport a polynomial into another ring by shifting every variable index
// by `offset` (the target ring must have enough variables).
template <class F>
MPoly<F> shift_into_ring(const MPoly<F>& p, const RingPtr& target, int offset, const F& K) {
    int n = p.nvars();
    std::vector<typename MPoly<F>::Term> ts;
    for (const auto& t : p.terms()) {
        Expo e = expo_zero();
        for (int i = 0; i < n; ++i) e[i + offset] = t.mono[i];
        ts.push_back({e, t.coef});
    }
    return MPoly<F>::from_terms(target, K, std::move(ts));
}

// The bigraded ring k[x1..xn, y1..ym] housing unions and connected sums.
// Variable blocks are auto-renamed; block tags record the bigrading.
inline RingPtr make_union_ring(int n, int m, const FieldSpec& field,
                               const char* xprefix = "x", const char* yprefix = "y") {
    std::vector<std::string> names;
    std::vector<int> blocks;
    for (int i = 0; i < n; ++i) {
        names.push_back(xprefix + std::to_string(i + 1));
        blocks.push_back(0);
    }
    for (int j = 0; j < m; ++j) {
        names.push_back(yprefix + std::to_string(j + 1));
        blocks.push_back(1);
    }
    return make_ring(std::move(names), field, std::move(blocks));
}

// Union along the point: O_{X u* Y} = O_X x_k O_Y, presented in the disjoint
// variable union by I_X + I_Y + (x_i y_j). A point factor is the fiber
// product with k, which returns the other algebra unchanged.
template <class F>
AlgebraPresentation<F> union_along_point(const AlgebraPresentation<F>& BX,
                                         const AlgebraPresentation<F>& BY, const F& K) {
    if (BX.length() == 1) return BY;
    if (BY.length() == 1) return BX;
    int n = BX.ring->nvars();
    int m = BY.ring->nvars();
    RingPtr uring = make_union_ring(n, m, BX.ring->field());
    std::vector<MPoly<F>> gens;
    for (const auto& g : BX.min_gens) gens.push_back(shift_into_ring(g, uring, 0, K));
    for (const auto& g : BY.min_gens) gens.push_back(shift_into_ring(g, uring, n, K));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            Expo e = expo_zero();
            e[i] = 1;
            e[n + j] = 1;
            gens.push_back(MPoly<F>::monomial(uring, K, e, K.one()));
        }
    }
    AlgebraPresentation<F> U = presentation_from_generators(gens, K);
    // Fiber-product bookkeeping: h_0 = 1, h_i = h_i(X) + h_i(Y) for i > 0.
    if (U.length() != BX.length() + BY.length() - 1)
        throw Error("UnionLength", "union length must be len(X) + len(Y) - 1");
    for (size_t i = 1; i < U.hf.size(); ++i) {
        int expect = (i < BX.hf.size() ? BX.hf[i] : 0) + (i < BY.hf.size() ? BY.hf[i] : 0);
        if (U.hf[i] != expect)
            throw Error("UnionHilbert", "union Hilbert function mismatch");
    }
    return U;
}

template <class F>
struct ConnectedSum {
    AlgebraPresentation<F> direct;    // Apolar(F + G) in the union ring
    AlgebraPresentation<F> quotient;  // O_{X u* Y} / (f - g)
    AlgebraPresentation<F> bx;        // Apolar(F), x block only
    AlgebraPresentation<F> by;        // Apolar(G), y block only
    MPoly<F> socle_dual_x;            // f with f o F = 1 (in the union ring)
    MPoly<F> socle_dual_y;            // g with g o G = 1 (in the union ring)
    bool agree = false;               // the two presentations define equal ideals
};

// Connected sum of Apolar(F) and Apolar(G), computed along both routes of
// the defining identity Apolar(F+G) = O_{X u* Y} / (f - g) and cross-checked
// by mutual ideal membership.
template <class F>
ConnectedSum<F> connected_sum(const MPoly<F>& FX, const MPoly<F>& GY, const F& K) {
    if (FX.is_zero() || GY.is_zero()) throw ZeroPolynomial("connected sum of zero form");
    if (!FX.homogeneous() || !GY.homogeneous())
        throw Inhomogeneous("connected sum needs homogeneous forms");
    int d = FX.degree();
    if (GY.degree() != d)
        throw DegreeMismatch("deg F = " + std::to_string(d) +
                             ", deg G = " + std::to_string(GY.degree()));
    if (d < 3) throw DegreeTooSmall("connected sums need degree >= 3, got " + std::to_string(d));

    ConnectedSum<F> out;
    out.bx = apolar_algebra(FX, K);
    out.by = apolar_algebra(GY, K);
    int n = FX.ring()->nvars();
    int m = GY.ring()->nvars();
    RingPtr uring = make_union_ring(n, m, FX.ring()->field());

    MPoly<F> fu = shift_into_ring(FX, uring, 0, K);
    MPoly<F> gu = shift_into_ring(GY, uring, n, K);
    out.direct = apolar_algebra(fu.plus(gu, K), K);

    SocleData<F> sx = socle(out.bx, K);
    SocleData<F> sy = socle(out.by, K);
    out.socle_dual_x = shift_into_ring(*sx.normalized_dual, uring, 0, K);
    out.socle_dual_y = shift_into_ring(*sy.normalized_dual, uring, n, K);

    AlgebraPresentation<F> U = union_along_point(out.bx, out.by, K);
    std::vector<MPoly<F>> qgens;
    for (const auto& g : U.min_gens) qgens.push_back(shift_into_ring(g, uring, 0, K));
    qgens.push_back(out.socle_dual_x.minus(out.socle_dual_y, K));
    out.quotient = presentation_from_generators(qgens, K);

    out.agree = ideal_equal(out.direct.gb, out.quotient.gb, K);
    return out;
}

// The product algebra O_X (x) O_Y in disjoint parameter variables (no cross
// relations), optionally modulo extra elements. Used by the deformation
// fiber prediction.
template <class F>
AlgebraPresentation<F> product_presentation(const AlgebraPresentation<F>& BX,
                                            const AlgebraPresentation<F>& BY,
                                            const std::vector<MPoly<F>>& extra_in_union_ring,
                                            const RingPtr& uring, const F& K) {
    int n = BX.ring->nvars();
    std::vector<MPoly<F>> gens;
    for (const auto& g : BX.min_gens) gens.push_back(shift_into_ring(g, uring, 0, K));
    for (const auto& g : BY.min_gens) gens.push_back(shift_into_ring(g, uring, n, K));
    for (const auto& e : extra_in_union_ring) gens.push_back(e);
    return presentation_from_generators(gens, K);
}

}  // namespace apolar
