#pragma once

#include <cstdint>
#include <optional>

#include "apolar/cotangent.hpp"
#include "apolar/rng.hpp"

namespace apolar {

// Uniform random cubic: independent coefficients on every degree-3 monomial.
template <class F>
MPoly<F> random_cubic(const RingPtr& ring, const F& K, uint64_t seed) {
    uint64_t state = seed;
    std::vector<typename MPoly<F>::Term> ts;
    for (const Expo& m : monomials_of_degree(ring->nvars(), 3)) {
        auto c = K.from_int(static_cast<long long>(splitmix64_next(state) % 32003));
        if (!K.is_zero(c)) ts.push_back({m, c});
    }
    return MPoly<F>::from_terms(ring, K, std::move(ts));
}

// Condition report for the three bullets defining a very general cubic:
// Hilbert function (1,n,n,1), quadric generators with only linear (degree-3)
// first syzygies, and trivial negative tangents.
struct VeryGeneralReport {
    int n = 0;
    bool hf_ok = false;
    bool betti_ok = false;
    bool tnt = false;
    bool concentrated_minus_one = false;  // extra evidence, not a bullet
    std::vector<int> hf;
    BettiTable betti;
    GradedDims t1_negative;  // the negative part of T^1
    int der_bb_1 = 0;

    bool all() const { return hf_ok && betti_ok && tnt; }
};

template <class F>
VeryGeneralReport is_very_general_cubic(const MPoly<F>& f, const F& K) {
    if (f.is_zero() || !f.homogeneous() || f.degree() != 3)
        throw NotCubic("very-general check needs a nonzero homogeneous cubic");
    int n = f.nvars();
    VeryGeneralReport rep;
    rep.n = n;
    auto B = apolar_algebra(f, K);
    rep.hf = B.hf;
    rep.hf_ok = B.hf == std::vector<int>{1, n, n, 1};
    rep.betti = minimal_betti(B, K);
    long long expected_quadrics = static_cast<long long>(n + 1) * n / 2 - n;
    rep.betti_ok = rep.betti.degrees(1) == std::vector<int>{2} &&
                   rep.betti.at(1, 2) == expected_quadrics &&
                   rep.betti.degrees(2) == std::vector<int>{3};
    auto tangent = t1_graded(B, K);
    rep.tnt = tangent.tnt;
    rep.concentrated_minus_one = tangent.concentrated_minus_one;
    rep.der_bb_1 = tangent.der_bb_1;
    rep.t1_negative.lo = tangent.t1.lo;
    rep.t1_negative.hi = -1;
    for (const auto& [e, d] : tangent.t1.dims)
        if (e < 0) rep.t1_negative.set(e, d);
    return rep;
}

// Sample cubics until one passes all three bullets; the seed and the number
// of attempts are recorded. Openness makes success overwhelmingly likely for
// n large enough, but a failure after max_trials is reported, not hidden.
template <class F>
struct VeryGeneralWitness {
    std::optional<MPoly<F>> cubic;
    uint64_t seed = 0;
    uint64_t subseed = 0;
    int trials_used = 0;
    std::vector<VeryGeneralReport> attempts;
    bool found() const { return cubic.has_value(); }
};

template <class F>
VeryGeneralWitness<F> sample_very_general(int n, const F& K, uint64_t seed,
                                          int max_trials = 20) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    FieldSpec fs;
    if constexpr (std::is_same_v<F, FpOps>)
        fs = FieldSpec{FieldSpec::Kind::Fp, K.p};
    else
        fs = FieldSpec{FieldSpec::Kind::Rational, 0};
    RingPtr ring = make_ring(names, fs);
    VeryGeneralWitness<F> out;
    out.seed = seed;
    for (int t = 0; t < max_trials; ++t) {
        uint64_t sub = trial_seed(seed, static_cast<uint64_t>(t));
        MPoly<F> f = random_cubic(ring, K, sub);
        if (f.is_zero()) continue;
        VeryGeneralReport rep = is_very_general_cubic(f, K);
        out.attempts.push_back(rep);
        out.trials_used = t + 1;
        if (rep.all()) {
            out.cubic = f;
            out.subseed = sub;
            break;
        }
    }
    return out;
}

}  // namespace apolar
