#pragma once

#include "apolar/apolarity.hpp"

namespace apolar {

// Minimal graded Betti numbers beta_{i,j} for homological steps i <= 2.
struct BettiTable {
    std::map<std::pair<int, int>, long long> counts;  // (i, j) -> count, zeros omitted

    long long at(int i, int j) const {
        auto it = counts.find({i, j});
        return it == counts.end() ? 0 : it->second;
    }
    // Internal degrees with a nonzero entry at homological step i.
    std::vector<int> degrees(int i) const {
        std::vector<int> out;
        for (const auto& [key, v] : counts)
            if (key.first == i && v > 0) out.push_back(key.second);
        return out;
    }
    bool operator==(const BettiTable& o) const { return counts == o.counts; }
};

// beta_{i,j} computed as Koszul homology over the Artinian quotient itself:
// beta_{i,j} = dim H_i(Lambda^*(k^n) (x) B)_j. The complex lives on B (a few
// dozen dimensions), never on the big polynomial ring, which keeps step two
// cheap in every pipeline this toolkit runs. Agrees with the degreewise
// Nakayama/minimalization description of the minimal resolution.
template <class F>
BettiTable minimal_betti(const AlgebraPresentation<F>& B, const F& K) {
    BettiTable out;
    if (B.top_degree() < 0) return out;  // zero ring
    out.counts[{0, 0}] = 1;
    QuotientOps<F> ops(B, K);
    int n = B.ring->nvars();
    int top = B.top_degree();

    // Basis tuples for Lambda^i, i = 1, 2, 3.
    std::vector<std::vector<int>> lam1, lam2, lam3;
    for (int a = 0; a < n; ++a) lam1.push_back({a});
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) lam2.push_back({a, b});
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) lam3.push_back({a, b, c});

    auto dim_k = [&](const std::vector<std::vector<int>>& lam, int bdeg) {
        return static_cast<long long>(lam.size()) * B.qb.dim(bdeg);
    };

    // rank of d_i : Lambda^i (x) B_{j-i} -> Lambda^{i-1} (x) B_{j-i+1} in
    // internal degree j.
    auto rank_d = [&](int i, int j) -> long long {
        const auto& lam_src = i == 1 ? lam1 : (i == 2 ? lam2 : lam3);
        const auto& lam_dst = i == 2 ? lam1 : lam2;  // unused for i == 1
        int sdeg = j - i;
        int ddeg = j - i + 1;
        int sdim = B.qb.dim(sdeg);
        int ddim = B.qb.dim(ddeg);
        if (sdim == 0) return 0;
        if (ddim == 0) return 0;
        long long dst_blocks = i == 1 ? 1 : static_cast<long long>(lam_dst.size());
        int width = static_cast<int>(dst_blocks) * ddim;
        Rref<F> rr(K, width);
        const MonoIndex& src_basis = B.qb.basis(sdeg);
        auto dst_block_index = [&](const std::vector<int>& tuple) -> int {
            if (i == 1) return 0;
            // position of `tuple` in lam_dst (sorted lexicographic enumeration)
            int lo = 0, hi = static_cast<int>(lam_dst.size());
            while (lo < hi) {
                int mid = (lo + hi) / 2;
                if (lam_dst[mid] < tuple)
                    lo = mid + 1;
                else
                    hi = mid;
            }
            return lo;
        };
        for (const auto& tuple : lam_src) {
            for (int c = 0; c < sdim; ++c) {
                std::vector<typename F::Elem> row(width, K.zero());
                for (size_t t = 0; t < tuple.size(); ++t) {
                    std::vector<int> rest;
                    for (size_t u = 0; u < tuple.size(); ++u)
                        if (u != t) rest.push_back(tuple[u]);
                    Expo e = src_basis.monos[c];
                    e[tuple[t]] += 1;
                    const auto& img = ops.nf_mono(e);
                    int block = dst_block_index(rest);
                    bool negate = (t % 2) == 1;
                    for (int k = 0; k < ddim; ++k) {
                        typename F::Elem v = img[k];
                        if (K.is_zero(v)) continue;
                        if (negate) v = K.neg(v);
                        row[block * ddim + k] = K.add(row[block * ddim + k], v);
                    }
                }
                rr.insert(std::move(row));
            }
        }
        return rr.rank();
    };

    for (int j = 1; j <= top + 2; ++j) {
        long long b1 = dim_k(lam1, j - 1) - rank_d(1, j) - rank_d(2, j);
        if (b1 > 0) out.counts[{1, j}] = b1;
        long long b2 = dim_k(lam2, j - 2) - rank_d(2, j) - rank_d(3, j);
        if (b2 > 0) out.counts[{2, j}] = b2;
    }
    return out;
}

template <class F>
BettiTable minimal_betti(const GroebnerBasis<F>& gb, const F& K) {
    if (!gb.is_artinian) throw NotArtinian("Betti table needs an Artinian quotient");
    AlgebraPresentation<F> B;
    B.ring = gb.ring;
    B.gb = gb;
    B.min_gens = minimal_generators(gb, K);
    B.qb = build_quotient_basis(gb);
    B.hf = B.qb.hilbert;
    return minimal_betti(B, K);
}

}  // namespace apolar
