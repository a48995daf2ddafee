#pragma once

#include "apolar/apolarity.hpp"

namespace apolar {

// One syzygy among the elements of a fixed polynomial tuple:
// sum_k coeffs[k] * basis[k] = 0.
template <class F>
struct SyzRow {
    int internal_degree = 0;
    bool koszul = false;  // a Koszul row g_j e_i - g_i e_j (trivial syzygy)
    std::vector<MPoly<F>> coeffs;
};

// Schreyer-style generating set for the syzygies of a reduced GB: one row per
// critical pair. Pairs with coprime leads contribute their Koszul row; the
// others reduce their S-polynomial to zero and record the standard
// representation. Rows with internal degree above `degree_cap` are omitted
// when cap >= 0; for Artinian quotients the syzygy module is generated in
// internal degrees <= top + 2, so capping there loses nothing.
template <class F>
std::vector<SyzRow<F>> schreyer_rows(const GroebnerBasis<F>& gb, const F& K,
                                     int degree_cap = -1) {
    std::vector<SyzRow<F>> rows;
    const auto& els = gb.elements;
    size_t N = els.size();
    if (N < 2) return rows;
    int n = gb.ring->nvars();
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = i + 1; j < N; ++j) {
            const Expo& li = els[i].lead().mono;
            const Expo& lj = els[j].lead().mono;
            if (expo_coprime(li, lj, n)) {
                int deg = els[i].degree() + els[j].degree();
                if (degree_cap >= 0 && deg > degree_cap) continue;
                SyzRow<F> row;
                row.internal_degree = deg;
                row.koszul = true;
                row.coeffs.assign(N, MPoly<F>::zero(gb.ring));
                row.coeffs[i] = els[j];
                row.coeffs[j] = els[i].scaled(K.neg(K.one()), K);
                rows.push_back(std::move(row));
                continue;
            }
            Expo l = expo_lcm(li, lj, n);
            int deg = expo_degree(l, n);
            if (degree_cap >= 0 && deg > degree_cap) continue;
            MPoly<F> s = els[i].term_mul(expo_sub(l, li, n), K.one(), K)
                             .minus(els[j].term_mul(expo_sub(l, lj, n), K.one(), K), K);
            std::vector<MPoly<F>> quot;
            MPoly<F> rem = normal_form_with_quotients(s, gb, K, quot);
            if (!rem.is_zero())
                throw Error("NotAGroebnerBasis", "S-polynomial did not reduce to zero");
            SyzRow<F> row;
            row.internal_degree = deg;
            row.coeffs = std::move(quot);
            for (auto& q : row.coeffs) q = q.scaled(K.neg(K.one()), K);
            row.coeffs[i] =
                row.coeffs[i].plus(MPoly<F>::monomial(gb.ring, K, expo_sub(l, li, n), K.one()), K);
            row.coeffs[j] = row.coeffs[j].minus(
                MPoly<F>::monomial(gb.ring, K, expo_sub(l, lj, n), K.one()), K);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// First syzygies of a given generating tuple: Schreyer rows on the GB
// rewritten to the generators through the two transition matrices, plus
// the rows of (Id - C A). Intended for desk-size
// inputs; the cotangent pipeline works in GB coordinates instead.
template <class F>
struct SyzygyModule {
    std::vector<int> gen_degrees;
    std::vector<std::vector<MPoly<F>>> rows;
    bool minimalized = false;
};

template <class F>
SyzygyModule<F> first_syzygies(const std::vector<MPoly<F>>& gens, const GroebnerBasis<F>& gb,
                               const F& K) {
    SyzygyModule<F> out;
    size_t r = gens.size();
    size_t N = gb.elements.size();
    if (r == 0) return out;
    RingPtr ring = gb.ring;
    int n = ring->nvars();
    for (const auto& g : gens) out.gen_degrees.push_back(g.degree());

    // C: gens in terms of the GB (division; remainder must vanish).
    std::vector<std::vector<MPoly<F>>> C(r);
    for (size_t j = 0; j < r; ++j) {
        MPoly<F> rem = normal_form_with_quotients(gens[j], gb, K, C[j]);
        if (!rem.is_zero()) throw NotGenerating("generator not in the ideal of the GB");
    }

    // A: each GB element in terms of the generators, solved degreewise with
    // combination tracking.
    std::vector<std::vector<MPoly<F>>> A(N, std::vector<MPoly<F>>(r, MPoly<F>::zero(ring)));
    {
        std::map<int, std::vector<size_t>> by_degree;
        for (size_t k = 0; k < N; ++k) by_degree[gb.elements[k].degree()].push_back(k);
        for (const auto& [deg, which] : by_degree) {
            MonoIndex cols(monomials_of_degree(n, deg));
            struct Tag {
                size_t gen;
                Expo mult;
            };
            std::vector<Tag> tags;
            for (size_t j = 0; j < r; ++j) {
                int md = deg - gens[j].degree();
                if (md < 0) continue;
                for (const Expo& m : monomials_of_degree(n, md)) tags.push_back({j, m});
            }
            Rref<F> rr(K, cols.size(), static_cast<int>(tags.size()));
            for (size_t t = 0; t < tags.size(); ++t) {
                std::vector<typename F::Elem> row(cols.size() + tags.size(), K.zero());
                MPoly<F> prod = gens[tags[t].gen].term_mul(tags[t].mult, K.one(), K);
                for (const auto& tm : prod.terms()) row[cols.index_of(tm.mono)] = tm.coef;
                row[cols.size() + t] = K.one();
                rr.insert(std::move(row));
            }
            for (size_t k : which) {
                std::vector<typename F::Elem> row(cols.size() + tags.size(), K.zero());
                for (const auto& tm : gb.elements[k].terms()) row[cols.index_of(tm.mono)] = tm.coef;
                auto red = rr.reduce(std::move(row));
                for (int c = 0; c < cols.size(); ++c)
                    if (!K.is_zero(red[c]))
                        throw NotGenerating("GB element is not a combination of the generators");
                for (size_t t = 0; t < tags.size(); ++t) {
                    typename F::Elem c = red[cols.size() + t];
                    if (K.is_zero(c)) continue;
                    // h - sum f_t (m_t g_{j_t}) = 0, aug carries -f_t
                    A[k][tags[t].gen] = A[k][tags[t].gen].plus(
                        MPoly<F>::monomial(ring, K, tags[t].mult, K.neg(c)), K);
                }
            }
        }
    }

    // Rows of (Id - C A).
    for (size_t j = 0; j < r; ++j) {
        std::vector<MPoly<F>> row(r, MPoly<F>::zero(ring));
        row[j] = MPoly<F>::constant(ring, K, K.one());
        for (size_t k = 0; k < N; ++k)
            for (size_t jj = 0; jj < r; ++jj)
                row[jj] = row[jj].minus(C[j][k].times(A[k][jj], K), K);
        bool nonzero = false;
        for (const auto& p : row) nonzero = nonzero || !p.is_zero();
        if (nonzero) out.rows.push_back(std::move(row));
    }
    // Schreyer rows rewritten through A.
    for (const auto& srow : schreyer_rows(gb, K)) {
        std::vector<MPoly<F>> row(r, MPoly<F>::zero(ring));
        for (size_t k = 0; k < N; ++k) {
            if (srow.coeffs[k].is_zero()) continue;
            for (size_t j = 0; j < r; ++j)
                row[j] = row[j].plus(srow.coeffs[k].times(A[k][j], K), K);
        }
        bool nonzero = false;
        for (const auto& p : row) nonzero = nonzero || !p.is_zero();
        if (nonzero) out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace apolar
