#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/mpoly.hpp"

namespace apolar {

// Reduced Groebner basis: monic elements, none reducible by the others,
// sorted by (lead degree, descending grevlex lead). Deterministic for a given
// generator list and ring.
template <class F>
struct GroebnerBasis {
    RingPtr ring;
    std::vector<MPoly<F>> elements;
    bool is_artinian = false;

    bool is_unit_ideal() const {
        return elements.size() == 1 && elements[0].degree() == 0;
    }
    int max_lead_degree() const {
        int d = 0;
        for (const auto& g : elements)
            d = std::max(d, expo_degree(g.lead().mono, ring->nvars()));
        return d;
    }
};

// Division by an arbitrary list of monic divisors (first-divisor strategy).
template <class F>
MPoly<F> normal_form_list(const MPoly<F>& p, const std::vector<MPoly<F>>& divisors, const F& K) {
    int n = p.nvars();
    MPoly<F> work = p;
    std::vector<typename MPoly<F>::Term> remainder;
    while (!work.is_zero()) {
        const auto& lt = work.lead();
        bool reduced = false;
        for (const auto& g : divisors) {
            if (!expo_divides(g.lead().mono, lt.mono, n)) continue;
            Expo q = expo_sub(lt.mono, g.lead().mono, n);
            work = work.minus(g.term_mul(q, lt.coef, K), K);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lt);
            work = work.minus(MPoly<F>::monomial(p.ring(), K, lt.mono, lt.coef), K);
        }
    }
    return MPoly<F>::from_terms(p.ring(), K, std::move(remainder));
}

template <class F>
MPoly<F> normal_form(const MPoly<F>& p, const GroebnerBasis<F>& gb, const F& K) {
    check_same_ring(p.ring(), gb.ring);
    return normal_form_list(p, gb.elements, K);
}

// Division with quotient tracking: p = sum_k quot[k] * gb[k] + remainder.
template <class F>
MPoly<F> normal_form_with_quotients(const MPoly<F>& p, const GroebnerBasis<F>& gb, const F& K,
                                    std::vector<MPoly<F>>& quot) {
    check_same_ring(p.ring(), gb.ring);
    int n = p.nvars();
    quot.assign(gb.elements.size(), MPoly<F>::zero(p.ring()));
    MPoly<F> work = p;
    std::vector<typename MPoly<F>::Term> remainder;
    while (!work.is_zero()) {
        const auto& lt = work.lead();
        bool reduced = false;
        for (size_t k = 0; k < gb.elements.size(); ++k) {
            const auto& g = gb.elements[k];
            if (!expo_divides(g.lead().mono, lt.mono, n)) continue;
            Expo q = expo_sub(lt.mono, g.lead().mono, n);
            quot[k] = quot[k].plus(MPoly<F>::monomial(p.ring(), K, q, lt.coef), K);
            work = work.minus(g.term_mul(q, lt.coef, K), K);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lt);
            work = work.minus(MPoly<F>::monomial(p.ring(), K, lt.mono, lt.coef), K);
        }
    }
    return MPoly<F>::from_terms(p.ring(), K, std::move(remainder));
}

namespace detail {

template <class F>
void sort_basis(std::vector<MPoly<F>>& els) {
    if (els.empty()) return;
    int n = els.front().nvars();
    std::sort(els.begin(), els.end(), [n](const MPoly<F>& a, const MPoly<F>& b) {
        int da = expo_degree(a.lead().mono, n), db = expo_degree(b.lead().mono, n);
        if (da != db) return da < db;
        return grevlex_cmp(a.lead().mono, b.lead().mono, n) > 0;
    });
}

template <class F>
bool artinian_from_leads(const std::vector<MPoly<F>>& els, const RingPtr& ring) {
    if (els.size() == 1 && els[0].degree() == 0) return true;  // unit ideal
    int n = ring->nvars();
    for (int i = 0; i < n; ++i) {
        bool has_power = false;
        for (const auto& g : els) {
            const Expo& lm = g.lead().mono;
            bool pure = lm[i] > 0;
            for (int j = 0; pure && j < n; ++j)
                if (j != i && lm[j] > 0) pure = false;
            if (pure) {
                has_power = true;
                break;
            }
        }
        if (!has_power) return false;
    }
    return true;
}

}  // namespace detail

// Buchberger's algorithm, normal selection strategy (minimal lcm degree
// first, ties by pair insertion index), with the coprime-lead criterion.
// Output is the reduced basis.
template <class F>
GroebnerBasis<F> buchberger(std::vector<MPoly<F>> gens, const F& K) {
    RingPtr ring;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!ring)
            ring = g.ring();
        else
            check_same_ring(ring, g.ring());
    }
    GroebnerBasis<F> out;
    if (!ring) {
        if (!gens.empty()) out.ring = gens.front().ring();
        return out;  // zero ideal
    }
    out.ring = ring;
    int n = ring->nvars();

    std::vector<MPoly<F>> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        MPoly<F> m = g.monic(K);
        bool dup = false;
        for (const auto& b : basis) dup = dup || b == m;
        if (!dup) basis.push_back(std::move(m));
    }
    detail::sort_basis(basis);

    struct Pair {
        int deg;
        long long seq;
        size_t i, j;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            return seq < o.seq;
        }
    };
    std::set<Pair> pairs;
    long long seq = 0;
    auto add_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Expo l = expo_lcm(basis[i].lead().mono, basis[j].lead().mono, n);
            pairs.insert({expo_degree(l, n), seq++, i, j});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) add_pairs(j);

    while (!pairs.empty()) {
        Pair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        const auto& gi = basis[pr.i];
        const auto& gj = basis[pr.j];
        if (expo_coprime(gi.lead().mono, gj.lead().mono, n)) continue;
        Expo l = expo_lcm(gi.lead().mono, gj.lead().mono, n);
        MPoly<F> s = gi.term_mul(expo_sub(l, gi.lead().mono, n), K.one(), K)
                         .minus(gj.term_mul(expo_sub(l, gj.lead().mono, n), K.one(), K), K);
        MPoly<F> r = normal_form_list(s, basis, K);
        if (!r.is_zero()) {
            basis.push_back(r.monic(K));
            add_pairs(basis.size() - 1);
        }
    }

    // Minimalize: drop any element whose lead is strictly divisible by
    // another lead, or tied with an earlier element's lead.
    std::vector<MPoly<F>> kept;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < basis.size() && !drop; ++j) {
            if (i == j) continue;
            const Expo& li = basis[i].lead().mono;
            const Expo& lj = basis[j].lead().mono;
            if (!expo_divides(lj, li, n)) continue;
            drop = !(lj == li) || j < i;
        }
        if (!drop) kept.push_back(basis[i]);
    }

    // Tail-reduce each element against the others.
    std::vector<MPoly<F>> reduced;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<MPoly<F>> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        MPoly<F> r = normal_form_list(kept[i], others, K);
        if (!r.is_zero()) reduced.push_back(r.monic(K));
    }
    detail::sort_basis(reduced);
    out.elements = std::move(reduced);
    out.is_artinian = detail::artinian_from_leads(out.elements, ring);
    return out;
}

// Standard monomials per degree (monomials outside the lead-term ideal).
// Finite exactly when the quotient is Artinian.
template <class F>
struct QuotientBasis {
    std::vector<MonoIndex> by_degree;  // index d -> basis of B_d
    std::vector<int> hilbert;          // hilbert[d] = dim B_d
    int top_degree = -1;               // largest d with B_d != 0 (-1: zero ring)

    int dim(int d) const {
        return (d >= 0 && d < static_cast<int>(hilbert.size())) ? hilbert[d] : 0;
    }
    const MonoIndex& basis(int d) const {
        static const MonoIndex empty;
        return (d >= 0 && d < static_cast<int>(by_degree.size())) ? by_degree[d] : empty;
    }
    long long length() const {
        long long s = 0;
        for (int h : hilbert) s += h;
        return s;
    }
};

template <class F>
QuotientBasis<F> build_quotient_basis(const GroebnerBasis<F>& gb) {
    if (!gb.is_artinian)
        throw NotArtinian("quotient is not Artinian: some variable has no pure power lead term");
    QuotientBasis<F> qb;
    int n = gb.ring->nvars();
    for (int d = 0;; ++d) {
        std::vector<Expo> keep;
        for (const Expo& m : monomials_of_degree(n, d)) {
            bool divisible = false;
            for (const auto& g : gb.elements) {
                if (expo_divides(g.lead().mono, m, n)) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) keep.push_back(m);
        }
        if (keep.empty()) break;
        qb.by_degree.emplace_back(std::move(keep));
        qb.hilbert.push_back(qb.by_degree.back().size());
        qb.top_degree = d;
    }
    return qb;
}

// Hilbert function of an Artinian quotient, as the dense vector
// (h_0, h_1, ..., h_top). The unit ideal yields the empty vector.
template <class F>
std::vector<int> hilbert_function(const GroebnerBasis<F>& gb) {
    if (gb.is_unit_ideal()) return {};
    return build_quotient_basis(gb).hilbert;
}

// dim I_j read off the lead ideal (monomial count), valid for any j.
template <class F>
int ideal_dim_in_degree(const GroebnerBasis<F>& gb, int j) {
    int n = gb.ring->nvars();
    int count = 0;
    for (const Expo& m : monomials_of_degree(n, j)) {
        for (const auto& g : gb.elements) {
            if (expo_divides(g.lead().mono, m, n)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

// Degreewise Nakayama: canonical minimal homogeneous generators of the ideal,
// extracted as reduced RREF residuals. Requires homogeneous basis elements.
template <class F>
std::vector<MPoly<F>> minimal_generators(const GroebnerBasis<F>& gb, const F& K) {
    std::vector<MPoly<F>> gens;
    if (gb.elements.empty()) return gens;
    int n = gb.ring->nvars();
    int maxdeg = gb.max_lead_degree();
    int mindeg = maxdeg;
    for (const auto& g : gb.elements) mindeg = std::min(mindeg, g.degree());

    std::vector<std::vector<typename F::Elem>> prev_rows;  // spans I_{j-1}
    MonoIndex prev_cols;
    for (int j = mindeg; j <= maxdeg; ++j) {
        MonoIndex cols(monomials_of_degree(n, j));
        // I_j = S_1 * I_{j-1} + span(basis elements of degree j); elements
        // surviving reduction against the running span are the new minimal
        // generators (degreewise Nakayama).
        Rref<F> span(K, cols.size());
        for (const auto& row : prev_rows) {
            for (int v = 0; v < n; ++v) {
                std::vector<typename F::Elem> prod(cols.size(), K.zero());
                for (int c = 0; c < prev_cols.size(); ++c) {
                    if (K.is_zero(row[c])) continue;
                    Expo e = prev_cols.monos[c];
                    e[v] += 1;
                    prod[cols.index_of(e)] = row[c];
                }
                span.insert(std::move(prod));
            }
        }
        for (const auto& g : gb.elements) {
            if (g.degree() != j) continue;
            std::vector<typename F::Elem> row(cols.size(), K.zero());
            for (const auto& t : g.terms()) row[cols.index_of(t.mono)] = t.coef;
            auto red = span.reduce(std::move(row));
            bool zero = true;
            for (int c = 0; c < cols.size(); ++c) zero = zero && K.is_zero(red[c]);
            if (zero) continue;
            std::vector<typename MPoly<F>::Term> ts;
            for (int c = 0; c < cols.size(); ++c)
                if (!K.is_zero(red[c])) ts.push_back({cols.monos[c], red[c]});
            gens.push_back(MPoly<F>::from_terms(gb.ring, K, std::move(ts)).monic(K));
            span.insert(std::move(red));
        }
        prev_rows = span.ref_rows();
        prev_cols = cols;
    }
    return gens;
}

// Ideal equality by mutual normal-form membership of basis elements.
template <class F>
bool ideal_equal(const GroebnerBasis<F>& a, const GroebnerBasis<F>& b, const F& K) {
    for (const auto& g : a.elements)
        if (!normal_form(g, b, K).is_zero()) return false;
    for (const auto& g : b.elements)
        if (!normal_form(g, a, K).is_zero()) return false;
    return true;
}

}  // namespace apolar
