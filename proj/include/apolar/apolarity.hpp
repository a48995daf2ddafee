#pragma once

#include <optional>

#include "apolar/groebner.hpp"

namespace apolar {

// Artinian graded quotient B = S/I with everything the downstream invariants
// need: minimal generators, reduced GB, standard-monomial basis, Hilbert
// function, and (when built by apolarity) the dual form F plus the
// independently computed catalecticant Hilbert function.
template <class F>
struct AlgebraPresentation {
    RingPtr ring;
    std::vector<MPoly<F>> min_gens;
    GroebnerBasis<F> gb;
    QuotientBasis<F> qb;
    std::vector<int> hf;
    std::optional<MPoly<F>> dual_form;
    std::vector<int> catalecticant_hf;

    long long length() const { return qb.length(); }
    int top_degree() const { return qb.top_degree; }
    int socle_degree() const { return qb.top_degree; }
    int max_gen_degree() const {
        int d = 0;
        for (const auto& g : min_gens) d = std::max(d, g.degree());
        return d;
    }
};

// Minimal generators of Ann(F), extracted degree by degree for i = 1..d+1:
// Ann(F)_i is the kernel of the catalecticant S_i -> P_{d-i}; the new
// generators are a basis of that kernel modulo S_1 * Ann(F)_{i-1}. The ideal
// contains S_{d+1} (checked), so the scan is complete at d+1.
// When `cat_hf` is non-null it receives the catalecticant-rank Hilbert
// function (h_i = rank Cat_i), an independent path to the Hilbert function.
template <class F>
std::vector<MPoly<F>> annihilator(const MPoly<F>& f, const F& K,
                                  std::vector<int>* cat_hf = nullptr) {
    if (f.is_zero()) throw ZeroPolynomial("annihilator of the zero polynomial");
    if (!f.homogeneous()) throw Inhomogeneous("dual form must be homogeneous");
    int d = f.degree();
    if (d < 1) throw ZeroPolynomial("dual form must have degree >= 1");
    int n = f.nvars();
    RingPtr ring = f.ring();

    std::vector<MPoly<F>> gens;
    if (cat_hf) cat_hf->assign(1, 1);  // h_0 = 1
    std::vector<std::vector<typename F::Elem>> prev_kernel;  // basis of Ann_{i-1}
    MonoIndex prev_cols;
    for (int i = 1; i <= d + 1; ++i) {
        MonoIndex cols(monomials_of_degree(n, i));
        // Kernel of the catalecticant in degree i (all of S_{d+1} for i = d+1).
        std::vector<std::vector<typename F::Elem>> kernel;
        if (i <= d) {
            // One constraint row per monomial X^t of P_{d-i}: the functional
            // s |-> coeff of X^t in s o F. Kernel = Ann(F)_i; rank = rank of
            // the catalecticant Cat_i.
            MonoIndex target(monomials_of_degree(n, d - i));
            Rref<F> rr(K, cols.size());
            for (const Expo& t : target.monos) {
                std::vector<typename F::Elem> row(cols.size(), K.zero());
                for (const auto& tf : f.terms()) {
                    if (!expo_divides(t, tf.mono, n)) continue;  // m o F hits X^t iff tf.mono = m + t
                    int idx = cols.index_of(expo_sub(tf.mono, t, n));
                    if (idx >= 0) row[idx] = tf.coef;
                }
                rr.insert(std::move(row));
            }
            if (cat_hf) cat_hf->push_back(rr.rank());
            kernel = rr.kernel_basis();
        } else {
            // Ann_{d+1} = S_{d+1}
            for (int c = 0; c < cols.size(); ++c) {
                std::vector<typename F::Elem> v(cols.size(), K.zero());
                v[c] = K.one();
                kernel.push_back(std::move(v));
            }
        }

        // Span of S_1 * Ann_{i-1}; kernel vectors surviving reduction are new
        // minimal generators.
        Rref<F> span(K, cols.size());
        for (const auto& row : prev_kernel) {
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
        std::vector<std::vector<typename F::Elem>> full;  // basis of Ann_i
        for (auto& kv : kernel) {
            auto red = span.reduce(kv);
            bool zero = true;
            for (int c = 0; c < cols.size(); ++c) zero = zero && K.is_zero(red[c]);
            if (zero) continue;
            std::vector<typename MPoly<F>::Term> ts;
            for (int c = 0; c < cols.size(); ++c)
                if (!K.is_zero(red[c])) ts.push_back({cols.monos[c], red[c]});
            gens.push_back(MPoly<F>::from_terms(ring, K, std::move(ts)).monic(K));
            span.insert(std::move(red));
        }
        full = span.ref_rows();
        if (i == d + 1 && span.rank() != cols.size())
            throw Error("AnnihilatorIncomplete",
                        "Ann(F) does not contain S_{d+1}; this should be impossible");
        prev_kernel = std::move(full);
        prev_cols = cols;
    }
    if (cat_hf) {
        while (!cat_hf->empty() && cat_hf->back() == 0) cat_hf->pop_back();
    }
    return gens;
}

// Apolar(F) = S/Ann(F) with the full presentation assembled. Checks the
// Gorenstein symmetry h_i = h_{d-i} and the agreement of the two Hilbert
// function paths (standard monomials vs catalecticant ranks).
template <class F>
AlgebraPresentation<F> apolar_algebra(const MPoly<F>& f, const F& K) {
    AlgebraPresentation<F> b;
    b.ring = f.ring();
    std::vector<int> cat_hf;
    b.min_gens = annihilator(f, K, &cat_hf);
    b.gb = buchberger(b.min_gens, K);
    b.qb = build_quotient_basis(b.gb);
    b.hf = b.qb.hilbert;
    b.dual_form = f;
    b.catalecticant_hf = cat_hf;
    if (b.hf != cat_hf)
        throw Error("HilbertMismatch",
                    "standard-monomial and catalecticant Hilbert functions disagree");
    int d = f.degree();
    for (int i = 0; i <= d; ++i) {
        int hi = i < static_cast<int>(b.hf.size()) ? b.hf[i] : 0;
        int hd = d - i < static_cast<int>(b.hf.size()) ? b.hf[d - i] : 0;
        if (hi != hd)
            throw Error("GorensteinSymmetry", "Hilbert function is not symmetric");
    }
    return b;
}

// Presentation of S/(gens) for an arbitrary homogeneous generator list.
template <class F>
AlgebraPresentation<F> presentation_from_generators(const std::vector<MPoly<F>>& gens,
                                                    const F& K) {
    AlgebraPresentation<F> b;
    for (const auto& g : gens)
        if (!g.is_zero()) b.ring = g.ring();
    b.gb = buchberger(gens, K);
    if (!b.ring) b.ring = b.gb.ring;
    b.min_gens = minimal_generators(b.gb, K);
    b.qb = build_quotient_basis(b.gb);
    b.hf = b.qb.hilbert;
    return b;
}

// Cached multiplication in the quotient: normal forms of monomials expanded
// over the standard-monomial basis. Shared by socle, Betti and cotangent
// computations.
template <class F>
class QuotientOps {
public:
    using Elem = typename F::Elem;
    using BVec = std::vector<Elem>;

    QuotientOps(const AlgebraPresentation<F>& B, const F& K) : B_(B), K_(K) {}

    const AlgebraPresentation<F>& algebra() const { return B_; }

    // Normal form of the monomial x^e as a coefficient vector over the
    // standard monomials of its degree.
    const BVec& nf_mono(const Expo& e) {
        auto it = memo_.find(e);
        if (it != memo_.end()) return it->second;
        int d = expo_degree(e, B_.ring->nvars());
        const MonoIndex& basis = B_.qb.basis(d);
        BVec vec(basis.size(), K_.zero());
        if (basis.size() > 0) {
            auto nf = normal_form(MPoly<F>::monomial(B_.ring, K_, e, K_.one()), B_.gb, K_);
            for (const auto& t : nf.terms()) vec[basis.index_of(t.mono)] = t.coef;
        }
        return memo_.emplace(e, std::move(vec)).first->second;
    }

    // v in B_d times the homogeneous polynomial a: result in B_{out_degree}.
    // The target degree is explicit so that a zero multiplier still yields a
    // correctly sized zero vector.
    BVec mult(const BVec& v, int d, const MPoly<F>& a, int out_degree) {
        int n = B_.ring->nvars();
        BVec out(B_.qb.dim(out_degree), K_.zero());
        if (out.empty() || a.is_zero()) return out;
        const MonoIndex& src = B_.qb.basis(d);
        for (int c = 0; c < src.size(); ++c) {
            if (K_.is_zero(v[c])) continue;
            for (const auto& t : a.terms()) {
                const BVec& prod = nf_mono(expo_add(src.monos[c], t.mono, n));
                Elem f = K_.mul(v[c], t.coef);
                for (size_t k = 0; k < prod.size(); ++k)
                    out[k] = K_.add(out[k], K_.mul(f, prod[k]));
            }
        }
        return out;
    }

    // Homogeneous polynomial (degree d) to its residue vector in B_d.
    BVec to_vec(const MPoly<F>& p, int d) {
        const MonoIndex& basis = B_.qb.basis(d);
        BVec vec(basis.size(), K_.zero());
        auto nf = normal_form(p, B_.gb, K_);
        for (const auto& t : nf.terms()) vec[basis.index_of(t.mono)] = t.coef;
        return vec;
    }

    MPoly<F> to_poly(const BVec& v, int d) const {
        const MonoIndex& basis = B_.qb.basis(d);
        std::vector<typename MPoly<F>::Term> ts;
        for (int c = 0; c < basis.size(); ++c)
            if (!K_.is_zero(v[c])) ts.push_back({basis.monos[c], v[c]});
        return MPoly<F>::from_terms(B_.ring, K_, std::move(ts));
    }

private:
    const AlgebraPresentation<F>& B_;
    const F K_;
    std::unordered_map<Expo, BVec, ExpoHash> memo_;
};

// Socle = annihilator of the maximal ideal, computed degree by degree as the
// kernel of the stacked multiplication maps B_j -> (+)_i B_{j+1}.
template <class F>
struct SocleData {
    std::map<int, int> dims;                       // degree -> dimension
    std::vector<std::pair<int, MPoly<F>>> basis;   // (degree, element)
    bool gorenstein = false;
    std::optional<MPoly<F>> normalized_dual;       // f with f o F = 1 (Gorenstein + dual form)

    int total_dim() const {
        int s = 0;
        for (auto& [d, k] : dims) s += k;
        return s;
    }
    int top_degree() const { return dims.empty() ? -1 : dims.rbegin()->first; }
};

template <class F>
SocleData<F> socle(const AlgebraPresentation<F>& B, const F& K) {
    SocleData<F> out;
    QuotientOps<F> ops(B, K);
    int n = B.ring->nvars();
    for (int j = 0; j <= B.top_degree(); ++j) {
        int dim_j = B.qb.dim(j);
        int dim_next = B.qb.dim(j + 1);
        if (dim_j == 0) continue;
        if (dim_next == 0) {
            // everything in top degree is socle
            for (int c = 0; c < dim_j; ++c) {
                typename QuotientOps<F>::BVec v(dim_j, K.zero());
                v[c] = K.one();
                out.basis.emplace_back(j, ops.to_poly(v, j));
            }
            out.dims[j] = dim_j;
            continue;
        }
        // kernel of B_j -> B_{j+1}^n: build constraint rows (transpose view):
        // unknowns = coefficients over B_j basis; one constraint row per
        // (variable, target basis element).
        Rref<F> rr(K, dim_j);
        const MonoIndex& src = B.qb.basis(j);
        for (int v = 0; v < n; ++v) {
            // rows of the multiplication matrix, transposed into constraints
            std::vector<typename QuotientOps<F>::BVec> cols_img(dim_j);
            for (int c = 0; c < dim_j; ++c) {
                Expo e = src.monos[c];
                e[v] += 1;
                cols_img[c] = ops.nf_mono(e);
            }
            for (int t = 0; t < dim_next; ++t) {
                std::vector<typename F::Elem> row(dim_j, K.zero());
                for (int c = 0; c < dim_j; ++c) row[c] = cols_img[c][t];
                rr.insert(std::move(row));
            }
        }
        auto kern = rr.kernel_basis();
        if (!kern.empty()) {
            out.dims[j] = static_cast<int>(kern.size());
            for (auto& v : kern) out.basis.emplace_back(j, ops.to_poly(v, j));
        }
    }
    out.gorenstein = out.total_dim() == 1;
    if (out.gorenstein && B.dual_form) {
        const MPoly<F>& f = out.basis.front().second;
        MPoly<F> pairing = contract(f, *B.dual_form, K);
        // pairing is a nonzero constant; normalize so that f o F = 1
        typename F::Elem c = pairing.is_zero() ? K.zero() : pairing.lead().coef;
        if (K.is_zero(c))
            throw Error("SocleNormalization", "socle generator pairs to zero with the dual form");
        out.normalized_dual = f.scaled(K.inv(c), K);
    }
    return out;
}

// d-level: the socle equals the entire degree-d graded piece.
template <class F>
bool is_level(const AlgebraPresentation<F>& B, int d, const F& K) {
    SocleData<F> s = socle(B, K);
    return s.dims.size() == 1 && s.dims.count(d) == 1 && s.dims.at(d) == B.qb.dim(d);
}

// B/(socle generator) for graded Gorenstein B; drops the length by one.
template <class F>
AlgebraPresentation<F> socle_quotient(const AlgebraPresentation<F>& B, const F& K) {
    SocleData<F> s = socle(B, K);
    if (!s.gorenstein)
        throw NotGorenstein("socle has dimension " + std::to_string(s.total_dim()));
    std::vector<MPoly<F>> gens = B.min_gens;
    gens.push_back(s.basis.front().second);
    AlgebraPresentation<F> q = presentation_from_generators(gens, K);
    if (q.length() != B.length() - 1)
        throw Error("SocleQuotient", "length did not drop by one");
    return q;
}

}  // namespace apolar
