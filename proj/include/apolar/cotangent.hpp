#pragma once

#include "apolar/betti.hpp"
#include "apolar/rng.hpp"
#include "apolar/syzygy.hpp"

namespace apolar {

// Graded dimensions over a declared scan window; entries outside the window
// are structurally zero (the window is chosen from generator/syzygy degrees).
struct GradedDims {
    std::map<int, int> dims;  // nonzero entries only
    int lo = 0;
    int hi = -1;

    int at(int e) const {
        auto it = dims.find(e);
        return it == dims.end() ? 0 : it->second;
    }
    int total() const {
        int s = 0;
        for (auto& [e, d] : dims) s += d;
        return s;
    }
    void set(int e, int d) {
        if (d != 0) dims[e] = d;
    }
    bool zero_below(int e) const {  // all entries < e vanish
        for (auto& [deg, d] : dims)
            if (deg < e && d != 0) return false;
        return true;
    }
    bool zero_above(int e) const {
        for (auto& [deg, d] : dims)
            if (deg > e && d != 0) return false;
        return true;
    }
};

struct BidegKey {
    int x = 0, y = 0;
    bool operator<(const BidegKey& o) const { return x != o.x ? x < o.x : y < o.y; }
    bool operator==(const BidegKey& o) const { return x == o.x && y == o.y; }
    int total() const { return x + y; }
    bool pure_x() const { return y == 0 && x != 0; }
    bool pure_y() const { return x == 0 && y != 0; }
    bool mixed() const { return x != 0 && y != 0; }
};

struct BigradedDims {
    std::map<BidegKey, int> dims;
    int lo_total = 0, hi_total = -1;

    int at(int ex, int ey) const {
        auto it = dims.find({ex, ey});
        return it == dims.end() ? 0 : it->second;
    }
    int total_at(int e) const {
        int s = 0;
        for (auto& [k, d] : dims)
            if (k.total() == e) s += d;
        return s;
    }
    int mixed_in_negative_total() const {
        int s = 0;
        for (auto& [k, d] : dims)
            if (k.mixed() && k.total() < 0) s += d;
        return s;
    }
    int pure_x_at_total(int e) const {
        int s = 0;
        for (auto& [k, d] : dims)
            if (k.pure_x() && k.total() == e) s += d;
        return s;
    }
    int pure_y_at_total(int e) const {
        int s = 0;
        for (auto& [k, d] : dims)
            if (k.pure_y() && k.total() == e) s += d;
        return s;
    }
};

// Flags are recomputable from the dims they summarize.
struct TangentReport {
    GradedDims t0;
    GradedDims t1;
    bool tnt = false;                     // (T^1)_{<0} = 0
    bool concentrated_minus_one = false;  // (T^1)_e = 0 for e <= -2
    bool positive_vanishes = false;       // (T^1)_{>0} = 0
    long long algebra_length = 0;
    int socle_degree = 0;
    int der_bb_1 = 0;  // Der(B,B)_1, reported next to the two literature candidates
};

template <class F>
void characteristic_guard(const F& K, long long length) {
    if constexpr (std::is_same_v<F, FpOps>) {
        if (static_cast<long long>(K.p) <= length)
            throw CharTooSmall("field characteristic " + std::to_string(K.p) +
                               " does not exceed the algebra length " + std::to_string(length) +
                               "; derivation and automorphism conclusions need char 0 or > length");
    } else {
        (void)K;
        (void)length;
    }
}

// Shared machinery for the graded and bigraded tangent computations: the
// degree-capped Schreyer rows of the GB, residue-compressed per internal
// degree, plus slice bookkeeping for the bigraded case.
template <class F>
class CotangentContext {
public:
    using Elem = typename F::Elem;
    using BVec = std::vector<Elem>;

    CotangentContext(const AlgebraPresentation<F>& B, const F& K)
        : B_(B), K_(K), ops_(B, K) {
        characteristic_guard(K_, B_.length());
        top_ = B_.top_degree();
        int n = B_.ring->nvars();
        for (const auto& h : B_.gb.elements) gb_degrees_.push_back(h.degree());
        // Syzygies of the GB generate in internal degrees <= top + 2
        // (Artinian regularity equals the top degree).
        int cap = top_ + 2;
        auto rows = schreyer_rows(B_.gb, K_, cap);
        // Residue-compress: only the images of the coefficients in B matter
        // for Hom constraints, and Koszul rows have zero image.
        std::map<int, Rref<F>> seen;
        for (const auto& row : rows) {
            if (row.koszul) continue;
            int s = row.internal_degree;
            std::vector<MPoly<F>> residues(row.coeffs.size(), MPoly<F>::zero(B_.ring));
            int width = 0;
            std::vector<int> offs(row.coeffs.size() + 1, 0);
            for (size_t k = 0; k < row.coeffs.size(); ++k) {
                offs[k] = width;
                width += B_.qb.dim(s - gb_degrees_[k]);
            }
            offs[row.coeffs.size()] = width;
            if (width == 0) continue;
            BVec vec(width, K_.zero());
            bool nonzero = false;
            for (size_t k = 0; k < row.coeffs.size(); ++k) {
                if (row.coeffs[k].is_zero()) continue;
                residues[k] = normal_form(row.coeffs[k], B_.gb, K_);
                if (residues[k].is_zero()) continue;
                nonzero = true;
                const MonoIndex& basis = B_.qb.basis(s - gb_degrees_[k]);
                for (const auto& t : residues[k].terms())
                    vec[offs[k] + basis.index_of(t.mono)] = t.coef;
            }
            if (!nonzero) continue;
            auto it = seen.find(s);
            if (it == seen.end()) it = seen.emplace(s, Rref<F>(K_, width)).first;
            if (it->second.insert(vec) < 0) continue;  // dependent residue
            compressed_[s].push_back(std::move(residues));
        }
        // Bigraded slices of the standard-monomial bases.
        if (B_.ring->bigraded()) {
            slices_.resize(top_ + 1);
            for (int d = 0; d <= top_; ++d) {
                const MonoIndex& basis = B_.qb.basis(d);
                for (int c = 0; c < basis.size(); ++c) {
                    Bidegree bd = B_.ring->bidegree(basis.monos[c]);
                    slices_[d][{bd.x, bd.y}].push_back(c);
                }
            }
        }
    }

    const AlgebraPresentation<F>& algebra() const { return B_; }
    QuotientOps<F>& ops() { return ops_; }
    int top() const { return top_; }
    const std::vector<int>& gb_degrees() const { return gb_degrees_; }

    // ---- graded Hom(I/I^2, B)_e ------------------------------------------

    // The unknowns are phi(h_k) in B_{deg h_k + e}, one block per GB element;
    // a compressed residue row of internal degree s contributes dim B_{s+e}
    // linear constraints. Returns the solution-space dimension; if `basis`
    // is non-null it receives a basis of the solution space, and `jac_rank`
    // (if non-null) receives the rank of the Jacobian image inside it.
    int hom_dim(int e, std::vector<BVec>* basis = nullptr) {
        auto blocks = unknown_blocks(e);
        if (blocks.width == 0) {
            if (basis) basis->clear();
            return 0;
        }
        Rref<F> rr(K_, blocks.width);
        add_hom_constraints(rr, e, blocks, nullptr);
        if (basis) *basis = rr.kernel_basis();
        return blocks.width - rr.rank();
    }

    // Same solution space restricted to bigraded maps of bidegree (ex, ey).
    int hom_dim_bigraded(int ex, int ey) {
        auto blocks = unknown_blocks_bigraded(ex, ey);
        if (blocks.width == 0) return 0;
        Rref<F> rr(K_, blocks.width);
        add_hom_constraints(rr, ex + ey, blocks, &blocks);
        return blocks.width - rr.rank();
    }

    // Hom dimension with the syzygy set augmented by random module multiples
    // of existing rows (genuine, non-minimal syzygies). Any generating set
    // yields the same solution space, so the result must match hom_dim(e).
    int hom_dim_augmented(int e, uint64_t seed, int extra_rows) {
        auto blocks = unknown_blocks(e);
        if (blocks.width == 0) return 0;
        // collect flat views of the compressed rows
        std::vector<std::pair<int, const std::vector<MPoly<F>>*>> flat;
        for (const auto& [s, rows] : compressed_)
            for (const auto& r : rows) flat.emplace_back(s, &r);
        std::map<int, std::vector<std::vector<MPoly<F>>>> extra;
        uint64_t state = seed;
        int n = B_.ring->nvars();
        for (int t = 0; t < extra_rows && !flat.empty(); ++t) {
            auto [s, row] = flat[splitmix64_next(state) % flat.size()];
            int v = static_cast<int>(splitmix64_next(state) % n);
            Expo xv = expo_zero();
            xv[v] = 1;
            std::vector<MPoly<F>> mult;
            for (const auto& a : *row)
                mult.push_back(normal_form(a.term_mul(xv, K_.one(), K_), B_.gb, K_));
            extra[s + 1].push_back(std::move(mult));
        }
        Rref<F> rr(K_, blocks.width);
        add_hom_constraints(rr, e, blocks, nullptr);
        for (const auto& [s, rows] : extra) {
            int tdim = B_.qb.dim(s + e);
            if (tdim == 0) continue;
            for (const auto& residues : rows)
                append_constraint_rows(rr, e, blocks, nullptr, s, residues);
        }
        return blocks.width - rr.rank();
    }

    // ---- derivations -------------------------------------------------------

    // dim Der(B,B)_e: solutions (b_i in B_{1+e}) of
    //   sum_i d(h)/dx_i * b_i = 0 in B  for every GB element h.
    int der_bb(int e, std::vector<BVec>* basis = nullptr) {
        int n = B_.ring->nvars();
        int src = B_.qb.dim(1 + e);
        if (src == 0) {
            if (basis) basis->clear();
            return 0;
        }
        int width = n * src;
        Rref<F> rr(K_, width);
        for (size_t k = 0; k < B_.gb.elements.size(); ++k) {
            const auto& h = B_.gb.elements[k];
            int target = h.degree() + e;
            int tdim = B_.qb.dim(target);
            if (tdim == 0) continue;
            // columns: (variable i, source basis c); rows: target basis t
            std::vector<std::vector<Elem>> cols(width);
            for (int i = 0; i < n; ++i) {
                MPoly<F> dh = h.derivative(i, K_);
                for (int c = 0; c < src; ++c) {
                    BVec unit(src, K_.zero());
                    unit[c] = K_.one();
                    cols[i * src + c] = ops_.mult(unit, 1 + e, dh, target);
                }
            }
            for (int t = 0; t < tdim; ++t) {
                std::vector<Elem> row(width, K_.zero());
                for (int w = 0; w < width; ++w) row[w] = cols[w][t];
                rr.insert(std::move(row));
            }
        }
        if (basis) *basis = rr.kernel_basis();
        return width - rr.rank();
    }

    // Bigraded Der(B,B) at bidegree (ex, ey).
    int der_bb_bigraded(int ex, int ey) {
        int n = B_.ring->nvars();
        int e = ex + ey;
        int src_deg = 1 + e;
        if (B_.qb.dim(src_deg) == 0) return 0;
        // unknown slices: delta(x_i) in slice (1+ex, ey) or (ex, 1+ey)
        std::vector<std::pair<int, int>> cols;  // (variable, basis position)
        for (int i = 0; i < n; ++i) {
            BidegKey key = B_.ring->block(i) == 0 ? BidegKey{1 + ex, ey} : BidegKey{ex, 1 + ey};
            for (int c : slice(src_deg, key)) cols.emplace_back(i, c);
        }
        if (cols.empty()) return 0;
        int width = static_cast<int>(cols.size());
        int src = B_.qb.dim(src_deg);
        Rref<F> rr(K_, width);
        for (size_t k = 0; k < B_.gb.elements.size(); ++k) {
            const auto& h = B_.gb.elements[k];
            int target = h.degree() + e;
            int tdim = B_.qb.dim(target);
            if (tdim == 0) continue;
            std::vector<BVec> col_imgs(width);
            for (int w = 0; w < width; ++w) {
                auto [i, c] = cols[w];
                BVec unit(src, K_.zero());
                unit[c] = K_.one();
                col_imgs[w] = ops_.mult(unit, src_deg, h.derivative(i, K_), target);
            }
            for (int t = 0; t < tdim; ++t) {
                std::vector<Elem> row(width, K_.zero());
                for (int w = 0; w < width; ++w) row[w] = col_imgs[w][t];
                rr.insert(std::move(row));
            }
        }
        return width - rr.rank();
    }

    int der_s_bigraded(int ex, int ey) const {
        int n = B_.ring->nvars();
        int src_deg = 1 + ex + ey;
        int s = 0;
        for (int i = 0; i < n; ++i) {
            BidegKey key = B_.ring->block(i) == 0 ? BidegKey{1 + ex, ey} : BidegKey{ex, 1 + ey};
            s += static_cast<int>(slice(src_deg, key).size());
        }
        return s;
    }

    // Rank of the Jacobian map Der(S,B)_e -> Hom coordinates, plus a check
    // that its image lies inside the Hom solution space (two-path test).
    int jacobian_rank(int e, const std::vector<BVec>& hom_solution_basis, bool* contained) {
        int n = B_.ring->nvars();
        int src = B_.qb.dim(1 + e);
        auto blocks = unknown_blocks(e);
        if (src == 0 || blocks.width == 0) {
            if (contained) *contained = true;
            return 0;
        }
        // span of the solution basis, to test containment
        Rref<F> sol(K_, blocks.width);
        for (const auto& v : hom_solution_basis) sol.insert(v);
        Rref<F> jac(K_, blocks.width);
        bool inside = true;
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < src; ++c) {
                BVec unit(src, K_.zero());
                unit[c] = K_.one();
                std::vector<Elem> img(blocks.width, K_.zero());
                for (size_t k = 0; k < B_.gb.elements.size(); ++k) {
                    if (blocks.dims[k] == 0) continue;
                    BVec part = ops_.mult(unit, 1 + e, B_.gb.elements[k].derivative(i, K_),
                                          gb_degrees_[k] + e);
                    for (int t = 0; t < blocks.dims[k]; ++t) img[blocks.offs[k] + t] = part[t];
                }
                auto red = sol.reduce(img);
                for (int w = 0; w < blocks.width; ++w) inside = inside && K_.is_zero(red[w]);
                jac.insert(std::move(img));
            }
        }
        if (contained) *contained = inside;
        return jac.rank();
    }

private:
    struct Blocks {
        std::vector<int> offs;
        std::vector<int> dims;
        int width = 0;
        // per-block positions into the full degree basis (bigraded case);
        // empty means the identity embedding
        std::vector<std::vector<int>> positions;
    };

    Blocks unknown_blocks(int e) const {
        Blocks b;
        size_t N = B_.gb.elements.size();
        b.offs.resize(N);
        b.dims.resize(N);
        for (size_t k = 0; k < N; ++k) {
            b.offs[k] = b.width;
            b.dims[k] = B_.qb.dim(gb_degrees_[k] + e);
            b.width += b.dims[k];
        }
        return b;
    }

    Blocks unknown_blocks_bigraded(int ex, int ey) const {
        Blocks b;
        size_t N = B_.gb.elements.size();
        b.offs.resize(N);
        b.dims.resize(N);
        b.positions.resize(N);
        for (size_t k = 0; k < N; ++k) {
            b.offs[k] = b.width;
            Bidegree hd = B_.ring->bidegree(B_.gb.elements[k].lead().mono);
            BidegKey key{hd.x + ex, hd.y + ey};
            const auto& pos = slice(gb_degrees_[k] + ex + ey, key);
            b.positions[k] = pos;
            b.dims[k] = static_cast<int>(pos.size());
            b.width += b.dims[k];
        }
        return b;
    }

    const std::vector<int>& slice(int d, const BidegKey& key) const {
        static const std::vector<int> empty;
        if (d < 0 || d >= static_cast<int>(slices_.size())) return empty;
        auto it = slices_[d].find(key);
        return it == slices_[d].end() ? empty : it->second;
    }

    // One compressed residue row of internal degree s: its dim B_{s+e}
    // constraints on the unknowns laid out per `blocks`.
    void append_constraint_rows(Rref<F>& rr, int e, const Blocks& blocks, const Blocks* bigraded,
                                int s, const std::vector<MPoly<F>>& residues) {
        size_t N = B_.gb.elements.size();
        int tdim = B_.qb.dim(s + e);
        if (tdim == 0) return;
        // columns: image of each unknown basis vector under multiplication
        // by the residue of its block's coefficient
        std::vector<BVec> col_imgs(blocks.width);
        bool any = false;
        for (size_t k = 0; k < N; ++k) {
            if (blocks.dims[k] == 0 || residues[k].is_zero()) continue;
            int src_deg = gb_degrees_[k] + e;
            int src_dim = B_.qb.dim(src_deg);
            for (int c = 0; c < blocks.dims[k]; ++c) {
                BVec unit(src_dim, K_.zero());
                int pos = bigraded ? blocks.positions[k][c] : c;
                unit[pos] = K_.one();
                col_imgs[blocks.offs[k] + c] = ops_.mult(unit, src_deg, residues[k], s + e);
                any = true;
            }
        }
        if (!any) return;
        for (int t = 0; t < tdim; ++t) {
            std::vector<Elem> row(blocks.width, K_.zero());
            bool nz = false;
            for (int w = 0; w < blocks.width; ++w) {
                if (col_imgs[w].empty()) continue;
                row[w] = col_imgs[w][t];
                nz = nz || !K_.is_zero(row[w]);
            }
            if (nz) rr.insert(std::move(row));
        }
    }

    // Append the syzygy constraints for total degree e, with unknowns laid
    // out per `blocks` (bigraded slices when blocks.positions is set).
    void add_hom_constraints(Rref<F>& rr, int e, const Blocks& blocks, const Blocks* bigraded) {
        for (const auto& [s, rows] : compressed_)
            for (const auto& residues : rows)
                append_constraint_rows(rr, e, blocks, bigraded, s, residues);
    }

    const AlgebraPresentation<F>& B_;
    const F K_;
    QuotientOps<F> ops_;
    int top_ = 0;
    std::vector<int> gb_degrees_;
    std::map<int, std::vector<std::vector<MPoly<F>>>> compressed_;  // s -> residue rows
    std::vector<std::map<BidegKey, std::vector<int>>> slices_;      // degree -> bidegree -> positions
};

// dim Der(B,B)_e over a window. Degrees where B_{1+e} is zero report 0.
template <class F>
GradedDims derivations_graded(const AlgebraPresentation<F>& B, const F& K, int lo, int hi) {
    CotangentContext<F> ctx(B, K);
    GradedDims out;
    out.lo = lo;
    out.hi = hi;
    for (int e = lo; e <= hi; ++e) out.set(e, ctx.der_bb(e));
    return out;
}

template <class F>
GradedDims derivations_graded(const AlgebraPresentation<F>& B, const F& K) {
    int top = B.top_degree();
    return derivations_graded(B, K, -(std::max(top, B.max_gen_degree()) + 2), top);
}

// Graded T^1 via the four-term sequence
//   0 -> Der(B,B) -> Der(S,B) -> Hom_B(I/I^2, B) -> T^1(B,B) -> 0:
//   T^1_e = dim Hom_e - (n * dim B_{1+e} - dim Der(B,B)_e).
// With two_path set, additionally computes the Jacobian image explicitly and
// checks both its rank and its containment in the Hom solution space.
template <class F>
TangentReport t1_graded(const AlgebraPresentation<F>& B, const F& K, int lo = 1,
                        int hi = -1, bool two_path = false) {
    CotangentContext<F> ctx(B, K);
    int top = B.top_degree();
    int maxgen = B.max_gen_degree();
    if (lo > hi) {
        lo = -(std::max(top, maxgen) + 2);
        hi = top;
    }
    int n = B.ring->nvars();
    TangentReport rep;
    rep.algebra_length = B.length();
    rep.socle_degree = top;
    rep.t0.lo = rep.t1.lo = lo;
    rep.t0.hi = rep.t1.hi = hi;
    for (int e = lo; e <= hi; ++e) {
        std::vector<typename CotangentContext<F>::BVec> sol;
        int hom = ctx.hom_dim(e, two_path ? &sol : nullptr);
        int derb = ctx.der_bb(e);
        int ders = n * B.qb.dim(1 + e);
        int t1 = hom - ders + derb;
        if (t1 < 0)
            throw Error("NegativeT1", "rank bookkeeping produced a negative dimension");
        if (two_path) {
            bool contained = false;
            int jr = ctx.jacobian_rank(e, sol, &contained);
            if (jr != ders - derb)
                throw Error("TwoPathMismatch", "Jacobian rank disagrees with Der bookkeeping");
            if (!contained)
                throw Error("TwoPathMismatch", "Jacobian image escapes the Hom solution space");
        }
        rep.t0.set(e, derb);
        rep.t1.set(e, t1);
        if (e == 1) rep.der_bb_1 = derb;
        // structural vanishing: no unknowns at all below -maxgen
        if (e < -maxgen && t1 != 0)
            throw Error("StructuralWindow", "T^1 nonzero below the structural bound");
    }
    rep.tnt = rep.t1.zero_below(0);
    rep.concentrated_minus_one = rep.t1.zero_below(-1);
    rep.positive_vanishes = rep.t1.zero_above(0);
    return rep;
}

// Bigraded T^1 of a presentation carrying block tags (e.g. a union along the
// point). Same linear algebra, sliced bidegree by bidegree.
template <class F>
BigradedDims t1_bigraded(const AlgebraPresentation<F>& B, const F& K, int lo = 1, int hi = -1) {
    if (!B.ring->bigraded()) throw NotBigraded("presentation has no bidegree tags");
    for (const auto& h : B.gb.elements) {
        Bidegree lead = B.ring->bidegree(h.lead().mono);
        for (const auto& t : h.terms())
            if (!(B.ring->bidegree(t.mono) == lead))
                throw NotBigraded("ideal is not bihomogeneous");
    }
    CotangentContext<F> ctx(B, K);
    int top = B.top_degree();
    int maxgen = B.max_gen_degree();
    if (lo > hi) {
        lo = -(std::max(top, maxgen) + 2);
        hi = top;
    }
    BigradedDims out;
    out.lo_total = lo;
    out.hi_total = hi;
    for (int e = lo; e <= hi; ++e) {
        for (int ex = lo; ex <= top; ++ex) {
            int ey = e - ex;
            if (ey < lo - top || ey > top) continue;
            int hom = ctx.hom_dim_bigraded(ex, ey);
            int ders = ctx.der_s_bigraded(ex, ey);
            int derb = ctx.der_bb_bigraded(ex, ey);
            int t1 = hom - ders + derb;
            if (t1 < 0)
                throw Error("NegativeT1", "bigraded rank bookkeeping went negative");
            if (t1 != 0) out.dims[{ex, ey}] = t1;
        }
    }
    return out;
}

// Coordinate layout for the free module (+)_j S(-t_j) in one internal
// degree s: one block per generator, indexed by the monomials of S_{s-t_j}.
struct SyzLayout {
    std::vector<MonoIndex> blocks;  // block j: monomials of degree s - t_j
    std::vector<int> offs;          // block offsets, offs.back() = total width
    int width() const { return offs.back(); }
    int coord(int j, const Expo& e) const {
        int idx = blocks[j].index_of(e);
        if (idx < 0) throw Error("Layout", "domain coordinate not found");
        return offs[j] + idx;
    }
};

inline SyzLayout syz_layout(int nvars, int s, const std::vector<int>& tdeg) {
    SyzLayout L;
    L.offs.assign(tdeg.size() + 1, 0);
    for (size_t j = 0; j < tdeg.size(); ++j) {
        if (s - tdeg[j] >= 0)
            L.blocks.emplace_back(monomials_of_degree(nvars, s - tdeg[j]));
        else
            L.blocks.emplace_back();
        L.offs[j + 1] = L.offs[j] + L.blocks[j].size();
    }
    return L;
}

// T^2(B, k) via the Lichtenbaum-Schlessinger description with residue
// coefficients and minimal generators: T^2(B,k)_{-s} = dim (R/(R_0 + mR))_s,
// R the first syzygies of the minimal generators, R_0 the Koszul rows.
// Degrees with beta_{2,s} = 0 vanish outright (the quotient is a further
// quotient of R/mR); the heavy spans are only assembled where they can be
// nonzero.
template <class F>
GradedDims t2_residue_graded(const AlgebraPresentation<F>& B, const F& K) {
    int top = B.top_degree();
    GradedDims out;
    out.lo = -(top + 2);
    out.hi = 0;
    if (top < 0 || B.min_gens.empty()) return out;
    BettiTable bt = minimal_betti(B, K);
    int n = B.ring->nvars();
    const auto& gens = B.min_gens;
    std::vector<int> tdeg;
    for (const auto& g : gens) tdeg.push_back(g.degree());

    // Degreewise kernel of (+)_j S(-t_j) -> S_s.
    auto kernel_of_degree = [&](int s) {
        SyzLayout L = syz_layout(n, s, tdeg);
        MonoIndex target(monomials_of_degree(n, s));
        std::vector<std::vector<typename F::Elem>> rows(
            target.size(), std::vector<typename F::Elem>(L.width(), K.zero()));
        for (size_t j = 0; j < gens.size(); ++j) {
            for (int c = 0; c < L.blocks[j].size(); ++c) {
                const Expo& m = L.blocks[j].monos[c];
                for (const auto& t : gens[j].terms())
                    rows[target.index_of(expo_add(t.mono, m, n))][L.offs[j] + c] = t.coef;
            }
        }
        Rref<F> rr(K, L.width());
        for (auto& row : rows) rr.insert(std::move(row));
        return std::make_pair(rr.kernel_basis(), std::move(L));
    };

    for (int s = 2; s <= top + 2; ++s) {
        if (bt.at(2, s) == 0) continue;  // T^2_{-s} <= beta_{2,s}
        SyzLayout L = syz_layout(n, s, tdeg);
        int W = L.width();
        int dimI = ideal_dim_in_degree(B.gb, s);
        long long dimR = static_cast<long long>(W) - dimI;
        Rref<F> span(K, W);
        // (R_0)_s: monomial multiples of the Koszul rows g_j e_i - g_i e_j.
        for (size_t i = 0; i < gens.size(); ++i) {
            for (size_t j = i + 1; j < gens.size(); ++j) {
                int base = tdeg[i] + tdeg[j];
                if (base > s) continue;
                for (const Expo& m : monomials_of_degree(n, s - base)) {
                    std::vector<typename F::Elem> row(W, K.zero());
                    for (const auto& t : gens[j].terms()) {
                        int w = L.coord(static_cast<int>(i), expo_add(t.mono, m, n));
                        row[w] = K.add(row[w], t.coef);
                    }
                    for (const auto& t : gens[i].terms()) {
                        int w = L.coord(static_cast<int>(j), expo_add(t.mono, m, n));
                        row[w] = K.sub(row[w], t.coef);
                    }
                    span.insert(std::move(row));
                }
            }
        }
        // (mR)_s = S_1 * R_{s-1}.
        auto [kernel, Lprev] = kernel_of_degree(s - 1);
        for (const auto& v : kernel) {
            for (int var = 0; var < n; ++var) {
                std::vector<typename F::Elem> row(W, K.zero());
                for (size_t j = 0; j < gens.size(); ++j) {
                    for (int c = 0; c < Lprev.blocks[j].size(); ++c) {
                        typename F::Elem val = v[Lprev.offs[j] + c];
                        if (K.is_zero(val)) continue;
                        Expo e = Lprev.blocks[j].monos[c];
                        e[var] += 1;
                        row[L.coord(static_cast<int>(j), e)] = val;
                    }
                }
                span.insert(std::move(row));
            }
        }
        long long t2 = dimR - span.rank();
        if (t2 < 0) throw Error("NegativeT2", "T^2 bookkeeping went negative");
        out.set(-s, static_cast<int>(t2));
    }
    return out;
}

}  // namespace apolar
