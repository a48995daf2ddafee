#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "apolar/field.hpp"
#include "apolar/ring.hpp"

namespace apolar {

struct ExpoHash {
    size_t operator()(const Expo& e) const {
        uint64_t h = 1469598103934665603ull;
        for (uint8_t b : e) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// Index of a fixed monomial basis (one graded slice), mapping exponent
// vectors to column positions. Columns follow descending grevlex so that the
// leftmost pivot of a reduced row is its lead monomial.
struct MonoIndex {
    std::vector<Expo> monos;
    std::unordered_map<Expo, int, ExpoHash> pos;

    MonoIndex() = default;
    explicit MonoIndex(std::vector<Expo> ms) : monos(std::move(ms)) {
        for (size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = static_cast<int>(i);
    }
    int size() const { return static_cast<int>(monos.size()); }
    int index_of(const Expo& e) const {
        auto it = pos.find(e);
        return it == pos.end() ? -1 : it->second;
    }
};

// Incremental row echelon form over an exact field, with an optional passive
// augmented block for combination bookkeeping. Inserts keep a normalized REF
// (each pivot entry 1, pivots in distinct columns); finalize() runs one
// back-substitution pass to full RREF when canonical rows or kernels are
// needed. Over F_p the reduction loop uses delayed modular reduction: with
// p < 2^15 every accumulated entry stays below 2^64 at desk scale.
template <class F>
class Rref {
public:
    using Elem = typename F::Elem;

    Rref(const F& K, int width, int aug = 0) : K_(K), width_(width), aug_(aug) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }
    int row_of_pivot(int col) const {
        auto it = row_of_pivot_.find(col);
        return it == row_of_pivot_.end() ? -1 : it->second;
    }

    // Fully reduce `row` against the current basis (forward elimination over
    // all pivots; complete because pivots are visited in column order).
    std::vector<Elem> reduce(std::vector<Elem> row) const {
        if constexpr (std::is_same_v<Elem, uint32_t>) {
            std::vector<uint64_t> buf(row.begin(), row.end());
            reduce_buffer(buf);
            std::vector<Elem> out(buf.size());
            const uint64_t p = K_.p;
            for (size_t i = 0; i < buf.size(); ++i) out[i] = static_cast<uint32_t>(buf[i] % p);
            return out;
        } else {
            reduce_generic(row);
            return row;
        }
    }

    // Insert a row of width() + aug entries; returns the new pivot column,
    // or -1 if the row reduced to zero in the main block (its reduced aug
    // block is then available via last_reduced_aug()).
    int insert(std::vector<Elem> row) {
        std::vector<Elem> red = reduce(std::move(row));
        int pivot = -1;
        for (int c = 0; c < width_; ++c) {
            if (!K_.is_zero(red[c])) {
                pivot = c;
                break;
            }
        }
        if (pivot < 0) {
            last_aug_.assign(red.begin() + width_, red.end());
            return -1;
        }
        Elem inv = K_.inv(red[pivot]);
        for (auto& v : red) v = K_.mul(v, inv);
        row_of_pivot_[pivot] = static_cast<int>(rows_.size());
        pivot_cols_.push_back(pivot);
        rows_.push_back(std::move(red));
        finalized_ = rows_.size() == 1;
        return pivot;
    }

    const std::vector<Elem>& last_reduced_aug() const { return last_aug_; }

    // One back-substitution pass to full RREF (idempotent).
    void finalize() {
        if (finalized_) return;
        std::vector<size_t> order(rows_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return pivot_cols_[a] > pivot_cols_[b]; });
        for (size_t idx : order) {
            auto& row = rows_[idx];
            int pc = pivot_cols_[idx];
            if constexpr (std::is_same_v<Elem, uint32_t>) {
                std::vector<uint64_t> buf(row.begin(), row.end());
                const uint64_t p = K_.p;
                for (int c = pc + 1; c < width_; ++c) {
                    uint64_t v = buf[c] % p;
                    buf[c] = v;
                    if (!v) continue;
                    int r = row_of_pivot(c);
                    if (r < 0) continue;
                    const auto& prow = rows_[r];  // already final (larger pivot)
                    buf[c] = 0;
                    for (size_t k = c + 1; k < prow.size(); ++k) {
                        uint32_t e = prow[k];
                        if (e) buf[k] += v * (p - e);
                    }
                }
                for (size_t k = 0; k < buf.size(); ++k) row[k] = static_cast<uint32_t>(buf[k] % p);
            } else {
                for (int c = pc + 1; c < width_; ++c) {
                    if (K_.is_zero(row[c])) continue;
                    int r = row_of_pivot(c);
                    if (r < 0) continue;
                    Elem f = row[c];
                    const auto& prow = rows_[r];
                    for (size_t k = c; k < prow.size(); ++k)
                        row[k] = K_.sub(row[k], K_.mul(f, prow[k]));
                }
            }
        }
        finalized_ = true;
    }

    // Canonical (fully reduced) rows; forces finalization.
    const std::vector<std::vector<Elem>>& rref_rows() {
        finalize();
        return rows_;
    }

    // Row-echelon rows as currently stored (spanning set, not canonical).
    const std::vector<std::vector<Elem>>& ref_rows() const { return rows_; }

    // Basis of {x : M x = 0} where the inserted rows are the rows of M.
    // Requires aug == 0. Canonical: one vector per free column, in column
    // order.
    std::vector<std::vector<Elem>> kernel_basis() {
        finalize();
        std::vector<std::vector<Elem>> out;
        std::vector<char> is_pivot(width_, 0);
        for (int c : pivot_cols_) is_pivot[c] = 1;
        for (int j = 0; j < width_; ++j) {
            if (is_pivot[j]) continue;
            std::vector<Elem> v(width_, K_.zero());
            v[j] = K_.one();
            for (size_t r = 0; r < rows_.size(); ++r)
                if (!K_.is_zero(rows_[r][j])) v[pivot_cols_[r]] = K_.neg(rows_[r][j]);
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    const F K_;
    int width_;
    int aug_;
    bool finalized_ = true;
    std::vector<std::vector<Elem>> rows_;
    std::vector<int> pivot_cols_;
    std::unordered_map<int, int> row_of_pivot_;
    std::vector<Elem> last_aug_;

    void reduce_buffer(std::vector<uint64_t>& buf) const {
        if constexpr (std::is_same_v<Elem, uint32_t>) {
            const uint64_t p = K_.p;
            for (int c = 0; c < width_; ++c) {
                uint64_t v = buf[c] % p;
                buf[c] = v;
                if (!v) continue;
                int r = row_of_pivot(c);
                if (r < 0) continue;
                const auto& prow = rows_[r];
                buf[c] = 0;
                const size_t w = prow.size();
                for (size_t k = c + 1; k < w; ++k) {
                    uint32_t e = prow[k];
                    if (e) buf[k] += v * (p - e);
                }
            }
            for (size_t k = width_; k < buf.size(); ++k) buf[k] %= p;
        }
    }

    void reduce_generic(std::vector<Elem>& row) const {
        for (int c = 0; c < width_; ++c) {
            if (K_.is_zero(row[c])) continue;
            int r = row_of_pivot(c);
            if (r < 0) continue;
            Elem f = row[c];
            const auto& prow = rows_[r];
            for (size_t k = c; k < prow.size(); ++k)
                row[k] = K_.sub(row[k], K_.mul(f, prow[k]));
        }
    }
};

template <class F>
int rank_of_rows(const F& K, int width, const std::vector<std::vector<typename F::Elem>>& rows) {
    Rref<F> rr(K, width);
    for (const auto& r : rows) rr.insert(r);
    return rr.rank();
}

}  // namespace apolar
