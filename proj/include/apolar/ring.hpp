#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/field.hpp"

namespace apolar {

// Dense exponent vectors, capped at 16 variables (desk scale; n <= 14 in
// every pipeline this toolkit runs).
constexpr int kMaxVars = 16;

using Expo = std::array<uint8_t, kMaxVars>;

struct Bidegree {
    int x = 0;
    int y = 0;
    bool operator==(const Bidegree& o) const { return x == o.x && y == o.y; }
    bool operator<(const Bidegree& o) const { return x != o.x ? x < o.x : y < o.y; }
    int total() const { return x + y; }
    bool pure_x() const { return y == 0 && x != 0; }
    bool pure_y() const { return x == 0 && y != 0; }
    // (0,0) is neither pure nor mixed by convention.
    bool mixed() const { return x != 0 && y != 0; }
};

// Polynomial ring descriptor: ordered variable names, per-variable block tag
// (0 = x-block, 1 = y-block) for the bigraded constructions, and the
// coefficient field. Monomial order is grevlex with the declared variable
// order; everything downstream depends on it being fixed.
class RingDescriptor {
public:
    RingDescriptor(std::vector<std::string> names, FieldSpec field,
                   std::vector<int> blocks = {})
        : names_(std::move(names)), field_(field), blocks_(std::move(blocks)) {
        if (names_.size() > kMaxVars)
            throw VariableLimitExceeded("at most " + std::to_string(kMaxVars) +
                                        " variables supported, got " +
                                        std::to_string(names_.size()));
        for (size_t i = 0; i < names_.size(); ++i)
            for (size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw InconsistentRing("duplicate variable name " + names_[i]);
        if (blocks_.empty()) blocks_.assign(names_.size(), 0);
        if (blocks_.size() != names_.size())
            throw InconsistentRing("block tags must match variable count");
    }

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }
    const FieldSpec& field() const { return field_; }
    int block(int i) const { return blocks_[i]; }
    bool bigraded() const {
        for (int b : blocks_)
            if (b != 0) return true;
        return false;
    }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    Bidegree bidegree(const Expo& e) const {
        Bidegree d;
        for (int i = 0; i < nvars(); ++i)
            (blocks_[i] == 0 ? d.x : d.y) += e[i];
        return d;
    }

    bool operator==(const RingDescriptor& o) const {
        return names_ == o.names_ && field_ == o.field_ && blocks_ == o.blocks_;
    }

private:
    std::vector<std::string> names_;
    FieldSpec field_;
    std::vector<int> blocks_;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

inline RingPtr make_ring(std::vector<std::string> names, FieldSpec field = {},
                         std::vector<int> blocks = {}) {
    return std::make_shared<RingDescriptor>(std::move(names), field, std::move(blocks));
}

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw RingMismatch("operands live in different rings");
}

// ---- monomial helpers -------------------------------------------------------

inline Expo expo_zero() {
    Expo e{};
    e.fill(0);
    return e;
}

inline int expo_degree(const Expo& e, int nvars) {
    int d = 0;
    for (int i = 0; i < nvars; ++i) d += e[i];
    return d;
}

inline bool expo_divides(const Expo& a, const Expo& b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expo expo_add(const Expo& a, const Expo& b, int nvars) {
    Expo r = expo_zero();
    for (int i = 0; i < nvars; ++i) r[i] = static_cast<uint8_t>(a[i] + b[i]);
    return r;
}

inline Expo expo_sub(const Expo& a, const Expo& b, int nvars) {
    Expo r = expo_zero();
    for (int i = 0; i < nvars; ++i) r[i] = static_cast<uint8_t>(a[i] - b[i]);
    return r;
}

inline Expo expo_lcm(const Expo& a, const Expo& b, int nvars) {
    Expo r = expo_zero();
    for (int i = 0; i < nvars; ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool expo_coprime(const Expo& a, const Expo& b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (a[i] && b[i]) return false;
    return true;
}

// Graded reverse lexicographic order: higher total degree first; within a
// degree, a > b iff the last nonzero entry of a - b is negative.
inline int grevlex_cmp(const Expo& a, const Expo& b, int nvars) {
    int da = expo_degree(a, nvars), db = expo_degree(b, nvars);
    if (da != db) return da < db ? -1 : 1;
    for (int i = nvars - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

// Enumerate all monomials of total degree d in the given ring, sorted in
// descending grevlex order. Deterministic; used as the column basis for all
// degreewise linear algebra.
std::vector<Expo> monomials_of_degree(int nvars, int d);

inline std::string monomial_to_string(const Expo& e, const RingDescriptor& ring) {
    std::string s;
    for (int i = 0; i < ring.nvars(); ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += ring.name(i);
        if (e[i] > 1) s += "^" + std::to_string(static_cast<int>(e[i]));
    }
    return s.empty() ? "1" : s;
}

}  // namespace apolar
