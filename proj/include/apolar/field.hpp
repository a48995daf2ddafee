#pragma once

#include <cstdint>
#include <string>

#include "apolar/bigint.hpp"
#include "apolar/errors.hpp"

namespace apolar {

// Which exact field the computation runs over. Default is F_32003, the usual
// CAS working prime; exact rationals are available for reruns.
struct FieldSpec {
    enum class Kind { Fp, Rational };
    Kind kind = Kind::Fp;
    uint32_t p = 32003;

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && (kind == Kind::Rational || p == o.p);
    }
    std::string describe() const {
        return kind == Kind::Rational ? "rational" : "fp:" + std::to_string(p);
    }
};

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Arithmetic over F_p, p an odd prime < 2^15 so that sums of products of
// reduced residues stay comfortably inside uint64 (delayed reduction in the
// linear algebra relies on this bound).
struct FpOps {
    using Elem = uint32_t;
    uint32_t p = 32003;

    explicit FpOps(uint32_t prime = 32003) : p(prime) {
        if (!is_prime_u32(prime) || prime == 2 || prime >= (1u << 15))
            throw Error("BadPrime", "field prime must be an odd prime below 2^15, got " +
                                         std::to_string(prime));
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<uint64_t>(a) * b % p);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw Error("DivisionByZero", "inverse of zero in F_p");
        // Extended Euclid.
        int64_t t = 0, newt = 1, r = p, newr = a;
        while (newr != 0) {
            int64_t q = r / newr;
            int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        return static_cast<Elem>(m);
    }
    Elem from_bigint(const BigInt& v) const { return v.mod_u32(p); }
    Elem from_rat_string(const std::string& num, const std::string& den) const {
        return div(from_bigint(BigInt::from_string(num)),
                   from_bigint(BigInt::from_string(den)));
    }
    // Balanced representative for printing, so small negative values read
    // naturally ("-1" instead of "32002").
    std::string to_string(Elem a) const {
        if (a > p / 2) return "-" + std::to_string(p - a);
        return std::to_string(a);
    }
};

// Arithmetic over Q with arbitrary-precision rationals.
struct RatOps {
    using Elem = BigRat;

    Elem zero() const { return BigRat(0); }
    Elem one() const { return BigRat(1); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem inv(const Elem& a) const { return BigRat(1) / a; }
    Elem from_int(long long v) const { return BigRat(v); }
    Elem from_bigint(const BigInt& v) const { return BigRat(v, BigInt(1)); }
    Elem from_rat_string(const std::string& num, const std::string& den) const {
        return BigRat(BigInt::from_string(num), BigInt::from_string(den));
    }
    std::string to_string(const Elem& a) const { return a.to_string(); }
};

}  // namespace apolar
