#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace apolar {

// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
// Desk-scale workloads only; schoolbook multiplication and Knuth-D division
// are plenty here.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(const std::string& text);
    std::string to_string() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // Truncated quotient and remainder, sign of remainder follows the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b);

    // Value reduced mod p (result in [0, p)).
    uint32_t mod_u32(uint32_t p) const;

private:
    bool negative_ = false;
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zero limbs

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b);  // requires |a| >= |b|
};

// Exact rational number, always normalized: gcd(num, den) = 1, den > 0.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(long long v) : num_(v), den_(1) {}
    BigRat(BigInt num, BigInt den);

    static BigRat from_string(const std::string& text);  // "a" or "a/b"
    std::string to_string() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    friend BigRat operator+(const BigRat& a, const BigRat& b);
    friend BigRat operator-(const BigRat& a, const BigRat& b);
    friend BigRat operator*(const BigRat& a, const BigRat& b);
    friend BigRat operator/(const BigRat& a, const BigRat& b);
    BigRat operator-() const;

    friend bool operator==(const BigRat& a, const BigRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return !(a == b); }

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

}  // namespace apolar
