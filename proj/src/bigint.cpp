#include "apolar/bigint.hpp"

#include <algorithm>
#include <cstdlib>

#include "apolar/errors.hpp"

namespace apolar {

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    unsigned long long m = negative_ ? ~static_cast<unsigned long long>(v) + 1ull
                                     : static_cast<unsigned long long>(v);
    while (m) {
        limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffull));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    const auto& x = a.limbs_;
    const auto& y = b.limbs_;
    size_t n = std::max(x.size(), y.size());
    r.limbs_.resize(n, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < x.size()) s += x[i];
        if (i < y.size()) s += y[i];
        r.limbs_[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
    return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        int64_t d = static_cast<int64_t>(a.limbs_[i]) - borrow -
                    (i < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[i]) : 0);
        if (d < 0) {
            d += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<uint32_t>(d);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.negative_ == b.negative_) {
        BigInt r = BigInt::add_mag(a, b);
        r.negative_ = a.negative_;
        r.trim();
        return r;
    }
    int c = BigInt::cmp_mag(a, b);
    if (c == 0) return BigInt(0);
    BigInt r = c > 0 ? BigInt::sub_mag(a, b) : BigInt::sub_mag(b, a);
    r.negative_ = c > 0 ? a.negative_ : b.negative_;
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt(0);
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                           r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = a.negative_ != b.negative_;
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw Error("DivisionByZero", "BigInt division by zero");
    int c = cmp_mag(a, b);
    if (c < 0) {
        q = BigInt(0);
        r = a;
        return;
    }
    if (b.limbs_.size() == 1) {
        // Fast single-limb path.
        uint64_t d = b.limbs_[0];
        BigInt quo;
        quo.limbs_.resize(a.limbs_.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a.limbs_[i];
            quo.limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        quo.negative_ = a.negative_ != b.negative_;
        quo.trim();
        q = quo;
        r = BigInt(static_cast<long long>(rem));
        if (!r.is_zero()) r.negative_ = a.negative_;
        return;
    }

    // Knuth algorithm D on normalized magnitudes.
    int shift = 0;
    uint32_t top = b.limbs_.back();
    while (!(top & 0x80000000u)) {
        top <<= 1;
        ++shift;
    }
    auto shl = [&](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] |= v[i] << shift;
            if (shift) out[i + 1] = v[i] >> (32 - shift);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<uint32_t> u = shl(a.limbs_);
    std::vector<uint32_t> v = shl(b.limbs_);
    size_t n = v.size(), m = u.size() - n;
    u.resize(u.size() + 1, 0);
    std::vector<uint32_t> quo(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= (1ull << 32) ||
               (n >= 2 && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= (1ull << 32)) break;
        }
        // u[j .. j+n] -= qhat * v
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffull) - borrow;
            if (t < 0) {
                t += (1ll << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add back.
            t += (1ll << 32);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s);
                c2 = s >> 32;
            }
            t += static_cast<int64_t>(c2);
        }
        u[j + n] = static_cast<uint32_t>(t);
        quo[j] = static_cast<uint32_t>(qhat);
    }
    BigInt qq;
    qq.limbs_ = quo;
    qq.negative_ = a.negative_ != b.negative_;
    qq.trim();
    BigInt rr;
    u.resize(n);
    if (shift) {
        for (size_t i = 0; i < n; ++i) {
            u[i] >>= shift;
            if (i + 1 < n) u[i] |= u[i + 1] << (32 - shift);
        }
    }
    rr.limbs_ = u;
    rr.negative_ = a.negative_;
    rr.trim();
    q = qq;
    r = rr;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_;
    int c = BigInt::cmp_mag(a, b);
    return a.negative_ ? c > 0 : c < 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

uint32_t BigInt::mod_u32(uint32_t p) const {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) rem = ((rem << 32) | limbs_[i]) % p;
    if (negative_ && rem != 0) rem = p - rem;
    return static_cast<uint32_t>(rem);
}

BigInt BigInt::from_string(const std::string& text) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw SyntaxError("empty integer literal");
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw SyntaxError("bad digit in integer literal: " + text);
        r = r * BigInt(10) + BigInt(text[i] - '0');
    }
    if (neg) r = -r;
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt t = abs();
    std::string digits;
    BigInt ten(10);
    while (!t.is_zero()) {
        BigInt q, r;
        divmod(t, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
        t = q;
    }
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigRat::BigRat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void BigRat::normalize() {
    if (den_.is_zero()) throw Error("DivisionByZero", "rational with zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

BigRat BigRat::from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return BigRat(BigInt::from_string(text), BigInt(1));
    return BigRat(BigInt::from_string(text.substr(0, slash)),
                  BigInt::from_string(text.substr(slash + 1)));
}

std::string BigRat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

BigRat operator+(const BigRat& a, const BigRat& b) {
    return BigRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
BigRat operator-(const BigRat& a, const BigRat& b) {
    return BigRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
BigRat operator*(const BigRat& a, const BigRat& b) {
    return BigRat(a.num_ * b.num_, a.den_ * b.den_);
}
BigRat operator/(const BigRat& a, const BigRat& b) {
    if (b.is_zero()) throw Error("DivisionByZero", "rational division by zero");
    return BigRat(a.num_ * b.den_, a.den_ * b.num_);
}
BigRat BigRat::operator-() const {
    BigRat r = *this;
    r.num_ = -r.num_;
    return r;
}

}  // namespace apolar
