#pragma once

// Small arbitrary-precision integer, base 2^32 sign-magnitude. Covers what the
// counting bounds need: products, powers, binomial coefficients and floored
// division by machine-word divisors. Not a general bignum library.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace psbent {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v < 0) { negative_ = true; v = -v; }
        std::uint64_t u = static_cast<std::uint64_t>(v);
        while (u) { limbs_.push_back(static_cast<std::uint32_t>(u)); u >>= 32; }
    }

    static BigInt from_u64(std::uint64_t u) {
        BigInt r;
        while (u) { r.limbs_.push_back(static_cast<std::uint32_t>(u)); u >>= 32; }
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }

    // comparison of magnitudes
    static int cmp_mag(const BigInt& a, const BigInt& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        return 0;
    }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_) return a.negative_ ? -1 : 1;
        int c = cmp_mag(a, b);
        return a.negative_ ? -c : c;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.negative_ == b.negative_) {
            BigInt r = add_mag(a, b);
            r.negative_ = a.negative_ && !r.is_zero();
            return r;
        }
        int c = cmp_mag(a, b);
        if (c == 0) return BigInt();
        BigInt r = c > 0 ? sub_mag(a, b) : sub_mag(b, a);
        r.negative_ = (c > 0 ? a.negative_ : b.negative_) && !r.is_zero();
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt nb = b;
        if (!nb.is_zero()) nb.negative_ = !nb.negative_;
        return a + nb;
    }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j]
                                    + r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        r.trim();
        r.negative_ = (a.negative_ != b.negative_) && !r.is_zero();
        return r;
    }

    // floored quotient and remainder by a positive machine word; remainder has
    // the sign convention of truncation toward zero on the magnitude, which is
    // exact for the nonnegative values the bounds code uses
    BigInt divmod_u64(std::uint64_t d, std::uint64_t* rem_out = nullptr) const {
        if (d == 0) throw std::invalid_argument("BigInt: division by zero");
        BigInt q;
        q.limbs_.assign(limbs_.size(), 0);
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            rem = (rem << 32) | limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(rem / d);
            rem %= d;
        }
        q.trim();
        q.negative_ = negative_ && !q.is_zero();
        if (rem_out) *rem_out = static_cast<std::uint64_t>(rem);
        return q;
    }

    BigInt mul_u64(std::uint64_t f) const { return *this * from_u64(f); }

    static BigInt pow(const BigInt& base, std::uint64_t exp) {
        BigInt r(1), b = base;
        while (exp) {
            if (exp & 1) r = r * b;
            b = b * b;
            exp >>= 1;
        }
        return r;
    }

    // C(n, k), exact
    static BigInt binomial(std::uint64_t n, std::uint64_t k) {
        if (k > n) return BigInt();
        if (k > n - k) k = n - k;
        BigInt r(1);
        for (std::uint64_t i = 1; i <= k; ++i) {
            r = r.mul_u64(n - k + i);
            std::uint64_t rem = 0;
            r = r.divmod_u64(i, &rem);
            if (rem != 0) throw std::logic_error("BigInt: binomial not exact");
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string digits;
        BigInt t = *this;
        t.negative_ = false;
        while (!t.is_zero()) {
            std::uint64_t rem = 0;
            t = t.divmod_u64(1000000000ULL, &rem);
            for (int i = 0; i < 9; ++i) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (negative_) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

    // fits-in-i64 convenience for small results
    bool fits_i64() const {
        return limbs_.size() < 2 || (limbs_.size() == 2 && (limbs_[1] >> 31) == 0);
    }
    long long to_i64() const {
        if (!fits_i64()) throw std::overflow_error("BigInt: does not fit in 64 bits");
        std::uint64_t u = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) u = (u << 32) | limbs_[i];
        return negative_ ? -static_cast<long long>(u) : static_cast<long long>(u);
    }

private:
    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros
    bool negative_ = false;

    void trim() { while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back(); }

    static BigInt add_mag(const BigInt& a, const BigInt& b) {
        BigInt r;
        const auto& x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
        const auto& y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
        r.limbs_.assign(x.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::uint64_t cur = carry + x[i] + (i < y.size() ? y[i] : 0);
            r.limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r.limbs_[x.size()] = static_cast<std::uint32_t>(carry);
        r.trim();
        return r;
    }

    // requires |a| >= |b|
    static BigInt sub_mag(const BigInt& a, const BigInt& b) {
        BigInt r;
        r.limbs_.assign(a.limbs_.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a.limbs_[i]) - borrow
                               - (i < b.limbs_.size() ? b.limbs_[i] : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (1LL << 32);
            r.limbs_[i] = static_cast<std::uint32_t>(cur);
        }
        r.trim();
        return r;
    }
};

}  // namespace psbent
