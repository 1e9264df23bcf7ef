#pragma once

// Exact arithmetic in Z[zeta_p] for prime p, zeta a primitive p-th root of
// unity. Elements are integer vectors in the basis 1, zeta, ..., zeta^(p-2);
// the relation 1 + zeta + ... + zeta^(p-1) = 0 is applied eagerly so the
// representation is unique. For p = 2 the ring degenerates to Z (zeta = -1).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psbent/field.hpp"

namespace psbent {

class CyclotomicInt {
public:
    explicit CyclotomicInt(int p) : p_(p), c_(check_order(p) - 1, 0) {}

    static CyclotomicInt from_int(int p, long long n) {
        CyclotomicInt r(p);
        r.c_[0] = n;
        return r;
    }

    // zeta^e, exponent taken mod p
    static CyclotomicInt zeta_pow(int p, long long e) {
        CyclotomicInt r(p);
        e %= p;
        if (e < 0) e += p;
        if (e == static_cast<long long>(p) - 1) {
            for (auto& x : r.c_) x = -1;
        } else {
            r.c_[static_cast<std::size_t>(e)] = 1;
        }
        return r;
    }

    int order() const { return p_; }
    const std::vector<long long>& coords() const { return c_; }

    CyclotomicInt& operator+=(const CyclotomicInt& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CyclotomicInt& operator-=(const CyclotomicInt& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }

    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
        a.check_same(b);
        int p = a.p_;
        // accumulate by exponent mod p, then eliminate zeta^(p-1)
        std::vector<long long> acc(p, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                acc[(i + j) % p] += a.c_[i] * b.c_[j];
        }
        return reduce(p, acc);
    }

    CyclotomicInt scaled(long long s) const {
        CyclotomicInt r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    // Galois substitution zeta -> zeta^t, gcd(t, p) = 1
    CyclotomicInt galois(long long t) const {
        t %= p_;
        if (t < 0) t += p_;
        if (t == 0) throw std::invalid_argument("CyclotomicInt: substitution must be invertible");
        std::vector<long long> acc(p_, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            acc[static_cast<std::size_t>(i * t % p_)] += c_[i];
        return reduce(p_, acc);
    }

    // complex conjugation zeta -> zeta^(p-1)
    CyclotomicInt conj() const { return galois(p_ - 1); }

    // the value as a rational integer, if it is one
    std::optional<long long> as_rational_integer() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return std::nullopt;
        return c_[0];
    }

    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CyclotomicInt& a, const CyclotomicInt& b) { return !(a == b); }

    std::string to_string() const {
        std::string s;
        bool any = false;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (any) s += c_[i] > 0 ? " + " : " - ";
            else if (c_[i] < 0) s += "-";
            long long mag = c_[i] < 0 ? -c_[i] : c_[i];
            if (i == 0) s += std::to_string(mag);
            else {
                if (mag != 1) s += std::to_string(mag) + "*";
                s += "z";
                if (i > 1) s += "^" + std::to_string(i);
            }
            any = true;
        }
        return any ? s : "0";
    }

private:
    int p_;
    std::vector<long long> c_;

    static int check_order(int p) {
        if (!is_prime(p)) throw std::invalid_argument("CyclotomicInt: root order must be prime");
        return p;
    }
    void check_same(const CyclotomicInt& o) const {
        if (p_ != o.p_) throw std::invalid_argument("CyclotomicInt: mismatched root orders");
    }
    static CyclotomicInt reduce(int p, const std::vector<long long>& acc) {
        CyclotomicInt r(p);
        long long top = acc[p - 1];
        for (int i = 0; i < p - 1; ++i) r.c_[i] = acc[i] - top;
        return r;
    }
};

}  // namespace psbent
