#pragma once

// Exact arithmetic in GF(p^m) with explicit lookup tables.
//
// Elements are handles 0..q-1; handle a encodes the coefficient vector
// (a mod p, (a/p) mod p, ...) of the residue class in the power basis of the
// modulus root, constant term first. Handle 0 is the zero element and handles
// 0..p-1 are the prime subfield. Fields are immutable and cheap to copy
// (shared internals).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace psbent {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// element of GF(p^m) spelled out as its coefficient vector, constant term first
struct FieldElement {
    std::vector<int> coeffs;
};

namespace detail {

// polynomial helpers over Z_p, coefficient lists with constant term first
inline void poly_trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic b
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    poly_trim(a);
    while (a.size() >= b.size()) {
        int f = a.back();
        std::size_t off = a.size() - b.size();
        if (f != 0)
            for (std::size_t i = 0; i < b.size(); ++i)
                a[off + i] = ((a[off + i] - f * b[i]) % p + p) % p;
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

inline std::vector<int> poly_from_value(long long v, int p, int deg, bool monic) {
    std::vector<int> c(deg + (monic ? 1 : 0), 0);
    for (int i = 0; i < deg; ++i) { c[i] = static_cast<int>(v % p); v /= p; }
    if (monic) c[deg] = 1;
    return c;
}

// trial division against every monic divisor of degree 1..deg/2
inline bool poly_irreducible(const std::vector<int>& cand, int p) {
    int deg = static_cast<int>(cand.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            std::vector<int> div = poly_from_value(v, p, d, true);
            if (poly_mod(cand, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

class Field {
public:
    // build GF(p^m) with the smallest monic irreducible modulus, candidates
    // ordered by the integer value of their coefficient vector (constant term
    // least significant)
    static Field make(int p, int m) {
        if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
        if (m < 1) throw std::invalid_argument("Field: extension degree must be >= 1");
        long long q = 1;
        for (int i = 0; i < m; ++i) {
            q *= p;
            if (q > kMaxOrder) throw std::invalid_argument("Field: order above supported limit 256");
        }
        if (m == 1) return Field(p, m, {0, 1});
        for (long long v = 0; v < q; ++v) {
            std::vector<int> cand = detail::poly_from_value(v, p, m, true);
            if (detail::poly_irreducible(cand, p)) return Field(p, m, cand);
        }
        throw std::logic_error("Field: no irreducible modulus found");  // unreachable
    }

    static Field with_modulus(int p, std::vector<int> modulus) {
        if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
        if (modulus.size() < 2 || modulus.back() != 1)
            throw std::invalid_argument("Field: modulus must be monic of degree >= 1");
        for (int c : modulus)
            if (c < 0 || c >= p) throw std::invalid_argument("Field: modulus coefficient out of range");
        int m = static_cast<int>(modulus.size()) - 1;
        if (m > 1 && !detail::poly_irreducible(modulus, p))
            throw std::invalid_argument("Field: modulus is reducible");
        long long q = 1;
        for (int i = 0; i < m; ++i) {
            q *= p;
            if (q > kMaxOrder) throw std::invalid_argument("Field: order above supported limit 256");
        }
        return Field(p, m, std::move(modulus));
    }

    int p() const { return impl_->p; }
    int m() const { return impl_->m; }
    int q() const { return impl_->q; }
    const std::vector<int>& modulus() const { return impl_->modulus; }

    int add(int a, int b) const { return impl_->add[a * impl_->q + b]; }
    int sub(int a, int b) const { return impl_->add[a * impl_->q + impl_->neg[b]]; }
    int neg(int a) const { return impl_->neg[a]; }
    int mul(int a, int b) const { return impl_->mul[a * impl_->q + b]; }

    int inv(int a) const {
        if (a == 0) throw std::invalid_argument("Field: inverse of zero");
        return impl_->inv[a];
    }

    int pow(int a, long long e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        e %= impl_->q - 1;
        if (e < 0) e += impl_->q - 1;
        int r = 1, b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    int frobenius(int a) const { return pow(a, impl_->p); }

    // absolute trace x + x^p + ... + x^(p^(m-1)), landing in Z_p
    int trace(int a) const { return impl_->trace[a]; }

    FieldElement element(int a) const {
        check_handle(a);
        FieldElement e;
        e.coeffs.resize(impl_->m);
        for (int i = 0; i < impl_->m; ++i) { e.coeffs[i] = a % impl_->p; a /= impl_->p; }
        return e;
    }

    int index(const FieldElement& e) const {
        if (static_cast<int>(e.coeffs.size()) != impl_->m)
            throw std::invalid_argument("Field: coefficient vector has wrong length");
        int v = 0;
        for (int i = impl_->m; i-- > 0;) {
            if (e.coeffs[i] < 0 || e.coeffs[i] >= impl_->p)
                throw std::invalid_argument("Field: coefficient out of range");
            v = v * impl_->p + e.coeffs[i];
        }
        return v;
    }

    // prime-subfield constant c -> element handle (the constant polynomial)
    int from_prime(int c) const { return ((c % impl_->p) + impl_->p) % impl_->p; }

    // identity of the underlying object, used for "same field" checks
    bool same_as(const Field& other) const { return impl_ == other.impl_; }

    friend bool operator==(const Field& a, const Field& b) {
        return a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus;
    }

    static constexpr long long kMaxOrder = 256;

private:
    struct Impl {
        int p, m, q;
        std::vector<int> modulus;
        std::vector<int> add, mul;  // q*q tables
        std::vector<int> neg, inv, trace;
    };
    std::shared_ptr<const Impl> impl_;

    void check_handle(int a) const {
        if (a < 0 || a >= impl_->q) throw std::invalid_argument("Field: element handle out of range");
    }

    Field(int p, int m, std::vector<int> modulus) {
        auto impl = std::make_shared<Impl>();
        impl->p = p;
        impl->m = m;
        int q = 1;
        for (int i = 0; i < m; ++i) q *= p;
        impl->q = q;
        impl->modulus = std::move(modulus);

        auto coeffs = [&](int a) {
            std::vector<int> c(m);
            for (int i = 0; i < m; ++i) { c[i] = a % p; a /= p; }
            return c;
        };
        auto idx = [&](std::span<const int> c) {
            int v = 0;
            for (int i = m; i-- > 0;) v = v * p + c[i];
            return v;
        };

        impl->add.resize(static_cast<std::size_t>(q) * q);
        impl->mul.resize(static_cast<std::size_t>(q) * q);
        impl->neg.resize(q);
        impl->inv.assign(q, 0);
        for (int a = 0; a < q; ++a) {
            auto ca = coeffs(a);
            std::vector<int> cn(m);
            for (int i = 0; i < m; ++i) cn[i] = (p - ca[i]) % p;
            impl->neg[a] = idx(cn);
            for (int b = 0; b < q; ++b) {
                auto cb = coeffs(b);
                std::vector<int> cs(m);
                for (int i = 0; i < m; ++i) cs[i] = (ca[i] + cb[i]) % p;
                impl->add[a * q + b] = idx(cs);
                // polynomial product reduced by the modulus
                std::vector<int> prod(2 * m - 1, 0);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
                for (int d = 2 * m - 2; d >= m; --d) {
                    int f = prod[d];
                    if (f == 0) continue;
                    for (int i = 0; i <= m; ++i)
                        prod[d - m + i] = ((prod[d - m + i] - f * impl->modulus[i]) % p + p) % p;
                }
                prod.resize(m);
                impl->mul[a * q + b] = idx(prod);
            }
        }
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (impl->mul[a * q + b] == 1) { impl->inv[a] = b; break; }

        impl->trace.resize(q);
        for (int a = 0; a < q; ++a) {
            int t = 0, x = a;
            for (int i = 0; i < m; ++i) {
                t = impl->add[t * q + x];
                // x -> x^p
                int y = 1;
                for (int j = 0; j < p; ++j) y = impl->mul[y * q + x];
                x = y;
            }
            // the trace is fixed by Frobenius, hence a prime-subfield constant
            if (t >= p) throw std::logic_error("Field: trace left the prime subfield");
            impl->trace[a] = t;
        }
        impl_ = std::move(impl);
    }
};

// dot product of equal-length element vectors
inline int dot(const Field& K, std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot: length mismatch");
    int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s = K.add(s, K.mul(u[i], v[i]));
    return s;
}

// nonzero Z_p-linear functional K -> Z_p given by coordinate weights
struct LinearFunctional {
    std::vector<int> weights;

    int eval(const Field& K, int x) const {
        if (static_cast<int>(weights.size()) != K.m())
            throw std::invalid_argument("LinearFunctional: weight length mismatch");
        int s = 0, p = K.p();
        for (int i = 0; i < K.m(); ++i) {
            s = (s + weights[i] * (x % p)) % p;
            x /= p;
        }
        return s;
    }

    static LinearFunctional make(const Field& K, std::vector<int> weights) {
        if (static_cast<int>(weights.size()) != K.m())
            throw std::invalid_argument("LinearFunctional: weight length mismatch");
        bool nonzero = false;
        for (int& w : weights) {
            w = ((w % K.p()) + K.p()) % K.p();
            nonzero = nonzero || w != 0;
        }
        if (!nonzero) throw std::invalid_argument("LinearFunctional: all weights zero");
        return LinearFunctional{std::move(weights)};
    }

    // the absolute trace of K expressed in coordinate weights
    static LinearFunctional trace_of(const Field& K) {
        std::vector<int> w(K.m());
        int e = 1;
        for (int i = 0; i < K.m(); ++i) {
            w[i] = K.trace(e);
            e *= K.p();  // basis element x^i has handle p^i
        }
        return make(K, std::move(w));
    }
};

// embedding of K = GF(p^r) into F = GF(p^m), r | m, sending the canonical
// root of K's modulus to its smallest-handle root in F
struct SubfieldEmbedding {
    Field sub;
    Field big;
    std::vector<int> map;  // K handle -> F handle
    int root;              // image of K's modulus root in F

    int operator()(int k) const { return map[k]; }
};

inline SubfieldEmbedding embed_subfield(const Field& K, const Field& F) {
    if (K.p() != F.p() || F.m() % K.m() != 0)
        throw std::invalid_argument("embed_subfield: GF(p^r) embeds only for r | m, same p");
    const auto& mod = K.modulus();
    int root = -1;
    for (int t = 0; t < F.q(); ++t) {
        int v = 0, tp = 1;
        for (std::size_t j = 0; j < mod.size(); ++j) {
            v = F.add(v, F.mul(F.from_prime(mod[j]), tp));
            if (j + 1 < mod.size()) tp = F.mul(tp, t);
        }
        if (v == 0) { root = t; break; }
    }
    if (root < 0) throw std::logic_error("embed_subfield: modulus has no root in F");  // unreachable
    SubfieldEmbedding e{K, F, std::vector<int>(K.q()), root};
    for (int k = 0; k < K.q(); ++k) {
        FieldElement c = K.element(k);
        int v = 0, tp = 1;
        for (int j = 0; j < K.m(); ++j) {
            v = F.add(v, F.mul(F.from_prime(c.coeffs[j]), tp));
            tp = F.mul(tp, root);
        }
        e.map[k] = v;
    }
    return e;
}

}  // namespace psbent
