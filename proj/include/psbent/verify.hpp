#pragma once

// Exact verification engines. Everything here is integer or cyclotomic
// arithmetic; there are no tolerances. Verifiers return the first
// counterexample in canonical scan order (z ascending, then k/u ascending)
// so failure reports are reproducible.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "psbent/bigint.hpp"
#include "psbent/construct.hpp"
#include "psbent/cyclotomic.hpp"
#include "psbent/field.hpp"
#include "psbent/function_table.hpp"
#include "psbent/group.hpp"

namespace psbent {

// ---------------------------------------------------------------------------
// bentness
// ---------------------------------------------------------------------------

struct BentReport {
    bool bent = false;
    std::string method;

    // combinatorial failure: the first z whose difference histogram is not flat
    int z = -1;
    std::vector<long long> histogram;

    // Fourier failure: the first (k, u) with |f^(u)|^2 != |V|
    int k = -1, u = -1;
    std::string norm_square;
};

// exhaustive verification is kept at desk scale; larger inputs are rejected
// instead of running for hours
inline constexpr int kMaxExhaustiveOrder = 4096;

// bent iff x -> f(xz) f(x)^(-1) takes every value |G|/|H| times for all z != 1
inline BentReport verify_bent_combinatorial(const FunctionTable& f) {
    f.check_total();
    const FiniteGroup& G = f.domain;
    const FiniteGroup& H = f.codomain;
    if (G.order() > kMaxExhaustiveOrder)
        throw std::invalid_argument("verify_bent_combinatorial: |G| above exhaustive limit 4096");
    if (G.order() % H.order() != 0)
        throw std::invalid_argument("verify_bent_combinatorial: |H| must divide |G|");
    long long flat = G.order() / H.order();
    BentReport r;
    r.method = "combinatorial";
    for (int z = 1; z < G.order(); ++z) {
        std::vector<long long> hist = coset_difference_histogram(f, z);
        for (long long c : hist)
            if (c != flat) {
                r.z = z;
                r.histogram = std::move(hist);
                return r;
            }
    }
    r.bent = true;
    return r;
}

// the character sum over the domain: sum over v of zeta^(T(u.v + k f(v)))
inline CyclotomicInt walsh_transform(const FunctionTable& f, int k, const LinearFunctional& T,
                                     int u) {
    if (!f.fourier) throw std::invalid_argument("walsh_transform: no vector-space context");
    const FourierContext& ctx = *f.fourier;
    const Field& K = ctx.K;
    if (k <= 0 || k >= K.q()) throw std::invalid_argument("walsh_transform: k must be in K*");
    if (u < 0 || u >= f.domain.order())
        throw std::invalid_argument("walsh_transform: u outside the domain");
    int p = K.p();
    // phase counts: how many v give each exponent; one zeta power per residue
    std::vector<long long> count(p, 0);
    for (int v = 0; v < f.domain.order(); ++v)
        ++count[T.eval(K, K.add(ctx.dot(u, v), K.mul(k, f(v))))];
    CyclotomicInt acc(p);
    for (int e = 0; e < p; ++e)
        if (count[e] != 0) acc += CyclotomicInt::zeta_pow(p, e).scaled(count[e]);
    return acc;
}

// bent iff |f^_k(u)|^2 = |V| exactly for every k in K*, u in V
inline BentReport verify_bent_fourier(const FunctionTable& f, const LinearFunctional& T) {
    f.check_total();
    if (!f.fourier) throw std::invalid_argument("verify_bent_fourier: no vector-space context");
    f.check_fourier_consistent();
    if (f.domain.order() > kMaxExhaustiveOrder)
        throw std::invalid_argument("verify_bent_fourier: |V| above exhaustive limit 4096");
    const Field& K = f.fourier->K;
    long long n = f.domain.order();
    BentReport r;
    r.method = "fourier";
    for (int k = 1; k < K.q(); ++k)
        for (int u = 0; u < f.domain.order(); ++u) {
            CyclotomicInt w = walsh_transform(f, k, T, u);
            CyclotomicInt nrm = w * w.conj();
            auto val = nrm.as_rational_integer();
            if (!val || *val != n) {
                r.k = k;
                r.u = u;
                r.norm_square = nrm.to_string();
                return r;
            }
        }
    r.bent = true;
    return r;
}

inline BentReport verify_bent_fourier(const FunctionTable& f) {
    if (!f.fourier) throw std::invalid_argument("verify_bent_fourier: no vector-space context");
    return verify_bent_fourier(f, LinearFunctional::trace_of(f.fourier->K));
}

// ---------------------------------------------------------------------------
// counting identities behind the construction
// ---------------------------------------------------------------------------

// predicted |(D_i z^(-1)) ∩ D_j| for z in D_k, with H elements as handles
// (0 = identity); q = |H| and N the block size of the partition
inline long long intersection_count_formula(int i, int j, int k, int q, int N) {
    if (q < 2 || N < 1) throw std::invalid_argument("intersection_count_formula: need q >= 2, N >= 1");
    auto d = [](int a, int b) { return a == b ? 1LL : 0LL; };
    long long n = N, qn = static_cast<long long>(q) * N;
    if (i != 0 && j != 0 && i != j) return (n - d(i, k)) * (n - d(j, k));
    if (i != 0 && j != 0) return (n - d(i, k)) * (n - d(i, k) - 1) + (qn - 2) * d(i, k);
    if (i != 0 || j != 0) {
        int nz = i != 0 ? i : j;
        return (n + 1 - d(0, k)) * (n - d(nz, k)) + d(nz, k);
    }
    return (n + 1 - d(0, k)) * (n - d(0, k)) + d(0, k) * qn;
}

// |(D_i z^(-1)) ∩ D_j| counted directly: the x in D_j with xz in D_i
inline long long intersection_count_bruteforce(const DSets& D, int z, int i, int j) {
    if (z == 0) throw std::invalid_argument("intersection_count_bruteforce: z must not be the identity");
    long long c = 0;
    for (int x : D.sets[j])
        if (D.which[D.G.mul(x, z)] == i) ++c;
    return c;
}

// sum of |(D_c z^(-1)) ∩ D_d| over the pairs with c d^(-1) = b; this is the
// number of solutions x of f(xz) f(x)^(-1) = b
inline long long goal_sum(const DSets& D, int z, int b) {
    if (z == 0) throw std::invalid_argument("goal_sum: z must not be the identity");
    long long s = 0;
    for (int dd = 0; dd < D.H.order(); ++dd)
        s += intersection_count_bruteforce(D, z, D.H.mul(b, dd), dd);
    return s;
}

// ---------------------------------------------------------------------------
// relative difference sets
// ---------------------------------------------------------------------------

struct RdsInstance {
    FiniteGroup ambient;  // G x H
    Subgroup forbidden;   // 1 x H
    std::vector<int> set;
};

// the graph {(x, f(x))} inside G x H
inline RdsInstance build_relative_difference_set(const FunctionTable& f) {
    f.check_total();
    FiniteGroup ambient = direct_product(f.domain, f.codomain);
    int nh = f.codomain.order();
    std::vector<int> forb(nh);
    for (int h = 0; h < nh; ++h) forb[h] = h;
    std::vector<int> set(f.domain.order());
    for (int x = 0; x < f.domain.order(); ++x) set[x] = x * nh + f(x);
    return RdsInstance{ambient, subgroup_from_members(ambient, std::move(forb)), std::move(set)};
}

struct RDSParams {
    long long m = 0, n = 0, k = 0, lambda = 0;  // (m, n, k, lambda): |ambient| = mn, |forbidden| = n

    bool counting_identity_holds() const { return k * (k - 1) == lambda * (m * n - n); }
};

struct RdsFailure {
    int element = -1;       // first element with a wrong difference count
    long long count = 0;
    long long expected = 0;
    bool in_forbidden = false;
};

// difference multiset test: every element outside the forbidden subgroup hit
// exactly lambda times, nonidentity forbidden elements never hit
inline std::variant<RDSParams, RdsFailure> verify_rds(std::span<const int> set,
                                                      const FiniteGroup& ambient,
                                                      const Subgroup& forbidden) {
    if (!forbidden.parent.same_as(ambient))
        throw std::invalid_argument("verify_rds: forbidden subgroup of a different group");
    if (set.size() > kMaxExhaustiveOrder)
        throw std::invalid_argument("verify_rds: set size above exhaustive limit 4096");
    std::vector<long long> count(ambient.order(), 0);
    for (int d1 : set)
        for (int d2 : set)
            if (d1 != d2) ++count[ambient.mul(d1, ambient.inv(d2))];
    long long k = static_cast<long long>(set.size());
    long long n = forbidden.order();
    long long m = ambient.order() / n;
    long long denom = static_cast<long long>(ambient.order()) - n;
    long long lambda = denom > 0 ? k * (k - 1) / denom : 0;
    for (int g = 0; g < ambient.order(); ++g) {
        if (forbidden.contains(g)) {
            if (g != 0 && count[g] != 0) return RdsFailure{g, count[g], 0, true};
        } else if (count[g] != lambda) {
            return RdsFailure{g, count[g], lambda, false};
        }
    }
    return RDSParams{m, n, k, lambda};
}

// ---------------------------------------------------------------------------
// association schemes
// ---------------------------------------------------------------------------

struct SchemeReport {
    // class 0 is the diagonal; class t >= 1 is the pair set
    // {(x, y) : x y^(-1) in C_t} for the element class C_t
    std::vector<int> class_of;           // per group element: its class (identity -> 0)
    std::vector<long long> class_size;   // |C_t| (class 0 has size 1)
    std::vector<int> class_label;        // H element that produced class t (t >= 1), -1 for diagonal
    std::vector<std::vector<std::vector<long long>>> intersection_numbers;  // [k][i][j]
    bool commutative = false;
};

struct SchemeFailure {
    std::string what;
    int i = -1, j = -1;   // class pair being tested
    int g1 = -1, g2 = -1; // elements of one class with different path counts
    long long count1 = 0, count2 = 0;
};

// classes: diagonal, plus {(x, y) : x y^(-1) in D_i \ {1}} per i in H. The
// path count #{w : (x, w) in R_i, (w, y) in R_j} depends only on g = x y^(-1);
// the scheme condition is that it is constant on every class, and that the
// inverse image of every class is a class.
inline std::variant<SchemeReport, SchemeFailure> verify_association_scheme(const DSets& D) {
    const FiniteGroup& G = D.G;
    int n = G.order();
    if (n > kMaxExhaustiveOrder)
        throw std::invalid_argument("verify_association_scheme: |G| above exhaustive limit 4096");
    SchemeReport rep;
    rep.class_of.assign(n, 0);
    rep.class_label.push_back(-1);
    std::vector<std::vector<int>> classes{{0}};
    for (int i = 0; i < D.H.order(); ++i) {
        std::vector<int> c;
        for (int x : D.sets[i])
            if (x != 0) c.push_back(x);
        if (c.empty()) continue;
        int t = static_cast<int>(classes.size());
        for (int x : c) rep.class_of[x] = t;
        rep.class_label.push_back(i);
        classes.push_back(std::move(c));
    }
    int nc = static_cast<int>(classes.size());
    for (int t = 0; t < nc; ++t) rep.class_size.push_back(static_cast<long long>(classes[t].size()));

    // transpose closure: inverses of a class form a class
    for (int t = 0; t < nc; ++t) {
        int target = rep.class_of[G.inv(classes[t][0])];
        for (int x : classes[t])
            if (rep.class_of[G.inv(x)] != target)
                return SchemeFailure{"class inverses split across classes", t, -1, classes[t][0], x};
    }

    // path counts nu_ij(g) = #{a in C_i : a^(-1) g in C_j}, constant per class
    rep.intersection_numbers.assign(
        nc, std::vector<std::vector<long long>>(nc, std::vector<long long>(nc, 0)));
    std::vector<long long> nu(n);
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) {
            std::fill(nu.begin(), nu.end(), 0);
            for (int a : classes[i]) {
                int ai = G.inv(a);
                for (int g = 0; g < n; ++g)
                    if (rep.class_of[G.mul(ai, g)] == j) ++nu[g];
            }
            for (int t = 0; t < nc; ++t) {
                long long want = nu[classes[t][0]];
                for (int g : classes[t])
                    if (nu[g] != want)
                        return SchemeFailure{"path count not constant on a class", i, j,
                                             classes[t][0], g, want, nu[g]};
                rep.intersection_numbers[t][i][j] = want;
            }
        }
    rep.commutative = true;
    for (int t = 0; t < nc && rep.commutative; ++t)
        for (int i = 0; i < nc && rep.commutative; ++i)
            for (int j = 0; j < nc; ++j)
                if (rep.intersection_numbers[t][i][j] != rep.intersection_numbers[t][j][i]) {
                    rep.commutative = false;
                    break;
                }
    return rep;
}

// ---------------------------------------------------------------------------
// counting bounds
// ---------------------------------------------------------------------------

struct InequivalenceBounds {
    BigInt binomial;              // C(p^m + 1, p^(m-1))
    long long rds_bound_exponent; // p^(m-1) - 9m^2
    bool rds_bound_vacuous;       // exponent < 0
    BigInt rds_bound;             // p^(exponent) when not vacuous
    BigInt affine_quotient;       // floor(binomial / (2 (p^m+1) p^m (p^m-1)^2 m))
};

inline InequivalenceBounds inequivalence_bounds(int p, int m, int s) {
    if (!is_prime(p)) throw std::invalid_argument("inequivalence_bounds: p must be prime");
    if (m < 1 || s < 1 || s > m) throw std::invalid_argument("inequivalence_bounds: need m >= s >= 1");
    long long pm = 1;
    for (int i = 0; i < m; ++i) {
        pm *= p;
        if (pm > 4096) throw std::invalid_argument("inequivalence_bounds: p^m above supported limit 4096");
    }
    long long pm1 = pm / p;  // p^(m-1)
    InequivalenceBounds b;
    b.binomial = BigInt::binomial(static_cast<std::uint64_t>(pm + 1), static_cast<std::uint64_t>(pm1));
    b.rds_bound_exponent = pm1 - 9LL * m * m;
    b.rds_bound_vacuous = b.rds_bound_exponent < 0;
    if (!b.rds_bound_vacuous)
        b.rds_bound = BigInt::pow(BigInt(p), static_cast<std::uint64_t>(b.rds_bound_exponent));
    std::uint64_t denom = 2ULL * static_cast<std::uint64_t>(pm + 1) * static_cast<std::uint64_t>(pm) *
                          static_cast<std::uint64_t>(pm - 1) * static_cast<std::uint64_t>(pm - 1) *
                          static_cast<std::uint64_t>(m);
    b.affine_quotient = b.binomial.divmod_u64(denom);
    return b;
}

}  // namespace psbent
