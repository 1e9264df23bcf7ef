#pragma once

// The two bent-function constructions and their supporting pieces: D-set
// partitions of a group from a partial-spread partition, the function that is
// constant on each D-set, and the slope-composition construction f(x, y) =
// g(m) with y = m*x over a prequasifield with a balanced g.

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "psbent/field.hpp"
#include "psbent/function_table.hpp"
#include "psbent/group.hpp"
#include "psbent/spread.hpp"

namespace psbent {

// partition of G into sets D_i indexed by the elements of H; which[x] is the
// H element whose set contains x
struct DSets {
    FiniteGroup G;
    FiniteGroup H;
    std::vector<int> which;
    std::vector<std::vector<int>> sets;

    int q() const { return H.order(); }
};

inline DSets d_sets_from_labels(const FiniteGroup& G, const FiniteGroup& H, std::vector<int> which) {
    if (static_cast<int>(which.size()) != G.order())
        throw std::invalid_argument("d_sets_from_labels: label vector does not cover G");
    std::vector<std::vector<int>> sets(H.order());
    for (int x = 0; x < G.order(); ++x) {
        if (which[x] < 0 || which[x] >= H.order())
            throw std::invalid_argument("d_sets_from_labels: label out of range");
        sets[which[x]].push_back(x);
    }
    return DSets{G, H, std::move(which), std::move(sets)};
}

// D_i = (union of block i) minus the identity for i != 1, D_1 = the rest;
// the output sizes are checked against |D_i| = N(qN-1), |D_1| = qN^2 + qN - N
inline DSets build_d_sets(const PartialSpreadPartition& P) {
    std::vector<int> which(P.G.order(), 0);
    for (std::size_t t = 0; t < P.blocks.size(); ++t)
        for (int s : P.blocks[t])
            for (int x : P.sigma[s].members)
                if (x != 0) which[x] = static_cast<int>(t) + 1;
    DSets d = d_sets_from_labels(P.G, P.H, std::move(which));
    long long q = P.q, N = P.N;
    for (int i = 1; i < P.H.order(); ++i)
        if (static_cast<long long>(d.sets[i].size()) != N * (q * N - 1))
            throw std::logic_error("build_d_sets: |D_i| != N(qN-1)");
    if (static_cast<long long>(d.sets[0].size()) != q * N * N + q * N - N)
        throw std::logic_error("build_d_sets: |D_1| != qN^2 + qN - N");
    return d;
}

// f(x) = i for x in D_i
inline FunctionTable ps_bent(const PartialSpreadPartition& P) {
    DSets d = build_d_sets(P);
    FunctionTable f{P.G, P.H, std::move(d.which), std::nullopt};
    f.check_total();
    return f;
}

// the fibers of f as a D-set partition
inline DSets d_sets_from_function(const FunctionTable& f) {
    f.check_total();
    return d_sets_from_labels(f.domain, f.codomain, f.values);
}

enum class BalancedKind { round_robin, seeded_shuffle };

// a balanced value table: every codomain element hit domain/codomain times;
// round_robin deals values in order, seeded_shuffle applies a deterministic
// Fisher-Yates pass on top
inline std::vector<int> balanced_values(int domain_size, int codomain_size, BalancedKind kind,
                                        std::uint64_t seed = 0) {
    if (codomain_size < 1 || domain_size < 1 || domain_size % codomain_size != 0)
        throw std::invalid_argument("balanced_values: codomain size must divide domain size");
    std::vector<int> v(domain_size);
    for (int i = 0; i < domain_size; ++i) v[i] = i % codomain_size;
    if (kind == BalancedKind::seeded_shuffle) {
        std::mt19937_64 rng(seed);
        for (int i = domain_size - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(v[i], v[j]);
        }
    }
    return v;
}

inline FunctionTable balanced_function(const Field& F, const Field& K, BalancedKind kind,
                                       std::uint64_t seed = 0) {
    FunctionTable g{elementary_abelian_group(F.p(), F.m()),
                    elementary_abelian_group(K.p(), K.m()),
                    balanced_values(F.q(), K.q(), kind, seed),
                    std::nullopt};
    return g;
}

// K-coordinates for every point of V = F + F, via a greedy K-basis of F
// under the given embedding; alt_basis picks the basis greedily from the top
// of the element range instead, giving a genuinely different dot product
inline FourierContext fourier_context(const Field& F, const SubfieldEmbedding& K_in_F,
                                      bool alt_basis = false) {
    const Field& K = K_in_F.sub;
    if (!(K_in_F.big == F)) throw std::invalid_argument("fourier_context: embedding targets a different field");
    int s = F.m() / K.m();
    // grow a K-linear span until it covers F, recording coordinates
    std::vector<int> coord_of(F.q(), -1);
    std::vector<std::vector<int>> fcoords(F.q());
    std::vector<int> basis;
    fcoords[0] = {};
    coord_of[0] = 0;
    int covered = 1;
    int candidate = alt_basis ? F.q() - 1 : 1;
    int step = alt_basis ? -1 : 1;
    while (static_cast<int>(basis.size()) < s) {
        while (coord_of[candidate] >= 0) candidate += step;
        int b = candidate;
        basis.push_back(b);
        // extend every known element by k*b for all scalars k
        std::vector<int> known;
        for (int x = 0; x < F.q(); ++x)
            if (coord_of[x] >= 0) known.push_back(x);
        for (int x : known)
            for (int k = 1; k < K.q(); ++k) {
                int y = F.add(x, F.mul(K_in_F(k), b));
                if (coord_of[y] >= 0)
                    throw std::logic_error("fourier_context: basis candidate already in span");
                coord_of[y] = 0;
                fcoords[y] = fcoords[x];
                fcoords[y].resize(basis.size() - 1, 0);
                fcoords[y].push_back(k);
                ++covered;
            }
    }
    if (covered != F.q()) throw std::logic_error("fourier_context: basis does not span F");
    for (int x = 0; x < F.q(); ++x) fcoords[x].resize(s, 0);

    int q = F.q();
    FourierContext ctx{K, std::vector<std::vector<int>>(static_cast<std::size_t>(q) * q)};
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            std::vector<int> c = fcoords[x];
            c.insert(c.end(), fcoords[y].begin(), fcoords[y].end());
            ctx.coords[static_cast<std::size_t>(x) * q + y] = std::move(c);
        }
    return ctx;
}

// f(0, y) = g(0); f(x, y) = g(m) with y = m*x for x != 0. Requires the
// embedded field to lie in the kernel of the prequasifield and g balanced.
inline FunctionTable qf_bent(const Prequasifield& Q, const SubfieldEmbedding& K_in_F,
                             std::span<const int> g) {
    const Field& F = Q.field();
    const Field& K = K_in_F.sub;
    if (static_cast<int>(g.size()) != F.q())
        throw std::invalid_argument("qf_bent: g must be defined on all of F");
    for (int v : g)
        if (v < 0 || v >= K.q()) throw std::invalid_argument("qf_bent: g value outside K");
    std::vector<long long> fiber(K.q(), 0);
    for (int v : g) ++fiber[v];
    for (long long c : fiber)
        if (c != F.q() / K.q()) throw std::invalid_argument("qf_bent: g is not balanced");
    if (!kernel_check(Q, K_in_F))
        throw std::invalid_argument("qf_bent: embedded field is not in the kernel");

    int q = F.q();
    FiniteGroup V = spread_ambient_group(F);
    std::vector<int> values(static_cast<std::size_t>(q) * q);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            values[static_cast<std::size_t>(x) * q + y] = x == 0 ? g[0] : g[Q.solve_slope(x, y)];
    FunctionTable f{std::move(V), elementary_abelian_group(K.p(), K.m()), std::move(values),
                    fourier_context(F, K_in_F)};
    f.check_total();
    return f;
}

inline FunctionTable qf_bent(const Prequasifield& Q, const SubfieldEmbedding& K_in_F,
                             const FunctionTable& g) {
    return qf_bent(Q, K_in_F, std::span<const int>(g.values));
}

}  // namespace psbent
