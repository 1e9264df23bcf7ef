#pragma once

// Explicit function tables between finite groups. When the domain is a vector
// space over a field K (needed for Fourier analysis), a FourierContext carries
// K together with the K-coordinates of every domain point; the codomain is
// then the additive group of K and values are K element handles.

#include <optional>
#include <stdexcept>
#include <vector>

#include "psbent/field.hpp"
#include "psbent/group.hpp"

namespace psbent {

struct FourierContext {
    Field K;
    std::vector<std::vector<int>> coords;  // per domain point, K-coordinates

    int dim() const { return coords.empty() ? 0 : static_cast<int>(coords[0].size()); }

    int dot(int u, int v) const {
        return psbent::dot(K, coords[u], coords[v]);
    }
};

struct FunctionTable {
    FiniteGroup domain;
    FiniteGroup codomain;
    std::vector<int> values;
    std::optional<FourierContext> fourier;

    int operator()(int x) const { return values[x]; }

    void check_total() const {
        if (static_cast<int>(values.size()) != domain.order())
            throw std::invalid_argument("FunctionTable: value table does not cover the domain");
        for (int v : values)
            if (v < 0 || v >= codomain.order())
                throw std::invalid_argument("FunctionTable: value out of codomain range");
    }

    // a Fourier context only makes sense when the codomain is the additive
    // group of K with matching element handles
    void check_fourier_consistent() const {
        if (!fourier) return;
        const Field& K = fourier->K;
        if (codomain.order() != K.q() ||
            !(codomain == elementary_abelian_group(K.p(), K.m())))
            throw std::invalid_argument("FunctionTable: codomain does not match the Fourier field");
        if (static_cast<int>(fourier->coords.size()) != domain.order())
            throw std::invalid_argument("FunctionTable: coordinate table does not cover the domain");
        std::size_t dim = fourier->coords.empty() ? 0 : fourier->coords[0].size();
        for (const auto& row : fourier->coords) {
            if (row.size() != dim)
                throw std::invalid_argument("FunctionTable: ragged coordinate table");
            for (int c : row)
                if (c < 0 || c >= K.q())
                    throw std::invalid_argument("FunctionTable: coordinate out of field range");
        }
    }
};

// distribution of x -> f(xz) f(x)^(-1) over the whole domain, z != identity
inline std::vector<long long> coset_difference_histogram(const FunctionTable& f, int z) {
    if (z == 0) throw std::invalid_argument("coset_difference_histogram: z must not be the identity");
    f.check_total();
    const FiniteGroup& G = f.domain;
    const FiniteGroup& H = f.codomain;
    std::vector<long long> hist(H.order(), 0);
    for (int x = 0; x < G.order(); ++x)
        ++hist[H.mul(f(G.mul(x, z)), H.inv(f(x)))];
    return hist;
}

// every codomain value attained equally often
inline bool is_balanced(const FunctionTable& f) {
    f.check_total();
    if (f.domain.order() % f.codomain.order() != 0) return false;
    std::vector<long long> count(f.codomain.order(), 0);
    for (int v : f.values) ++count[v];
    long long want = f.domain.order() / f.codomain.order();
    for (long long c : count)
        if (c != want) return false;
    return true;
}

}  // namespace psbent
