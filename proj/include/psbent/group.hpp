#pragma once

// Finite groups as explicit element lists with Cayley tables. Element 0 is
// always the identity. Tables are materialized up to order 4096; direct
// products beyond that keep the factor structure and multiply componentwise.
// Construction validates the Latin-square, identity, inverse and
// associativity laws (associativity exhaustively up to order 128, via a
// generator-based Light test plus random triples beyond).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "psbent/field.hpp"

namespace psbent {

class FiniteGroup {
public:
    static constexpr int kMaxTableOrder = 4096;
    static constexpr int kMaxOrder = 65536;

    int order() const { return impl_->n; }
    const std::string& tag() const { return impl_->tag; }

    int mul(int a, int b) const {
        const Impl& im = *impl_;
        if (!im.table.empty()) return im.table[static_cast<std::size_t>(a) * im.n + b];
        int rb = im.right->order();
        return im.left->mul(a / rb, b / rb) * rb + im.right->mul(a % rb, b % rb);
    }

    int inv(int a) const { return impl_->inv[a]; }

    bool is_product() const { return impl_->left != nullptr; }
    const FiniteGroup& left() const { return *impl_->left; }
    const FiniteGroup& right() const { return *impl_->right; }
    bool has_table() const { return !impl_->table.empty(); }

    // multiplicative order of an element
    int element_order(int a) const {
        int x = a, k = 1;
        while (x != 0) { x = mul(x, a); ++k; }
        return k;
    }

    bool same_as(const FiniteGroup& o) const { return impl_ == o.impl_; }

    // structural: orders, tables/factors and tags all agree
    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        if (a.impl_ == b.impl_) return true;
        if (a.order() != b.order()) return false;
        for (int x = 0; x < a.order(); ++x)
            for (int y = 0; y < a.order(); ++y)
                if (a.mul(x, y) != b.mul(x, y)) return false;
        return true;
    }

    static FiniteGroup from_table(const std::vector<std::vector<int>>& table, std::string tag = "") {
        int n = static_cast<int>(table.size());
        if (n == 0 || n > kMaxTableOrder)
            throw std::invalid_argument("FiniteGroup: order must be in 1..4096");
        std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a) {
            if (static_cast<int>(table[a].size()) != n)
                throw std::invalid_argument("FiniteGroup: table is not square");
            for (int b = 0; b < n; ++b) {
                int v = table[a][b];
                if (v < 0 || v >= n) throw std::invalid_argument("FiniteGroup: table entry out of range");
                flat[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(v);
            }
        }
        return from_flat_table(n, std::move(flat), std::move(tag));
    }

    static FiniteGroup from_flat_table(int n, std::vector<std::uint16_t> flat, std::string tag = "") {
        auto impl = std::make_shared<Impl>();
        impl->n = n;
        impl->table = std::move(flat);
        impl->tag = std::move(tag);
        validate_table(*impl);
        fill_inverses(*impl);
        FiniteGroup g;
        g.impl_ = std::move(impl);
        return g;
    }

    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b) {
        long long n = static_cast<long long>(a.order()) * b.order();
        if (n > kMaxOrder) throw std::invalid_argument("direct_product: order above supported limit 65536");
        if (n <= kMaxTableOrder) {
            int nb = b.order();
            std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    flat[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(
                        a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
            FiniteGroup g = from_flat_table(static_cast<int>(n), std::move(flat), "product");
            g.impl_->left = std::make_shared<FiniteGroup>(a);
            g.impl_->right = std::make_shared<FiniteGroup>(b);
            return g;
        }
        auto impl = std::make_shared<Impl>();
        impl->n = static_cast<int>(n);
        impl->tag = "product";
        impl->left = std::make_shared<FiniteGroup>(a);
        impl->right = std::make_shared<FiniteGroup>(b);
        impl->inv.resize(n);
        int nb = b.order();
        for (int x = 0; x < n; ++x)
            impl->inv[x] = static_cast<std::uint16_t>(a.inv(x / nb) * nb + b.inv(x % nb));
        FiniteGroup g;
        g.impl_ = std::move(impl);
        return g;
    }

private:
    struct Impl {
        int n = 0;
        std::vector<std::uint16_t> table;  // empty in product mode
        std::vector<std::uint16_t> inv;
        std::shared_ptr<const FiniteGroup> left, right;
        std::string tag;
    };
    std::shared_ptr<Impl> impl_;

    static void validate_table(const Impl& im) {
        int n = im.n;
        auto at = [&](int a, int b) { return im.table[static_cast<std::size_t>(a) * n + b]; };
        for (int a = 0; a < n; ++a) {
            if (at(0, a) != a || at(a, 0) != a)
                throw std::invalid_argument("FiniteGroup: element 0 is not an identity");
            std::vector<bool> row(n, false), col(n, false);
            for (int b = 0; b < n; ++b) {
                if (row[at(a, b)]) throw std::invalid_argument("FiniteGroup: repeated entry in row");
                row[at(a, b)] = true;
                if (col[at(b, a)]) throw std::invalid_argument("FiniteGroup: repeated entry in column");
                col[at(b, a)] = true;
            }
        }
        if (n <= 128) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (at(at(a, b), c) != at(a, at(b, c)))
                            throw std::invalid_argument("FiniteGroup: multiplication is not associative");
            return;
        }
        // Light's associativity test over a generating set, then random triples
        std::vector<int> gens;
        std::vector<bool> closed(n, false);
        closed[0] = true;
        int covered = 1;
        while (covered < n) {
            int g = 0;
            while (closed[g]) ++g;
            gens.push_back(g);
            std::vector<int> frontier{g};
            closed[g] = true;
            ++covered;
            while (!frontier.empty()) {
                int x = frontier.back();
                frontier.pop_back();
                for (int y = 0; y < n; ++y) {
                    if (!closed[y]) continue;
                    for (int z : {at(x, y), at(y, x)}) {
                        if (!closed[z]) {
                            closed[z] = true;
                            ++covered;
                            frontier.push_back(z);
                        }
                    }
                }
            }
        }
        for (int g : gens)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (at(at(x, g), y) != at(x, at(g, y)))
                        throw std::invalid_argument("FiniteGroup: multiplication is not associative");
        std::mt19937 rng(12345);
        for (int t = 0; t < 2000; ++t) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n), c = static_cast<int>(rng() % n);
            if (at(at(a, b), c) != at(a, at(b, c)))
                throw std::invalid_argument("FiniteGroup: multiplication is not associative");
        }
    }

    static void fill_inverses(Impl& im) {
        int n = im.n;
        im.inv.resize(n);
        for (int a = 0; a < n; ++a) {
            int b = 0;
            while (im.table[static_cast<std::size_t>(a) * n + b] != 0) ++b;
            if (im.table[static_cast<std::size_t>(b) * n + a] != 0)
                throw std::invalid_argument("FiniteGroup: one-sided inverse");
            im.inv[a] = static_cast<std::uint16_t>(b);
        }
    }
};

// ---------------------------------------------------------------------------
// catalog of small groups with fixed element orderings
// ---------------------------------------------------------------------------

inline FiniteGroup cyclic_group(int n) {
    if (n < 1 || n > FiniteGroup::kMaxTableOrder)
        throw std::invalid_argument("cyclic_group: order must be in 1..4096");
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            flat[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>((a + b) % n);
    return FiniteGroup::from_flat_table(n, std::move(flat), "cyclic:" + std::to_string(n));
}

// Z_p^k with element handle = base-p digit vector, least significant digit first
inline FiniteGroup elementary_abelian_group(int p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("elementary_abelian_group: p must be prime");
    if (k < 1) throw std::invalid_argument("elementary_abelian_group: k must be >= 1");
    long long n = 1;
    for (int i = 0; i < k; ++i) {
        n *= p;
        if (n > FiniteGroup::kMaxTableOrder)
            throw std::invalid_argument("elementary_abelian_group: order above supported limit 4096");
    }
    int ni = static_cast<int>(n);
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(ni) * ni);
    for (int a = 0; a < ni; ++a)
        for (int b = 0; b < ni; ++b) {
            int x = a, y = b, s = 0, w = 1;
            for (int i = 0; i < k; ++i) {
                s += ((x % p) + (y % p)) % p * w;
                x /= p;
                y /= p;
                w *= p;
            }
            flat[static_cast<std::size_t>(a) * ni + b] = static_cast<std::uint16_t>(s);
        }
    return FiniteGroup::from_flat_table(
        ni, std::move(flat), "elementary_abelian:" + std::to_string(p) + "," + std::to_string(k));
}

// dihedral group of the given (even) order; element s^a r^b has handle a*n + b
// where n = order/2, r the rotation, s a reflection
inline FiniteGroup dihedral_group(int order) {
    if (order < 2 || order % 2 != 0)
        throw std::invalid_argument("dihedral_group: order must be even and >= 2");
    int n = order / 2;
    std::vector<std::uint16_t> flat(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < n; ++d) {
                    // s^a r^b s^c r^d = s^(a+c) r^((-1)^c b + d)
                    int e = (a + c) % 2;
                    int f = ((c ? n - b : b) + d) % n;
                    flat[static_cast<std::size_t>(a * n + b) * order + (c * n + d)] =
                        static_cast<std::uint16_t>(e * n + f);
                }
    return FiniteGroup::from_flat_table(order, std::move(flat), "dihedral:" + std::to_string(order));
}

// quaternion group {1, -1, i, -i, j, -j, k, -k} in that element order
inline FiniteGroup quaternion_group() {
    // basis products: table over {1, i, j, k} with sign
    static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ba = a / 2, sa = a % 2 ? -1 : 1;
            int bb = b / 2, sb = b % 2 ? -1 : 1;
            int bc = basis[ba][bb];
            int sc = sa * sb * sign[ba][bb];
            t[a][b] = bc * 2 + (sc < 0 ? 1 : 0);
        }
    return FiniteGroup::from_table(t, "quaternion8");
}

// symmetric group on 3 points; elements are the permutations of (0,1,2) in
// lexicographic one-line order, composition (f*g)(x) = f(g(x))
inline FiniteGroup symmetric3_group() {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const int* im) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == im[0] && perms[i][1] == im[1] && perms[i][2] == im[2]) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int im[3];
            for (int x = 0; x < 3; ++x) im[x] = perms[a][perms[b][x]];
            t[a][b] = find(im);
        }
    return FiniteGroup::from_table(t, "symmetric3");
}

// componentwise product; element (a, b) has handle a*|B| + b
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    return FiniteGroup::product(a, b);
}

// parse a catalog name: "cyclic:8", "elementary_abelian:2,3" (alias "ea:2,3"),
// "dihedral:8", "quaternion8", "symmetric3"; '*' separates direct factors
inline FiniteGroup catalog_group(const std::string& spec) {
    auto star = spec.find('*');
    if (star != std::string::npos)
        return direct_product(catalog_group(spec.substr(0, star)), catalog_group(spec.substr(star + 1)));
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            std::string tok = rest.substr(pos, comma - pos);
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("catalog_group: bad parameter " + tok);
            }
            if (used != tok.size()) throw std::invalid_argument("catalog_group: bad parameter " + tok);
            args.push_back(v);
            pos = comma + 1;
        }
    }
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw std::invalid_argument("catalog_group: wrong parameter count for " + name);
    };
    if (name == "cyclic") { want(1); return cyclic_group(args[0]); }
    if (name == "elementary_abelian" || name == "ea") { want(2); return elementary_abelian_group(args[0], args[1]); }
    if (name == "dihedral") { want(1); return dihedral_group(args[0]); }
    if (name == "quaternion8") { want(0); return quaternion_group(); }
    if (name == "symmetric3") { want(0); return symmetric3_group(); }
    throw std::invalid_argument("catalog_group: unknown group name " + name);
}

// ---------------------------------------------------------------------------
// subgroups
// ---------------------------------------------------------------------------

struct Subgroup {
    FiniteGroup parent;
    std::vector<int> members;  // sorted, always contains 0

    bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }
    int order() const { return static_cast<int>(members.size()); }
};

inline Subgroup subgroup_from_members(const FiniteGroup& G, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members.front() < 0 || members.back() >= G.order())
        throw std::invalid_argument("subgroup_from_members: member out of range");
    if (!std::binary_search(members.begin(), members.end(), 0))
        throw std::invalid_argument("subgroup_from_members: identity missing");
    for (int a : members) {
        if (!std::binary_search(members.begin(), members.end(), G.inv(a)))
            throw std::invalid_argument("subgroup_from_members: not closed under inverse");
        for (int b : members)
            if (!std::binary_search(members.begin(), members.end(), G.mul(a, b)))
                throw std::invalid_argument("subgroup_from_members: not closed under multiplication");
    }
    return Subgroup{G, std::move(members)};
}

inline bool pairwise_trivial_intersections(std::span<const Subgroup> sigma) {
    for (std::size_t i = 1; i < sigma.size(); ++i)
        if (!sigma[i].parent.same_as(sigma[0].parent))
            throw std::invalid_argument("pairwise_trivial_intersections: mixed parent groups");
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j) {
            std::size_t common = 0;
            std::size_t a = 0, b = 0;
            const auto& x = sigma[i].members;
            const auto& y = sigma[j].members;
            while (a < x.size() && b < y.size()) {
                if (x[a] == y[b]) { ++common; ++a; ++b; }
                else if (x[a] < y[b]) ++a;
                else ++b;
            }
            if (common != 1) return false;
        }
    return true;
}

}  // namespace psbent
