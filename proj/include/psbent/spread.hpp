#pragma once

// Prequasifields (F, +, *), the spreads of F+F they induce, and partial-spread
// partitions labeled by the nonidentity elements of a group H.
//
// A prequasifield is validated against its two axioms: a*(x+y) = a*x + a*y,
// and z -> a*z - b*z bijective for a != b. Validation reports the first
// violated axiom with witnesses instead of throwing. The spread of F+F
// consists of the component x = 0 (slope "infinity") and the graphs
// {(x, m*x)} for every slope m; points (x, y) are handles x*|F| + y.

#include <algorithm>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "psbent/field.hpp"
#include "psbent/group.hpp"

namespace psbent {

struct PrequasifieldViolation {
    enum class Kind { table_shape, left_distributivity, difference_bijectivity, zero_product };
    Kind kind;
    int a = -1, b = -1, x = -1, y = -1;

    std::string message() const {
        switch (kind) {
            case Kind::table_shape:
                return "star table is not |F| x |F| over F";
            case Kind::left_distributivity:
                return "a*(x+y) != a*x + a*y at a=" + std::to_string(a) + " x=" + std::to_string(x) +
                       " y=" + std::to_string(y);
            case Kind::difference_bijectivity:
                return "z -> a*z - b*z not bijective at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                       " (collision at z=" + std::to_string(x) + ", z'=" + std::to_string(y) + ")";
            case Kind::zero_product:
                return "a*0 != 0 at a=" + std::to_string(a);
        }
        return "";
    }
};

class Prequasifield {
public:
    const Field& field() const { return F_; }
    const std::string& tag() const { return tag_; }

    int star(int a, int x) const { return star_[static_cast<std::size_t>(a) * F_.q() + x]; }

    // the unique m with m*x = y, for x != 0
    int solve_slope(int x, int y) const {
        if (x == 0) throw std::invalid_argument("solve_slope: x must be nonzero");
        return slope_inv_[static_cast<std::size_t>(x) * F_.q() + y];
    }

    const std::vector<int>& star_table() const { return star_; }

private:
    friend std::variant<Prequasifield, PrequasifieldViolation> validate_prequasifield(
        const Field&, const std::vector<std::vector<int>>&, std::string);

    Field F_;
    std::vector<int> star_;       // q*q, star_[a*q+x] = a*x
    std::vector<int> slope_inv_;  // q*q, for x != 0: slope_inv_[x*q+y] = m with m*x = y
    std::string tag_;

    Prequasifield(Field F, std::vector<int> star, std::string tag)
        : F_(std::move(F)), star_(std::move(star)), tag_(std::move(tag)) {
        int q = F_.q();
        slope_inv_.assign(static_cast<std::size_t>(q) * q, 0);
        for (int x = 1; x < q; ++x)
            for (int m = 0; m < q; ++m)
                slope_inv_[static_cast<std::size_t>(x) * q + star_[static_cast<std::size_t>(m) * q + x]] = m;
    }
};

using PrequasifieldResult = std::variant<Prequasifield, PrequasifieldViolation>;

inline PrequasifieldResult validate_prequasifield(const Field& F,
                                                  const std::vector<std::vector<int>>& star,
                                                  std::string tag = "") {
    int q = F.q();
    if (static_cast<int>(star.size()) != q)
        return PrequasifieldViolation{PrequasifieldViolation::Kind::table_shape};
    for (const auto& row : star) {
        if (static_cast<int>(row.size()) != q)
            return PrequasifieldViolation{PrequasifieldViolation::Kind::table_shape};
        for (int v : row)
            if (v < 0 || v >= q) return PrequasifieldViolation{PrequasifieldViolation::Kind::table_shape};
    }
    for (int a = 0; a < q; ++a)
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y)
                if (star[a][F.add(x, y)] != F.add(star[a][x], star[a][y]))
                    return PrequasifieldViolation{
                        PrequasifieldViolation::Kind::left_distributivity, a, -1, x, y};
    for (int a = 0; a < q; ++a)
        if (star[a][0] != 0)
            return PrequasifieldViolation{PrequasifieldViolation::Kind::zero_product, a};
    std::vector<int> seen_at(q, -1);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            for (int z = 0; z < q; ++z) {
                int d = F.sub(star[a][z], star[b][z]);
                if (seen_at[d] >= 0) {
                    int z0 = seen_at[d];
                    for (int& s : seen_at) s = -1;
                    return PrequasifieldViolation{
                        PrequasifieldViolation::Kind::difference_bijectivity, a, b, z0, z};
                }
                seen_at[d] = z;
            }
            for (int& s : seen_at) s = -1;
        }
    std::vector<int> flat(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int x = 0; x < q; ++x) flat[static_cast<std::size_t>(a) * q + x] = star[a][x];
    return Prequasifield(F, std::move(flat), std::move(tag));
}

// the field itself, a*x = ax
inline Prequasifield field_prequasifield(const Field& F) {
    std::vector<std::vector<int>> star(F.q(), std::vector<int>(F.q()));
    for (int a = 0; a < F.q(); ++a)
        for (int x = 0; x < F.q(); ++x) star[a][x] = F.mul(a, x);
    auto r = validate_prequasifield(F, star,
                                    "field:" + std::to_string(F.p()) + "," + std::to_string(F.m()));
    return std::get<Prequasifield>(std::move(r));
}

// built-in nondesarguesian example of order 9: m*x = m x when m is a square
// (0 counts as a square), m*x = m x^3 otherwise; kernel contains GF(3) but
// not GF(9)
inline Prequasifield twisted9_prequasifield() {
    Field F = Field::make(3, 2);
    std::vector<bool> square(9, false);
    for (int y = 0; y < 9; ++y) square[F.mul(y, y)] = true;
    std::vector<std::vector<int>> star(9, std::vector<int>(9));
    for (int m = 0; m < 9; ++m)
        for (int x = 0; x < 9; ++x)
            star[m][x] = square[m] ? F.mul(m, x) : F.mul(m, F.pow(x, 3));
    auto r = validate_prequasifield(F, star, "twisted9");
    return std::get<Prequasifield>(std::move(r));
}

// every embedded scalar k satisfies m*(kx) = k(m*x)
inline bool kernel_check(const Prequasifield& Q, const SubfieldEmbedding& K_in_F) {
    const Field& F = Q.field();
    if (!(K_in_F.big == F)) throw std::invalid_argument("kernel_check: embedding targets a different field");
    for (int k = 0; k < K_in_F.sub.q(); ++k) {
        int ke = K_in_F(k);
        for (int m = 0; m < F.q(); ++m)
            for (int x = 0; x < F.q(); ++x)
                if (Q.star(m, F.mul(ke, x)) != F.mul(ke, Q.star(m, x))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// spreads of V = F + F
// ---------------------------------------------------------------------------

struct Spread {
    static constexpr int kInfinitySlope = -1;

    Field F;
    FiniteGroup ambient;               // additive group of F+F, point (x,y) = x*|F| + y
    std::vector<Subgroup> components;  // slopes 0..q-1 then the x=0 component

    // slope of a component by position: m for 0..q-1, kInfinitySlope for the last
    int slope(int component_index) const {
        return component_index == F.q() ? kInfinitySlope : component_index;
    }
};

// the additive group of F + F with point handles (x, y) -> x*|F| + y
inline FiniteGroup spread_ambient_group(const Field& F) {
    long long n = static_cast<long long>(F.q()) * F.q();
    if (n <= FiniteGroup::kMaxTableOrder) return elementary_abelian_group(F.p(), 2 * F.m());
    return direct_product(elementary_abelian_group(F.p(), F.m()),
                          elementary_abelian_group(F.p(), F.m()));
}

inline Spread build_spread(const Prequasifield& Q) {
    const Field& F = Q.field();
    int q = F.q();
    FiniteGroup V = spread_ambient_group(F);
    std::vector<Subgroup> comps;
    comps.reserve(q + 1);
    for (int m = 0; m < q; ++m) {
        std::vector<int> members(q);
        for (int x = 0; x < q; ++x) members[x] = x * q + Q.star(m, x);
        comps.push_back(subgroup_from_members(V, std::move(members)));
    }
    std::vector<int> inf(q);
    for (int y = 0; y < q; ++y) inf[y] = y;
    comps.push_back(subgroup_from_members(V, std::move(inf)));
    return Spread{F, std::move(V), std::move(comps)};
}

inline int solve_slope(const Prequasifield& Q, int x, int y) { return Q.solve_slope(x, y); }

// ---------------------------------------------------------------------------
// partial-spread partitions
// ---------------------------------------------------------------------------

// a set Sigma of (q-1)N subgroups of order qN in a group of order (qN)^2,
// pairwise intersecting trivially, dealt into q-1 blocks of size N labeled by
// the nonidentity elements of H (block t belongs to H element t+1)
struct PartialSpreadPartition {
    FiniteGroup G;
    FiniteGroup H;
    std::vector<Subgroup> sigma;
    std::vector<std::vector<int>> blocks;  // indices into sigma
    int q = 0, N = 0;
};

inline PartialSpreadPartition make_partition(const FiniteGroup& G, std::vector<Subgroup> sigma,
                                             const FiniteGroup& H,
                                             std::vector<std::vector<int>> blocks) {
    int q = H.order();
    if (q < 2) throw std::invalid_argument("make_partition: |H| must be at least 2");
    if (sigma.size() % static_cast<std::size_t>(q - 1) != 0)
        throw std::invalid_argument("make_partition: |Sigma| is not a multiple of |H| - 1");
    int N = static_cast<int>(sigma.size()) / (q - 1);
    if (N < 1) throw std::invalid_argument("make_partition: empty Sigma");
    long long qN = static_cast<long long>(q) * N;
    if (qN * qN != G.order())
        throw std::invalid_argument("make_partition: |G| != (qN)^2 for q=" + std::to_string(q) +
                                    ", N=" + std::to_string(N));
    for (const auto& X : sigma) {
        if (!X.parent.same_as(G))
            throw std::invalid_argument("make_partition: subgroup of a different group");
        if (X.order() != qN)
            throw std::invalid_argument("make_partition: subgroup of order " +
                                        std::to_string(X.order()) + ", expected qN = " +
                                        std::to_string(qN));
    }
    if (!pairwise_trivial_intersections(sigma))
        throw std::invalid_argument("make_partition: subgroups with nontrivial pairwise intersection");
    if (static_cast<int>(blocks.size()) != q - 1)
        throw std::invalid_argument("make_partition: expected q - 1 blocks");
    std::vector<bool> used(sigma.size(), false);
    for (const auto& block : blocks) {
        if (static_cast<int>(block.size()) != N)
            throw std::invalid_argument("make_partition: block of size != N");
        for (int s : block) {
            if (s < 0 || s >= static_cast<int>(sigma.size()) || used[s])
                throw std::invalid_argument("make_partition: blocks do not partition Sigma");
            used[s] = true;
        }
    }
    return PartialSpreadPartition{G, H, std::move(sigma), std::move(blocks), q, N};
}

// deal Sigma into q-1 blocks in order (member j goes to block j mod (q-1))
inline PartialSpreadPartition make_partition_round_robin(const FiniteGroup& G,
                                                         std::vector<Subgroup> sigma,
                                                         const FiniteGroup& H) {
    int q = H.order();
    if (q < 2) throw std::invalid_argument("make_partition: |H| must be at least 2");
    std::vector<std::vector<int>> blocks(q - 1);
    for (std::size_t j = 0; j < sigma.size(); ++j)
        blocks[j % static_cast<std::size_t>(q - 1)].push_back(static_cast<int>(j));
    return make_partition(G, std::move(sigma), H, std::move(blocks));
}

}  // namespace psbent
