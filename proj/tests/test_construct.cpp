#include <doctest.h>

#include <algorithm>
#include <set>

#include "psbent/construct.hpp"

using namespace psbent;

namespace {

PartialSpreadPartition ps16_partition() {
    Spread s = build_spread(field_prequasifield(Field::make(2, 2)));
    std::vector<Subgroup> sigma{s.components[0], s.components[1]};
    return make_partition_round_robin(s.ambient, sigma, cyclic_group(2));
}

}  // namespace

TEST_CASE("build_d_sets sizes match N(qN-1) and qN^2 + qN - N") {
    // q = 2, N = 2, |G| = 16: 6 and 10
    DSets d16 = build_d_sets(ps16_partition());
    CHECK(d16.sets[1].size() == 6);
    CHECK(d16.sets[0].size() == 10);
    CHECK(d16.which[0] == 0);  // identity always lands in D_1

    // q = 8, N = 1, |G| = 64: seven sets of 7 and one of 15
    Spread s8 = build_spread(field_prequasifield(Field::make(2, 3)));
    std::vector<Subgroup> seven(s8.components.begin(), s8.components.begin() + 7);
    DSets d64 = build_d_sets(make_partition_round_robin(s8.ambient, seven, cyclic_group(8)));
    for (int i = 1; i < 8; ++i) CHECK(d64.sets[i].size() == 7);
    CHECK(d64.sets[0].size() == 15);
    CHECK(64 - 7 * 7 == 15);

    // the sets partition G
    std::set<int> covered;
    for (const auto& s : d64.sets) covered.insert(s.begin(), s.end());
    CHECK(covered.size() == 64);
}

TEST_CASE("ps_bent lays out the D-sets as fibers") {
    PartialSpreadPartition P = ps16_partition();
    FunctionTable f = ps_bent(P);
    CHECK(f.values.size() == 16);
    CHECK(f(0) == 0);  // identity of G maps to identity of H
    DSets d = build_d_sets(P);
    for (int x = 0; x < 16; ++x) CHECK(f(x) == d.which[x]);
    // fibers have the D-set sizes
    CHECK(std::count(f.values.begin(), f.values.end(), 1) == 6);
    CHECK(std::count(f.values.begin(), f.values.end(), 0) == 10);
    CHECK_FALSE(is_balanced(f));
}

TEST_CASE("balanced function generation") {
    Field F9 = Field::make(3, 2), F3 = Field::make(3, 1);
    FunctionTable rr = balanced_function(F9, F3, BalancedKind::round_robin);
    CHECK(is_balanced(rr));
    CHECK(rr.values == std::vector<int>{0, 1, 2, 0, 1, 2, 0, 1, 2});

    Field F8 = Field::make(2, 3), F2 = Field::make(2, 1);
    FunctionTable sh = balanced_function(F8, F2, BalancedKind::seeded_shuffle, 0);
    CHECK(is_balanced(sh));
    CHECK(std::count(sh.values.begin(), sh.values.end(), 0) == 4);

    // deterministic in the seed, different across seeds (these two differ)
    CHECK(balanced_function(F8, F2, BalancedKind::seeded_shuffle, 7).values ==
          balanced_function(F8, F2, BalancedKind::seeded_shuffle, 7).values);
    CHECK(balanced_function(F8, F2, BalancedKind::seeded_shuffle, 7).values !=
          balanced_function(F8, F2, BalancedKind::seeded_shuffle, 8).values);

    // |K| | |F| is all balance needs: GF(8) -> GF(4) has fibers of size 2,
    // even though GF(4) is not a subfield of GF(8)
    CHECK(is_balanced(balanced_function(F8, Field::make(2, 2), BalancedKind::round_robin)));
    CHECK_THROWS_AS(balanced_function(F9, Field::make(2, 1), BalancedKind::round_robin),
                    std::invalid_argument);  // 2 does not divide 9
}

TEST_CASE("qf_bent over GF(4) with K = GF(2)") {
    Field F4 = Field::make(2, 2), F2 = Field::make(2, 1);
    Prequasifield Q = field_prequasifield(F4);
    SubfieldEmbedding emb = embed_subfield(F2, F4);
    std::vector<int> g = balanced_values(4, 2, BalancedKind::round_robin);
    FunctionTable f = qf_bent(Q, emb, g);
    CHECK(f.values.size() == 16);
    REQUIRE(f.fourier.has_value());
    CHECK(f.fourier->K.q() == 2);
    CHECK(f.fourier->dim() == 4);
    // the x = 0 component carries the constant g(0)
    for (int y = 0; y < 4; ++y) CHECK(f(0 * 4 + y) == g[0]);
    // elsewhere the value is g at the slope through the point
    for (int x = 1; x < 4; ++x)
        for (int y = 0; y < 4; ++y) CHECK(f(x * 4 + y) == g[Q.solve_slope(x, y)]);
}

TEST_CASE("qf_bent preconditions") {
    Field F4 = Field::make(2, 2), F2 = Field::make(2, 1), F9 = Field::make(3, 2);
    Prequasifield Q = field_prequasifield(F4);
    SubfieldEmbedding emb = embed_subfield(F2, F4);
    std::vector<int> unbalanced{0, 0, 0, 1};
    CHECK_THROWS_AS(qf_bent(Q, emb, unbalanced), std::invalid_argument);
    std::vector<int> short_g{0, 1};
    CHECK_THROWS_AS(qf_bent(Q, emb, short_g), std::invalid_argument);
    // kernel failure: GF(9) does not act on the twisted example
    Prequasifield T9 = twisted9_prequasifield();
    std::vector<int> g9 = balanced_values(9, 9, BalancedKind::round_robin);
    CHECK_THROWS_AS(qf_bent(T9, embed_subfield(F9, T9.field()), g9), std::invalid_argument);
}

TEST_CASE("the slope construction is the partial-spread construction on matched blocks") {
    // with g(0) = 0 the fibers of g group the spread components into blocks;
    // the two constructions then produce the same table
    struct Case {
        Prequasifield Q;
        Field K;
    };
    for (Case c : {Case{field_prequasifield(Field::make(2, 2)), Field::make(2, 1)},
                   Case{twisted9_prequasifield(), Field::make(3, 1)}}) {
        const Field& F = c.Q.field();
        SubfieldEmbedding emb = embed_subfield(c.K, F);
        std::vector<int> g = balanced_values(F.q(), c.K.q(), BalancedKind::round_robin);
        REQUIRE(g[0] == 0);
        FunctionTable f_qf = qf_bent(c.Q, emb, g);

        Spread s = build_spread(c.Q);
        // block for K element i != 0: components whose slope lands in g^(-1)(i)
        std::vector<Subgroup> sigma;
        std::vector<std::vector<int>> blocks(c.K.q() - 1);
        for (int i = 1; i < c.K.q(); ++i)
            for (int m = 0; m < F.q(); ++m)
                if (g[m] == i) {
                    blocks[i - 1].push_back(static_cast<int>(sigma.size()));
                    sigma.push_back(s.components[m]);
                }
        FiniteGroup H = elementary_abelian_group(c.K.p(), c.K.m());
        FunctionTable f_ps = ps_bent(make_partition(s.ambient, sigma, H, blocks));
        CHECK(f_ps.values == f_qf.values);
    }
}

TEST_CASE("fibers round-trip through d_sets_from_function") {
    FunctionTable f = ps_bent(ps16_partition());
    DSets d = d_sets_from_function(f);
    CHECK(d.sets[1].size() == 6);
    CHECK(d.which == f.values);
}

TEST_CASE("fourier context bases") {
    Field F9 = Field::make(3, 2), F3 = Field::make(3, 1);
    SubfieldEmbedding emb = embed_subfield(F3, F9);
    FourierContext a = fourier_context(F9, emb, false);
    FourierContext b = fourier_context(F9, emb, true);
    CHECK(a.dim() == 4);
    CHECK(b.dim() == 4);
    CHECK(a.coords != b.coords);  // genuinely different coordinates
    // both are linear in the point: coords(u + v) = coords(u) + coords(v)
    Field K = emb.sub;
    FiniteGroup V = elementary_abelian_group(3, 4);
    for (const FourierContext& ctx : {a, b})
        for (int u = 0; u < 81; u += 7)
            for (int v = 0; v < 81; v += 5) {
                int w = V.mul(u, v);
                for (int i = 0; i < 4; ++i)
                    CHECK(ctx.coords[w][i] == K.add(ctx.coords[u][i], ctx.coords[v][i]));
            }
}
