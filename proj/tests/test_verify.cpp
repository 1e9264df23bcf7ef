#include <doctest.h>

#include <random>
#include <variant>

#include "psbent/verify.hpp"

using namespace psbent;

namespace {

PartialSpreadPartition ps16_partition() {
    Spread s = build_spread(field_prequasifield(Field::make(2, 2)));
    std::vector<Subgroup> sigma{s.components[0], s.components[1]};
    return make_partition_round_robin(s.ambient, sigma, cyclic_group(2));
}

// the 16-point slope-construction table, identical to ps_bent(ps16_partition()) but
// carrying the vector-space context the Fourier verifier needs
FunctionTable ps16_with_context() {
    Field F4 = Field::make(2, 2), F2 = Field::make(2, 1);
    return qf_bent(field_prequasifield(F4), embed_subfield(F2, F4),
                   balanced_values(4, 2, BalancedKind::round_robin));
}

FunctionTable zero_function_16() {
    FunctionTable f = ps16_with_context();
    std::fill(f.values.begin(), f.values.end(), 0);
    return f;
}

}  // namespace

TEST_CASE("combinatorial verifier") {
    FunctionTable f = ps_bent(ps16_partition());
    BentReport r = verify_bent_combinatorial(f);
    CHECK(r.bent);
    CHECK(r.method == "combinatorial");
    // all 15 histograms are exactly {8, 8}
    for (int z = 1; z < 16; ++z)
        CHECK(coset_difference_histogram(f, z) == std::vector<long long>{8, 8});

    FunctionTable constant{f.domain, f.codomain, std::vector<int>(16, 0), std::nullopt};
    BentReport rc = verify_bent_combinatorial(constant);
    CHECK_FALSE(rc.bent);
    CHECK(rc.z == 1);  // first witness in scan order
    CHECK(rc.histogram == std::vector<long long>{16, 0});

    FiniteGroup c6 = cyclic_group(6);
    FunctionTable bad{c6, cyclic_group(4), std::vector<int>(6, 0), std::nullopt};
    CHECK_THROWS_AS(verify_bent_combinatorial(bad), std::invalid_argument);
}

TEST_CASE("partial-spread functions onto the quaternion group are bent") {
    Spread s8 = build_spread(field_prequasifield(Field::make(2, 3)));
    std::vector<Subgroup> seven(s8.components.begin(), s8.components.begin() + 7);
    PartialSpreadPartition P = make_partition_round_robin(s8.ambient, seven, quaternion_group());
    FunctionTable f = ps_bent(P);
    BentReport r = verify_bent_combinatorial(f);
    CHECK(r.bent);
    for (int z = 1; z < 64; ++z) {
        auto hist = coset_difference_histogram(f, z);
        for (long long c : hist) CHECK(c == 8);
    }
}

TEST_CASE("walsh transform basics") {
    FunctionTable zero = zero_function_16();
    LinearFunctional T = LinearFunctional::trace_of(zero.fourier->K);
    CHECK(walsh_transform(zero, 1, T, 0).as_rational_integer() == 16);
    for (int u = 1; u < 16; ++u)
        CHECK(walsh_transform(zero, 1, T, u).as_rational_integer() == 0);
    CHECK_THROWS_AS(walsh_transform(zero, 0, T, 0), std::invalid_argument);

    // the 16-point bent function has Walsh values +-4 everywhere
    FunctionTable f = ps16_with_context();
    for (int u = 0; u < 16; ++u) {
        auto w = walsh_transform(f, 1, T, u).as_rational_integer();
        REQUIRE(w.has_value());
        CHECK((*w == 4 || *w == -4));
    }
}

TEST_CASE("fourier verifier") {
    FunctionTable f = ps16_with_context();
    BentReport r = verify_bent_fourier(f);
    CHECK(r.bent);
    CHECK(r.method == "fourier");

    BentReport rz = verify_bent_fourier(zero_function_16());
    CHECK_FALSE(rz.bent);
    CHECK(rz.k == 1);
    CHECK(rz.u == 0);
    CHECK(rz.norm_square == "256");  // |f^(0)|^2 = |V|^2

    FunctionTable noctx = ps_bent(ps16_partition());
    CHECK_THROWS_AS(verify_bent_fourier(noctx), std::invalid_argument);
}

TEST_CASE("the twisted order-9 construction is bent, fourier and combinatorially") {
    Prequasifield T9 = twisted9_prequasifield();
    SubfieldEmbedding emb = embed_subfield(Field::make(3, 1), T9.field());
    FunctionTable f = qf_bent(T9, emb, balanced_values(9, 3, BalancedKind::round_robin));
    CHECK(verify_bent_fourier(f).bent);
    CHECK(verify_bent_combinatorial(f).bent);
    // every squared Walsh modulus is exactly 81
    LinearFunctional T = LinearFunctional::trace_of(f.fourier->K);
    for (int k = 1; k < 3; ++k)
        for (int u = 0; u < 81; ++u) {
            auto w = walsh_transform(f, k, T, u);
            CHECK((w * w.conj()).as_rational_integer() == 81);
        }
}

TEST_CASE("fourier verdict does not depend on the functional or the basis") {
    Prequasifield T9 = twisted9_prequasifield();
    Field F3 = Field::make(3, 1);
    SubfieldEmbedding emb = embed_subfield(F3, T9.field());
    FunctionTable bent = qf_bent(T9, emb, balanced_values(9, 3, BalancedKind::seeded_shuffle, 5));
    FunctionTable nonbent = bent;
    nonbent.values[17] = (nonbent.values[17] + 1) % 3;

    for (FunctionTable* f : {&bent, &nonbent}) {
        bool want = f == &bent;
        for (bool alt : {false, true}) {
            FunctionTable g = *f;
            g.fourier = fourier_context(T9.field(), emb, alt);
            for (std::vector<int> w : {std::vector<int>{1}, std::vector<int>{2}}) {
                LinearFunctional T = LinearFunctional::make(F3, w);
                CHECK(verify_bent_fourier(g, T).bent == want);
            }
        }
    }

    // same over GF(4) with K = GF(4): three nonzero functionals
    Field F4 = Field::make(2, 2);
    Prequasifield Q4 = field_prequasifield(F4);
    SubfieldEmbedding e44 = embed_subfield(F4, F4);
    FunctionTable f44 = qf_bent(Q4, e44, balanced_values(4, 4, BalancedKind::round_robin));
    for (std::vector<int> w : {std::vector<int>{1, 0}, std::vector<int>{0, 1}, std::vector<int>{1, 1}})
        CHECK(verify_bent_fourier(f44, LinearFunctional::make(F4, w)).bent);

    // and the 16-point function under the alternative basis
    FunctionTable d16 = ps16_with_context();
    d16.fourier = fourier_context(F4, embed_subfield(Field::make(2, 1), F4), true);
    CHECK(verify_bent_fourier(d16).bent);
}

TEST_CASE("parseval holds for bent and non-bent functions") {
    FunctionTable f = ps16_with_context();
    FunctionTable g = f;
    std::mt19937 rng(3);
    for (auto& v : g.values) v = static_cast<int>(rng() % 2);
    LinearFunctional T2 = LinearFunctional::trace_of(f.fourier->K);
    for (const FunctionTable* h : {&f, &g}) {
        CyclotomicInt total(2);
        for (int u = 0; u < 16; ++u) {
            CyclotomicInt w = walsh_transform(*h, 1, T2, u);
            total += w * w.conj();
        }
        CHECK(total.as_rational_integer() == 16 * 16);
    }

    Prequasifield T9 = twisted9_prequasifield();
    SubfieldEmbedding emb = embed_subfield(Field::make(3, 1), T9.field());
    FunctionTable f9 = qf_bent(T9, emb, balanced_values(9, 3, BalancedKind::seeded_shuffle, 1));
    FunctionTable g9 = f9;
    for (auto& v : g9.values) v = static_cast<int>(rng() % 3);
    LinearFunctional T3 = LinearFunctional::trace_of(f9.fourier->K);
    for (const FunctionTable* h : {&f9, &g9})
        for (int k = 1; k < 3; ++k) {
            CyclotomicInt total(3);
            for (int u = 0; u < 81; ++u) {
                CyclotomicInt w = walsh_transform(*h, k, T3, u);
                total += w * w.conj();
            }
            CHECK(total.as_rational_integer() == 81 * 81);
        }
}

TEST_CASE("both verifiers agree on a mixed corpus") {
    Field F4 = Field::make(2, 2), F2 = Field::make(2, 1);
    Prequasifield Q = field_prequasifield(F4);
    SubfieldEmbedding emb = embed_subfield(F2, F4);
    std::mt19937 rng(11);
    for (int t = 0; t < 12; ++t) {
        FunctionTable f = qf_bent(Q, emb, balanced_values(4, 2, BalancedKind::round_robin));
        if (t > 0)
            for (auto& v : f.values) v = static_cast<int>(rng() % 2);
        CHECK(verify_bent_combinatorial(f).bent == verify_bent_fourier(f).bent);
    }
}

TEST_CASE("intersection count formula cases") {
    // same nonidentity set containing z: (N-1)(N-2) + (qN-2)
    CHECK(intersection_count_formula(1, 1, 1, 2, 4) == 12);
    // distinct nonidentity sets, z elsewhere: N^2
    CHECK(intersection_count_formula(1, 2, 3, 4, 2) == 4);
    CHECK(intersection_count_formula(1, 2, 0, 4, 2) == 4);
    // both identity, z in D_1: (N+1-1)(N-1) + qN
    CHECK(intersection_count_formula(0, 0, 0, 2, 4) == 20);
    CHECK_THROWS_AS(intersection_count_formula(0, 0, 0, 1, 4), std::invalid_argument);
}

TEST_CASE("formula matches brute force across a whole partition") {
    DSets d = build_d_sets(ps16_partition());
    for (int z = 1; z < 16; ++z) {
        int k = d.which[z];
        long long row_total = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                long long bf = intersection_count_bruteforce(d, z, i, j);
                CHECK(bf == intersection_count_formula(i, j, k, 2, 2));
                row_total += bf;
            }
        CHECK(row_total == 16);  // the pairs partition G
        for (int b = 0; b < 2; ++b) CHECK(goal_sum(d, z, b) == 8);  // qN^2
    }
    CHECK_THROWS_AS(goal_sum(d, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(intersection_count_bruteforce(d, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("formula matches brute force in odd characteristic") {
    // q = 3, N = 3 over the 81-point space: six of the ten GF(9)-spread
    // components, dealt round robin
    Spread s = build_spread(field_prequasifield(Field::make(3, 2)));
    std::vector<Subgroup> six(s.components.begin(), s.components.begin() + 6);
    PartialSpreadPartition P = make_partition_round_robin(s.ambient, six, cyclic_group(3));
    DSets d = build_d_sets(P);
    for (int z = 1; z < 81; ++z) {
        int k = d.which[z];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(intersection_count_bruteforce(d, z, i, j) ==
                      intersection_count_formula(i, j, k, 3, 3));
        for (int b = 0; b < 3; ++b) CHECK(goal_sum(d, z, b) == 27);  // qN^2
    }
    CHECK(verify_bent_combinatorial(ps_bent(P)).bent);
}

TEST_CASE("goal sums equal the derivative histogram of the constructed function") {
    // two routes to the same count: the histogram of x -> f(xz) f(x)^(-1),
    // and the sum of |(D_c z^(-1)) ∩ D_d| over pairs with c d^(-1) = b
    Spread s8 = build_spread(field_prequasifield(Field::make(2, 3)));
    std::vector<Subgroup> seven(s8.components.begin(), s8.components.begin() + 7);
    PartialSpreadPartition P = make_partition_round_robin(s8.ambient, seven, dihedral_group(8));
    FunctionTable f = ps_bent(P);
    DSets d = build_d_sets(P);
    for (int z : {1, 2, 9, 33, 63}) {
        auto hist = coset_difference_histogram(f, z);
        for (int b = 0; b < 8; ++b) CHECK(hist[b] == goal_sum(d, z, b));
    }
}

TEST_CASE("goal sums over all of H total |G|") {
    Spread s8 = build_spread(field_prequasifield(Field::make(2, 3)));
    std::vector<Subgroup> six(s8.components.begin(), s8.components.begin() + 6);
    DSets d = build_d_sets(make_partition_round_robin(s8.ambient, six, cyclic_group(4)));
    for (int z : {1, 5, 23, 63}) {
        long long total = 0;
        for (int b = 0; b < 4; ++b) total += goal_sum(d, z, b);
        CHECK(total == 64);
    }
}

TEST_CASE("exhaustive verification rejects oversized inputs") {
    FiniteGroup big = direct_product(elementary_abelian_group(2, 7), elementary_abelian_group(2, 7));
    FunctionTable f{big, cyclic_group(2), std::vector<int>(big.order(), 0), std::nullopt};
    CHECK_THROWS_AS(verify_bent_combinatorial(f), std::invalid_argument);
}

TEST_CASE("relative difference sets") {
    FunctionTable f = ps_bent(ps16_partition());
    RdsInstance inst = build_relative_difference_set(f);
    CHECK(inst.set.size() == 16);
    CHECK(inst.ambient.order() == 32);
    CHECK(inst.forbidden.order() == 2);

    auto r = verify_rds(inst.set, inst.ambient, inst.forbidden);
    REQUIRE(std::holds_alternative<RDSParams>(r));
    RDSParams p = std::get<RDSParams>(r);
    CHECK(p.m == 16);
    CHECK(p.n == 2);
    CHECK(p.k == 16);
    CHECK(p.lambda == 8);
    CHECK(p.counting_identity_holds());

    // a constant function's graph is no relative difference set
    FunctionTable c{f.domain, f.codomain, std::vector<int>(16, 0), std::nullopt};
    RdsInstance ci = build_relative_difference_set(c);
    CHECK(std::holds_alternative<RdsFailure>(verify_rds(ci.set, ci.ambient, ci.forbidden)));

    // the forbidden subgroup itself fails: its differences stay inside it
    auto rf = verify_rds(inst.forbidden.members, inst.ambient, inst.forbidden);
    REQUIRE(std::holds_alternative<RdsFailure>(rf));
    CHECK(std::get<RdsFailure>(rf).in_forbidden);
}

TEST_CASE("association scheme of the 16-point D-sets") {
    DSets d = build_d_sets(ps16_partition());
    auto r = verify_association_scheme(d);
    REQUIRE(std::holds_alternative<SchemeReport>(r));
    const SchemeReport& s = std::get<SchemeReport>(r);
    CHECK(s.class_size == std::vector<long long>{1, 9, 6});  // diagonal, D_1 minus 1, D_i
    CHECK(s.commutative);
    // row sums of the intersection tensor: sum_j p^k_ij = |C_i|
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 3; ++i) {
            long long sum = 0;
            for (std::size_t j = 0; j < 3; ++j) sum += s.intersection_numbers[k][i][j];
            CHECK(sum == s.class_size[i]);
        }

    // moving one element across D-sets kills the scheme
    DSets bad = d;
    int moved = bad.sets[1][0];
    bad.which[moved] = 0;
    bad = d_sets_from_labels(bad.G, bad.H, bad.which);
    CHECK(std::holds_alternative<SchemeFailure>(verify_association_scheme(bad)));
}

TEST_CASE("group-divisible and trivial schemes") {
    // single-subgroup partition {X minus 1, complement}
    Spread s = build_spread(field_prequasifield(Field::make(2, 2)));
    FiniteGroup G = s.ambient;
    std::vector<int> which(16, 0);
    for (int x : s.components[2].members)
        if (x != 0) which[x] = 1;
    auto r = verify_association_scheme(d_sets_from_labels(G, cyclic_group(2), which));
    REQUIRE(std::holds_alternative<SchemeReport>(r));
    CHECK(std::get<SchemeReport>(r).class_size == std::vector<long long>{1, 12, 3});

    // the one-element group: only the diagonal class remains
    FiniteGroup one = cyclic_group(1);
    auto rt = verify_association_scheme(d_sets_from_labels(one, one, {0}));
    REQUIRE(std::holds_alternative<SchemeReport>(rt));
    CHECK(std::get<SchemeReport>(rt).class_size == std::vector<long long>{1});

    // subgroup partitions work in nonabelian groups too
    FiniteGroup Q8 = quaternion_group();
    std::vector<int> wq(8, 0);
    for (int x : {1, 2, 3})
        wq[x] = 1;  // the subgroup {1, -1, i, -i} minus the identity
    auto rq = verify_association_scheme(d_sets_from_labels(Q8, cyclic_group(2), wq));
    REQUIRE(std::holds_alternative<SchemeReport>(rq));
    CHECK(std::get<SchemeReport>(rq).class_size == std::vector<long long>{1, 4, 3});
}

TEST_CASE("counting bounds") {
    InequivalenceBounds b22 = inequivalence_bounds(2, 2, 1);
    CHECK(b22.binomial.to_i64() == 10);
    CHECK(b22.rds_bound_vacuous);
    CHECK(b22.rds_bound_exponent == -34);
    CHECK(b22.affine_quotient.to_i64() == 0);

    InequivalenceBounds b23 = inequivalence_bounds(2, 3, 1);
    CHECK(b23.binomial.to_i64() == 126);
    CHECK(b23.rds_bound_vacuous);
    CHECK(b23.affine_quotient.to_i64() == 0);

    InequivalenceBounds b32 = inequivalence_bounds(3, 2, 2);
    CHECK(b32.binomial.to_i64() == 120);
    CHECK(b32.binomial >= BigInt::pow(BigInt(3), 3));  // C(p^m+1, p^(m-1)) >= p^(p^(m-1))

    // frozen independently: C(33,16) = 1166803110, quotient 114; C(28,9), quotient 2
    CHECK(inequivalence_bounds(2, 5, 1).affine_quotient.to_i64() == 114);
    CHECK(inequivalence_bounds(3, 3, 1).affine_quotient.to_i64() == 2);

    // the binomial dominates p^(p^(m-1)) wherever we can afford to check
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 5}}) {
        InequivalenceBounds b = inequivalence_bounds(p, m, 1);
        long long pm1 = 1;
        for (int i = 0; i < m - 1; ++i) pm1 *= p;
        CHECK(b.binomial >= BigInt::pow(BigInt(p), static_cast<std::uint64_t>(pm1)));
    }

    CHECK_THROWS_AS(inequivalence_bounds(4, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(inequivalence_bounds(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(inequivalence_bounds(2, 13, 1), std::invalid_argument);
}

TEST_CASE("single-point mutations of the 16-point bent function are always caught") {
    FunctionTable f = ps16_with_context();
    REQUIRE(verify_bent_combinatorial(f).bent);
    REQUIRE(verify_bent_fourier(f).bent);
    for (int x = 0; x < 16; ++x) {
        FunctionTable mut = f;
        mut.values[x] ^= 1;
        CHECK_FALSE(verify_bent_combinatorial(mut).bent);
        CHECK_FALSE(verify_bent_fourier(mut).bent);
    }
}

TEST_CASE("relabeling the partition blocks keeps the function bent") {
    Spread s8 = build_spread(field_prequasifield(Field::make(2, 3)));
    std::vector<Subgroup> seven(s8.components.begin(), s8.components.begin() + 7);
    FiniteGroup H = dihedral_group(8);
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
    std::mt19937 rng(21);
    for (int t = 0; t < 4; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<int>> blocks(7);
        for (int i = 0; i < 7; ++i) blocks[i] = {perm[i]};
        FunctionTable f = ps_bent(make_partition(s8.ambient, seven, H, blocks));
        CHECK(verify_bent_combinatorial(f).bent);
    }
}
