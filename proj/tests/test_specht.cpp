#include <doctest.h>

#include "symrep/meataxe.hpp"
#include "symrep/specht.hpp"

using namespace symrep;

TEST_CASE("standard tableau counts") {
    CHECK(standard_tableaux(Partition::parse("2,1")).size() == 2);
    CHECK(standard_tableaux(Partition::parse("3,2")).size() == 5);
    CHECK(specht_dim(Partition::parse("9,2")) == 44);
    CHECK(hook_length_count(Partition::parse("9,2")) == Int(44));
    for (int n = 1; n <= 9; ++n)
        for (const auto& lam : all_partitions(n))
            CHECK(Int(standard_tableaux(lam).size()) == hook_length_count(lam));
}

TEST_CASE("gram ranks") {
    CHECK(dim_D(Partition::parse("2,1"), 3) == 1);
    CHECK(dim_D(Partition::parse("9,2"), 2) == 44);
    CHECK(dim_D(Partition::parse("3,2"), 2) == 4);
    CHECK(dim_D(Partition::parse("4,1"), 5) == 3); // 5 divides 5
    CHECK(dim_D(Partition::parse("4,1"), 3) == 4);
    CHECK_THROWS_AS(dim_D(Partition::parse("2,2"), 2), invalid_parameter);
    OracleLimits tight;
    tight.max_n = 6;
    CHECK_THROWS_AS(dim_D(Partition::parse("6,1"), 2, tight), resource_limit);
}

TEST_CASE("sign twist preserves dimension") {
    OracleLimits literal;
    literal.allow_sign_twist = false;
    for (int p : {2, 3, 5})
        for (int n = 2; n <= 8; ++n)
            for (const auto& lam : p_regular_partitions(n, p)) {
                const long a = dim_D(lam, p, literal);
                const long b = dim_D(mullineux(lam, p), p, literal);
                CHECK(a == b);
            }
}

TEST_CASE("module representation") {
    // the trivial module
    ModuleRep triv = rep_D(Partition::parse("6"), 3);
    CHECK(triv.dim == 1);
    for (const auto& m : triv.coxeter) CHECK(m.is_identity());

    ModuleRep rep = rep_D(Partition::parse("4,1"), 3);
    CHECK(rep.dim == 4);
    for (const auto& m : rep.coxeter) CHECK((m * m).is_identity());

    // matrices of permutations compose contravariantly
    Perm a = Perm::from_cycles(5, {{0, 3}});
    Perm b = Perm::from_cycles(5, {{1, 4, 2}});
    CHECK(rep_matrix(rep, a * b) == rep_matrix(rep, b) * rep_matrix(rep, a));
}

TEST_CASE("character twist against the sign") {
    // trace of the twisted module at g equals sign(g) times the original
    for (int p : {3, 5})
        for (int n = 4; n <= 8; ++n)
            for (const auto& lam : p_regular_partitions(n, p)) {
                Partition mu = mullineux(lam, p);
                if (mu == lam) continue;
                ModuleRep r1 = rep_D(lam, p);
                ModuleRep r2 = rep_D(mu, p);
                Rng rng(stream_seed(42, "twist-test"));
                const GF& F = gf(p);
                for (int t = 0; t < 25; ++t) {
                    std::vector<int> word;
                    for (int k = 0; k < int(rng.below(6)); ++k)
                        word.push_back(int(rng.below(std::uint64_t(n - 1))));
                    std::vector<Mat> m1(r1.coxeter.begin(), r1.coxeter.end());
                    std::vector<Mat> m2(r2.coxeter.begin(), r2.coxeter.end());
                    std::uint8_t t1 = trace_of(m1, word);
                    std::uint8_t t2 = trace_of(m2, word);
                    if (word.size() % 2 == 0)
                        CHECK(t1 == t2);
                    else
                        CHECK(t1 == F.neg(t2));
                }
            }
}

TEST_CASE("restriction and fixed spaces") {
    // the trivial module has a one-dimensional fixed space everywhere
    ModuleRep triv = rep_D(Partition::parse("5"), 2);
    GeneratorSet g = young_gens({4}, 5, false);
    auto mats = restrict_to(triv, g);
    CHECK(fixed_space_dim(mats) == 1);

    // a two-part module restricted to the point stabilizer chain
    ModuleRep rep = rep_D(Partition::parse("10,2"), 2);
    std::vector<Mat> sub;
    for (int i = 0; i + 1 < 8; ++i) sub.push_back(rep.coxeter[std::size_t(i)]);
    CHECK(fixed_space_dim(sub) >= 1);
}

TEST_CASE("commutant distinguishes restriction behaviour") {
    // the natural-heart module restricted to the point stabilizer is
    // irreducible exactly in the divisible case
    ModuleRep rep = rep_D(Partition::parse("5,1"), 3);
    GeneratorSet s5 = young_gens({5}, 6, false);
    auto mats = restrict_to(rep, s5);
    CHECK(commutant_dim(mats, 0) == 1);

    // the divisible case is again irreducible over the stabilizer
    ModuleRep rep5 = rep_D(Partition::parse("4,1"), 5);
    GeneratorSet s4 = young_gens({4}, 5, false);
    CHECK(commutant_dim(restrict_to(rep5, s4), 0) == 1);
    // away from the divisible case the restriction decomposes
    ModuleRep rep2 = rep_D(Partition::parse("4,1"), 3);
    auto mats2 = restrict_to(rep2, s4);
    CHECK(commutant_dim(mats2, 0) == 2);
}

TEST_CASE("splitting over the alternating group") {
    CHECK(splits_over_An(Partition::parse("3,2"), 2));
    CHECK_FALSE(splits_over_An(Partition::parse("9,2"), 2));
    CHECK(splits_over_An(Partition::parse("3,1,1"), 3));
}

TEST_CASE("split components") {
    // dimension-four spin module of the five-letter group splits over the
    // quadratic extension into conjugate halves
    ModuleRep rep = rep_D(Partition::parse("3,2"), 2);
    GeneratorSet alt = young_gens({5}, 5, true);
    auto mats = restrict_to(rep, alt, 0);
    auto pair = split_components(mats, {}, 0);
    CHECK(pair.plus[0].rows() == 2);
    CHECK(pair.minus[0].rows() == 2);
    CHECK(pair.q == 4);
}

TEST_CASE("three-cycle minimal polynomial") {
    CHECK(minpoly_degree_of_3cycle(rep_D(Partition::parse("3,2"), 2, {}, {0, 1})) == 2);
    CHECK(minpoly_degree_of_3cycle(rep_D(Partition::parse("4,1"), 2, {}, {0, 1})) == 3);
    CHECK(minpoly_degree_of_3cycle(rep_D(Partition::parse("5"), 2, {}, {0, 1})) == 1);
}

TEST_CASE("linear submodule depth") {
    // the trivial module needs no removal at all
    CHECK(min_m_with_linear_submodule(Partition::parse("6"), 3) == 0);
    // the natural heart gains an invariant vector after one point
    const long m = min_m_with_linear_submodule(Partition::parse("5,1"), 3);
    CHECK(m >= 1);
    CHECK(m <= 2);
}

TEST_CASE("branching factors contain normal-node removals") {
    for (int p : {2, 3})
        for (int n = 5; n <= 7; ++n)
            for (const auto& lam : p_regular_partitions(n, p)) {
                if (lam == Partition({n}) || mullineux(lam, p) == Partition({n})) continue;
                ModuleRep rep = rep_D(lam, p);
                GeneratorSet sub = young_gens({n - 1}, n, false);
                auto mats = restrict_to(rep, sub);
                auto dims = meataxe_chop(mats, 1);
                long total = 0;
                for (long d : dims) total += d;
                CHECK(total == rep.dim);
                for (const auto& [node, res] : all_normal_nodes(lam, p)) {
                    Partition mu = lam.remove(node);
                    if (!is_p_regular(mu, p)) continue;
                    const long d = dim_D(mu, p);
                    CHECK(std::count(dims.begin(), dims.end(), d) > 0);
                }
            }
}
