#include <doctest.h>

#include "symrep/permgroup.hpp"

using namespace symrep;

TEST_CASE("permutation basics") {
    Perm a = Perm::from_cycles(4, {{0, 1, 2}});
    CHECK(a(0) == 1);
    CHECK(a(2) == 0);
    CHECK(a.is_even());
    CHECK_FALSE(Perm::from_cycles(4, {{0, 1}}).is_even());
    CHECK((a * a.inverse()).is_identity());
    // adjacent-transposition words recompose
    for (const auto& g : {Perm::from_cycles(6, {{0, 3, 4}, {1, 5}}),
                          Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})}) {
        Perm acc = Perm::identity(6);
        for (int i : g.adjacent_transpositions())
            acc = acc * Perm::from_cycles(6, {{i, i + 1}});
        CHECK(acc == g);
    }
}

TEST_CASE("stabilizer chain orders") {
    CHECK(group_order(young_gens({5}, 6, false)) == Int(120));
    CHECK(group_order(young_gens({3, 2}, 5, true)) == Int(6));
    CHECK(group_order(young_gens({7}, 7, true)) == Int(2520));
    CHECK(group_order(wreath_gens(3, 2)) == Int(72));
    CHECK(group_order(wreath_gens(5, 2)) == Int(28800));
    CHECK(group_order(wreath_gens(4, 1)) == Int(24));
}

TEST_CASE("membership") {
    auto gs = young_gens({4}, 5, true);
    StabilizerChain chain(gs, 0);
    CHECK(chain.contains(Perm::from_cycles(5, {{0, 1, 2}})));
    CHECK_FALSE(chain.contains(Perm::from_cycles(5, {{0, 1}})));
    CHECK_FALSE(chain.contains(Perm::from_cycles(5, {{3, 4}, {0, 1}})));
}

TEST_CASE("affine families") {
    auto agl32 = agl_gens(3, 2);
    CHECK(group_order(agl32.group) == Int(1344));
    CHECK(group_order(agl32.translations) == Int(8));
    CHECK(is_transitive(agl32.translations));
    CHECK(is_2_transitive(agl32.group));
    CHECK(group_order(agl_gens(2, 3).group) == Int(432));
    CHECK(group_order(asl_gens(2, 3).group) == Int(216));
    CHECK(group_order(agl_gens(1, 5).group) == Int(20));
    CHECK(group_order(frobenius_gens(5, 4)) == Int(20));
    CHECK(group_order(frobenius_gens(5, 2)) == Int(10));
    CHECK(group_order(affine_q8_gens()) == Int(72));
    CHECK_THROWS_AS(frobenius_gens(5, 3), invalid_parameter);
    CHECK_THROWS_AS(agl_gens(2, 4), invalid_parameter);
}

TEST_CASE("projective line") {
    CHECK(group_order(projective_line_gens(7, ProjFlavor::PSL)) == Int(168));
    CHECK(group_order(projective_line_gens(5, ProjFlavor::PSL)) == Int(60));
    CHECK(is_2_transitive(projective_line_gens(5, ProjFlavor::PSL)));
    CHECK(group_order(projective_line_gens(4, ProjFlavor::PSL)) == Int(60));
    CHECK(group_order(projective_line_gens(9, ProjFlavor::M10)) == Int(720));
    CHECK(group_order(projective_line_gens(9, ProjFlavor::PGammaL)) == Int(1440));
    CHECK_THROWS_AS(projective_line_gens(16, ProjFlavor::PSL), invalid_parameter);
}

TEST_CASE("mathieu data") {
    CHECK(group_order(mathieu_gens(11)) == Int(7920));
    CHECK(group_order(mathieu_gens(12)) == Int(95040));
    CHECK(group_order(m11_on_12_gens()) == Int(7920));
    CHECK(is_transitive(m11_on_12_gens()));
    // ordered-pair orbit of the four-transitive action
    CHECK(is_2_transitive(mathieu_gens(11)));
    CHECK(transitivity_degree(mathieu_gens(11), 4) == 4);
}

TEST_CASE("orbits") {
    auto gs = young_gens({5, 2}, 7, true);
    auto orb = orbits(gs);
    REQUIRE(orb.size() == 2);
    CHECK(orb[0].size() == 5);
    CHECK(orb[1].size() == 2);
}

TEST_CASE("descriptors") {
    auto spec = parse_descriptor("young:5,2,alt", 7);
    CHECK(spec.family == GroupFamily::YoungA);
    CHECK(spec.degree == 7);
    CHECK(parse_descriptor("m11@12", 12).transitivity == 3);
    CHECK(parse_descriptor("an", 9).family == GroupFamily::FullAlternating);
    CHECK(parse_descriptor("sp:3,0", 36).degree == 36);
    CHECK(parse_descriptor("sp:3,1", 28).degree == 28);
    CHECK(parse_descriptor("suzuki:8", 65).degree == 65);
    CHECK_FALSE(parse_descriptor("m24", 24).constructible);
    CHECK_THROWS_AS(parse_descriptor("nonsense", 10), invalid_parameter);
    CHECK_THROWS_AS(build_group(parse_descriptor("m24", 24), 24), invalid_parameter);
    // degree padding
    auto gs = build_group(parse_descriptor("m11", 11), 12);
    CHECK(gs.degree == 12);
    CHECK(group_order(gs) == Int(7920));
}

TEST_CASE("parity flags") {
    CHECK(all_gens_even(build_group(parse_descriptor("m12", 12), 12)));
    CHECK(all_gens_even(build_group(parse_descriptor("asl:2,3", 9), 9)));
    CHECK(all_gens_even(build_group(parse_descriptor("aq8", 9), 9)));
    CHECK(all_gens_even(build_group(parse_descriptor("psl2:8", 9), 9)));
    CHECK_FALSE(all_gens_even(build_group(parse_descriptor("young:5", 6), 6)));
}
