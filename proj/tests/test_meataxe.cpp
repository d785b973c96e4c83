#include <doctest.h>

#include "symrep/meataxe.hpp"
#include "symrep/specht.hpp"

using namespace symrep;

TEST_CASE("meataxe on restrictions") {
    // the spin module over the affine group of order twenty
    ModuleRep rep = rep_D(Partition::parse("3,2"), 2);
    GeneratorSet frob = build_group(parse_descriptor("frob:5,4", 5), 5);
    auto mats = restrict_to(rep, frob, 0);
    CHECK(meataxe_irreducible(mats, 0));

    // over the five-cycle alone the module is the full quartic-field module
    GeneratorSet cyc = build_group(parse_descriptor("frob:5,1", 5), 5);
    auto cmats = restrict_to(rep, cyc, 0);
    CHECK(meataxe_irreducible(cmats, 0));
    // a three-letter subgroup cannot hold a four-dimensional simple
    GeneratorSet s3 = build_group(parse_descriptor("young:3", 5), 5);
    auto smats = restrict_to(rep, s3, 0);
    CHECK_FALSE(meataxe_irreducible(smats, 0));
    auto dims = meataxe_chop(smats, 0);
    long total = 0;
    for (long d : dims) total += d;
    CHECK(total == 4);
    CHECK(dims.size() > 1);
}

TEST_CASE("chop respects dimension") {
    ModuleRep rep = rep_D(Partition::parse("4,2"), 3);
    GeneratorSet s5 = young_gens({5}, 6, false);
    auto mats = restrict_to(rep, s5, 0);
    auto dims = meataxe_chop(mats, 0);
    long total = 0;
    for (long d : dims) total += d;
    CHECK(total == rep.dim);
    // an irreducible chop is a single factor
    GeneratorSet pgl = build_group(parse_descriptor("pgl2:5", 6), 6);
    auto pmats = restrict_to(rep, pgl, 0);
    if (meataxe_irreducible(pmats, 0)) {
        auto pd = meataxe_chop(pmats, 0);
        CHECK(pd.size() == 1);
        CHECK(pd[0] == rep.dim);
    }
}

TEST_CASE("dimension gate") {
    ModuleRep rep = rep_D(Partition::parse("6,5,1"), 2);
    GeneratorSet m12 = build_group(parse_descriptor("m12", 12), 12);
    auto mats = restrict_to(rep, m12, 0);
    MeataxeOptions tight;
    tight.max_dim = 100;
    CHECK_THROWS_AS(meataxe_irreducible(mats, 0, tight), resource_limit);
}

TEST_CASE("largest irreducible dimension of a small group") {
    // the alternating group on five letters in characteristic two
    GeneratorSet a5 = young_gens({5}, 5, true);
    CHECK(max_irreducible_dim(a5, 2, 0) == 4);
    // over the prime field the conjugate three-dimensional pair fuses
    CHECK(max_irreducible_dim(a5, 3, 0) == 6);
    CHECK(max_irreducible_dim(a5, 9, 0) == 4);
    // the symmetric group on four letters mod three has the two-dimensional top
    GeneratorSet s4 = young_gens({4}, 4, false);
    CHECK(max_irreducible_dim(s4, 3, 0) == 3);
    CHECK(max_irreducible_dim(s4, 2, 0) == 2);
    // the frobenius group of order twenty over GF(2): degrees 1,1?,4
    GeneratorSet f20 = build_group(parse_descriptor("frob:5,4", 5), 5);
    CHECK(max_irreducible_dim(f20, 2, 0) == 4);
    MeataxeOptions tiny;
    tiny.max_dim = 10;
    CHECK_THROWS_AS(max_irreducible_dim(young_gens({5}, 5, false), 2, 0, tiny),
                    resource_limit);
}

TEST_CASE("order-nine trace values") {
    // on the split halves of the nine-letter spin module the values separate
    ModuleRep rep = rep_D(Partition::parse("5,4"), 2);
    GeneratorSet sl28 = build_group(parse_descriptor("psl2:8", 9), 9);
    GeneratorSet alt = young_gens({9}, 9, true);
    auto an_mats = restrict_to(rep, alt, 0);
    auto g_mats = restrict_to(rep, sl28, 0);
    auto pair = split_components(an_mats, g_mats, 0);
    auto word = find_element_of_order(sl28, 9, 0);
    REQUIRE(word.has_value());
    auto matof = [&](const std::vector<Mat>& comp) {
        Mat acc = Mat::identity(comp[0].q(), comp[0].rows());
        // the search composes functions left applied last; matrices reverse
        for (int gi : *word) acc = acc * comp[std::size_t(gi)];
        return acc;
    };
    auto vp = brauer_value_order9(matof(pair.plus_extra));
    auto vm = brauer_value_order9(matof(pair.minus_extra));
    REQUIRE(vp.has_value());
    REQUIRE(vm.has_value());
    CHECK(((*vp == -1) != (*vm == -1)));
}
