#include <doctest.h>

#include "symrep/classify.hpp"
#include "symrep/specht.hpp"

using namespace symrep;

namespace {

Verdict go_sn(int p, int n, const char* lam, const char* grp) {
    return classify_sn(p, n, Partition::parse(lam), parse_descriptor(grp, n));
}
Verdict go_an(int p, int n, const char* lam, const char* grp) {
    return classify_an(p, n, Partition::parse(lam), parse_descriptor(grp, n));
}

} // namespace

TEST_CASE("table anchors for the symmetric engine") {
    auto v = go_sn(2, 12, "10,2", "m12");
    CHECK(v.answer == Answer::Irreducible);
    CHECK(v.table_row == "S1");

    // a non-split label over the full alternating group
    auto v2 = go_sn(3, 8, "6,2", "an"); // mullineux image differs from (6,2)
    CHECK(in_PA(Partition::parse("6,2"), 3) == false);
    CHECK(v2.answer == Answer::Irreducible);
    CHECK(v2.rule == "alt");

    // spin over a two-block subgroup with both parts odd
    auto v3 = go_sn(2, 12, "7,5", "young:7,5");
    CHECK(v3.answer == Answer::Irreducible);
    CHECK(v3.rule == "spin-two-block");
    CHECK(go_sn(2, 12, "7,5", "young:8,4").answer == Answer::Reducible);
    CHECK(go_sn(2, 12, "7,5", "young:5,4,3").answer == Answer::Reducible);

    // symplectic family: only the natural heart in odd characteristic
    CHECK(go_sn(3, 36, "34,2", "sp:3,0").answer == Answer::Reducible);
    CHECK(go_sn(3, 36, "35,1", "sp:3,0").answer == Answer::Irreducible);
    CHECK(go_sn(2, 36, "35,1", "sp:3,0").answer == Answer::Reducible);
}

TEST_CASE("natural heart rows") {
    CHECK(go_sn(2, 12, "11,1", "m12").answer == Answer::Irreducible);
    CHECK(go_sn(3, 12, "11,1", "m11@12").answer == Answer::Reducible); // p = 3 excluded
    CHECK(go_sn(2, 12, "11,1", "m11@12").answer == Answer::Irreducible);
    CHECK(go_sn(5, 11, "10,1", "psl2_11@11").answer == Answer::Irreducible);
    CHECK(go_sn(3, 11, "10,1", "psl2_11@11").answer == Answer::Reducible);
    CHECK(go_sn(5, 176, "175,1", "hs").answer == Answer::Irreducible);
    CHECK(go_sn(3, 176, "175,1", "hs").answer == Answer::Reducible);
    CHECK(go_sn(3, 65, "64,1", "suzuki:8").answer == Answer::Irreducible);
    // q + 1 + sqrt(2q) = 13 rules out p = 13
    CHECK(go_sn(13, 65, "64,1", "suzuki:8").answer == Answer::Reducible);
    CHECK(go_sn(3, 28, "27,1", "psu3:3").answer == Answer::Irreducible); // 3 does not divide 4
    CHECK(go_sn(2, 28, "27,1", "psu3:3").answer == Answer::Reducible);
    // the heart over the affine group needs p away from r
    CHECK(go_sn(3, 8, "7,1", "agl:3,2").answer == Answer::Irreducible);
    CHECK(go_sn(2, 9, "8,1", "agl:2,3").answer == Answer::Irreducible);
    CHECK(go_sn(3, 9, "8,1", "agl:2,3").answer == Answer::Reducible);
    // point-fixing version needs the divisibility
    CHECK(go_sn(2, 12, "11,1", "m11").answer == Answer::Irreducible);
    CHECK(go_sn(5, 12, "11,1", "m11").answer == Answer::Reducible);
    CHECK(go_sn(3, 12, "11,1", "sn-1").answer == Answer::Irreducible);
    CHECK(go_sn(5, 12, "11,1", "sn-1").answer == Answer::Reducible);
}

TEST_CASE("point-stabilizer chain") {
    CHECK(go_sn(3, 6, "3,2,1", "sn-1").answer == Answer::Irreducible); // JS at p=3
    CHECK(go_sn(3, 6, "4,2", "sn-1").answer == Answer::Reducible);
    CHECK(go_sn(3, 6, "3,2,1", "an-1").answer == Answer::Irreducible);
    // split label over the alternating stabilizer: not irreducible from the
    // symmetric side
    CHECK(in_PA(Partition::parse("3,1,1"), 3));
    CHECK(go_sn(3, 5, "3,1,1", "an-1").answer == Answer::Reducible);
}

TEST_CASE("exterior square over the binary affine group") {
    CHECK(go_sn(3, 8, "6,1,1", "agl:3,2").answer == Answer::Irreducible);
    CHECK_THROWS_AS(go_sn(2, 8, "6,1,1", "agl:3,2"), invalid_parameter); // singular label
    CHECK(go_sn(3, 9, "7,1,1", "agl:3,2").answer == Answer::Irreducible); // 9 = 8 + 1, 3 | 9
    CHECK(go_sn(5, 9, "7,1,1", "agl:3,2").answer == Answer::Reducible);   // 5 does not divide 9
}

TEST_CASE("alternating engine") {
    auto v = go_an(2, 12, "6,5,1", "m12");
    CHECK(v.answer == Answer::Irreducible);
    CHECK(v.table_row == "A1");
    CHECK(go_an(2, 12, "6,5,1", "m11@12").answer == Answer::Reducible);

    // two normal nodes of nonzero residue over the point stabilizer
    CHECK(go_an(3, 5, "3,1,1", "an-1").answer == Answer::Irreducible);
    // two normal nodes of nonzero residue
    {
        Partition lam = Partition::parse("4,3,1");
        REQUIRE(in_PA(lam, 2));
        auto nn = all_normal_nodes(lam, 2);
        REQUIRE(nn.size() == 2);
        CHECK(go_an(2, 8, "4,3,1", "an-1").answer == Answer::Irreducible);
    }
    // the deeper stabilizers need the single-node condition
    CHECK_FALSE(is_JS(Partition::parse("3,1,1"), 3));
    CHECK(go_an(3, 5, "3,1,1", "an-2").answer == Answer::Reducible);
    CHECK(is_JS(Partition::parse("4,1,1"), 3));
    REQUIRE(in_PA(Partition::parse("4,1,1"), 3));
    CHECK(go_an(3, 6, "4,1,1", "an-2").answer == Answer::Irreducible);
    CHECK(go_an(3, 6, "4,1,1", "young:4,2,alt").answer == Answer::Irreducible);

    CHECK(go_an(2, 10, "6,4", "m10").answer == Answer::Irreducible); // unsplit spin
    CHECK(go_an(2, 11, "6,5", "m11").answer == Answer::Irreducible);
    CHECK(go_an(2, 12, "7,5", "m12").answer == Answer::Irreducible);
    CHECK(go_an(2, 12, "7,5", "m11@12").answer == Answer::Irreducible);
    CHECK(go_an(2, 12, "7,5", "m11").answer == Answer::Irreducible);   // row A18, act 11
    CHECK(go_an(2, 11, "6,5", "m10").answer == Answer::Irreducible);   // row A15, act 10
    CHECK(go_an(2, 12, "7,5", "psigmal2:9").answer == Answer::Irreducible); // row A16
    CHECK(go_an(2, 9, "5,4", "asl:2,3").answer == Answer::Irreducible);
    auto spade = go_an(2, 9, "5,4", "psl2:8");
    CHECK(spade.answer == Answer::ConditionallyIrreducible);
    CHECK(spade.condition_id == "spade");
}

TEST_CASE("spin young and wreath rules") {
    // split pair over two-block young groups
    CHECK(go_an(2, 12, "7,5", "young:11,alt").answer == Answer::Irreducible); // 4 | 12, odd
    CHECK(go_an(2, 12, "7,5", "young:9,3,alt").answer == Answer::Irreducible);
    CHECK(go_an(2, 12, "7,5", "young:6,6,alt").answer == Answer::Irreducible); // 6 = 2 mod 4
    CHECK(go_an(2, 12, "7,5", "young:8,4,alt").answer == Answer::Reducible);
    CHECK(go_an(2, 13, "7,6", "young:12,alt").answer == Answer::Reducible); // 13 = 1 mod 4
    CHECK(go_an(2, 13, "7,6", "young:11,2,alt").answer == Answer::Irreducible);
    CHECK(go_an(2, 11, "6,5", "young:10,alt").answer == Answer::Irreducible); // 11 = 3 mod 4
    // the three-block exceptions at multiples of four
    CHECK(go_an(2, 12, "7,5", "young:9,2,1,alt").answer == Answer::Irreducible);
    CHECK(go_an(2, 12, "7,5", "young:10,alt").answer == Answer::Irreducible); // two fixed points
    CHECK(go_an(2, 8, "5,3", "young:5,2,1,alt").answer == Answer::Irreducible);
    CHECK(go_an(2, 8, "5,3", "young:6,alt").answer == Answer::Irreducible); // A_6 two fixed points
    CHECK(go_an(2, 9, "5,4", "young:4,3,2,alt").answer == Answer::Reducible);
    // wreath intersections
    CHECK(go_an(2, 9, "5,4", "wreath:3x3,alt").answer == Answer::Irreducible);
    CHECK(go_an(2, 12, "7,5", "wreath:6x2,alt").answer == Answer::Irreducible);
    CHECK(go_an(2, 12, "7,5", "wreath:4x3,alt").answer == Answer::Reducible);
    CHECK(go_an(2, 12, "7,5", "wreath:3x4,alt").answer == Answer::Irreducible);
    // symmetric-side spin wreath
    CHECK(go_sn(2, 12, "7,5", "wreath:3x4").answer == Answer::Irreducible);
    CHECK(go_sn(2, 12, "7,5", "wreath:4x3").answer == Answer::Reducible);
    CHECK(go_sn(2, 10, "6,4", "wreath:5x2").answer == Answer::Irreducible);
}

TEST_CASE("wreath exception at the natural heart") {
    WreathHeartFlags flags;
    flags.transitive = true;
    flags.blocks_act_irreducibly = true;
    flags.halves_nonisomorphic = true;
    GroupSpec spec = parse_descriptor("remark-wreath", 10);
    auto v = classify_sn(2, 10, Partition::parse("9,1"), spec, &flags);
    CHECK(v.answer == Answer::Irreducible);
    flags.halves_nonisomorphic = std::nullopt;
    auto v2 = classify_sn(2, 10, Partition::parse("9,1"), spec, &flags);
    CHECK(v2.answer == Answer::ConditionallyIrreducible);
    auto v3 = classify_sn(2, 12, Partition::parse("11,1"), spec, &flags);
    CHECK(v3.answer == Answer::Reducible); // 12 = 0 mod 4
}

TEST_CASE("quasisimple filter") {
    // the affine rows disappear
    CHECK_THROWS_AS(classify_quasisimple_sn(3, 8, Partition::parse("7,1"),
                                            parse_descriptor("agl:3,2", 8)),
                    invalid_parameter);
    // JS over the symmetric stabilizer stays
    CHECK(classify_quasisimple_sn(3, 6, Partition::parse("3,2,1"),
                                  parse_descriptor("sn-1", 6))
              .answer == Answer::Irreducible);
    // sporadic rows restricted: S7 is gone for quasisimple callers but S1 stays
    CHECK(classify_quasisimple_sn(3, 24, Partition::parse("22,2"),
                                  parse_descriptor("m24", 24))
              .answer == Answer::Irreducible);
    CHECK(classify_quasisimple_an(2, 12, Partition::parse("6,5,1"),
                                  parse_descriptor("m12", 12))
              .answer == Answer::Irreducible);
    // A5/A6 rows are unavailable because their groups are affine
    CHECK_THROWS_AS(classify_quasisimple_an(7, 8, Partition::parse("3,3,2"),
                                            parse_descriptor("agl:3,2", 8)),
                    invalid_parameter);
}

TEST_CASE("mullineux symmetry of verdicts") {
    const struct {
        int p, n;
        const char* lam;
        const char* grp;
    } insts[] = {
        {2, 12, "10,2", "m12"},   {3, 11, "9,1,1", "m11"}, {3, 6, "3,2,1", "sn-1"},
        {5, 7, "5,2", "psl3:2"},  {3, 9, "7,2", "pgammal2:8"},
    };
    for (const auto& inst : insts) {
        Partition lam = Partition::parse(inst.lam);
        Partition mu = mullineux(lam, inst.p);
        GroupSpec spec = parse_descriptor(inst.grp, inst.n);
        CHECK(classify_sn(inst.p, inst.n, lam, spec).answer ==
              classify_sn(inst.p, inst.n, mu, spec).answer);
    }
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(go_sn(4, 12, "10,2", "m12"), invalid_parameter);
    CHECK_THROWS_AS(go_sn(2, 4, "3,1", "an"), invalid_parameter);
    CHECK_THROWS_AS(go_sn(2, 12, "12", "m12"), invalid_parameter);
    CHECK_THROWS_AS(go_sn(2, 12, "10,2", "young:12"), invalid_parameter);
    // an odd young subgroup with spare points embeds with the parity pair
    CHECK(go_an(2, 12, "10,2", "young:5").answer == Answer::Reducible);
    CHECK_THROWS_AS(go_an(2, 12, "10,2", "sn-1"), invalid_parameter);
    CHECK_THROWS_AS(go_sn(2, 12, "2,2,2,2,2,2", "m12"), invalid_parameter);
    // verdict answers never throw across the instance grid
    for (int p : {2, 3})
        for (int n : {8, 9})
            for (const auto& lam : p_regular_partitions(n, p)) {
                if (lam == Partition({n}) || mullineux(lam, p) == Partition({n})) continue;
                for (const char* grp : {"an", "sn-1", "an-1", "young:5,2", "wreath:4x2"}) {
                    GroupSpec spec = parse_descriptor(grp, n);
                    if (spec.degree > n) continue;
                    if (std::string(grp) == "wreath:4x2" && n != 8) continue;
                    CHECK_NOTHROW(classify_sn(p, n, lam, spec));
                }
            }
}
