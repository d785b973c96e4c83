#include <doctest.h>

#include "symrep/bounds.hpp"
#include "symrep/tables.hpp"

using namespace symrep;

TEST_CASE("product bound values") {
    CHECK(product_bound(12, 4, 2) == Rational(80));
    CHECK(product_bound(15, 4, 3) == Rational(405));
    CHECK(product_bound(9, 0, 5) == Rational(1));
    CHECK(product_bound(5, 2, 2) == Rational(3, 2));
}

TEST_CASE("closed forms") {
    CHECK(*dim_closed_form(Partition::parse("10,2"), 2) == 44);
    CHECK(*dim_closed_form(Partition::parse("22,2"), 3) == 252);
    CHECK(*dim_closed_form(Partition::parse("6,4"), 2) == 16);
    CHECK(*dim_closed_form(Partition::parse("5,3"), 5) == 21);
    CHECK(*dim_closed_form(Partition::parse("6,3"), 5) == 21);
    CHECK(*dim_closed_form(Partition::parse("10,1"), 2) == 10); // 2 does not divide 11
    CHECK(*dim_closed_form(Partition::parse("11,1"), 3) == 10); // 3 divides 12
    CHECK(*dim_closed_form(Partition::parse("6,5,1"), 2) == 288);
    CHECK(*dim_closed_form(Partition::parse("21,2,1"), 5) == 3520);
    CHECK(*dim_closed_form(Partition::parse("21,2,1"), 7) == 3267);
    CHECK(*dim_closed_form(Partition::parse("21,2,1"), 23) == 3269);
    CHECK(*dim_closed_form(Partition::parse("21,2,1"), 2) == 3520);
    CHECK(*dim_closed_form(Partition::parse("21,2,1"), 3) == 1540);
    CHECK_FALSE(dim_closed_form(Partition::parse("5,4,2"), 3).has_value());
}

TEST_CASE("closed-form splitting column") {
    CHECK(*splits_closed_form(Partition::parse("7,5"), 2));
    CHECK_FALSE(*splits_closed_form(Partition::parse("6,4"), 2));
    CHECK(*splits_closed_form(Partition::parse("6,5,1"), 2));
    CHECK(*splits_closed_form(Partition::parse("3,2"), 2));       // n = 5, 1 mod 4
    CHECK_FALSE(*splits_closed_form(Partition::parse("7,2"), 2)); // n = 9, 1 mod 4
    CHECK(*splits_closed_form(Partition::parse("3,1,1"), 3));     // n = 5
    CHECK(*splits_closed_form(Partition::parse("4,1,1"), 3));     // p | 6 and p = 3
    CHECK_FALSE(*splits_closed_form(Partition::parse("5,1,1"), 7));
}

TEST_CASE("closed forms match the splitting predicate") {
    for (int p : {2, 3, 5})
        for (int n = 5; n <= 16; ++n)
            for (const auto& lam : p_regular_partitions(n, p)) {
                auto sp = splits_closed_form(lam, p);
                if (!sp) continue;
                CHECK(*sp == in_PA(lam, p));
            }
}

TEST_CASE("table rows never conflict") {
    for (int p : {2, 3, 5, 7, 23})
        for (int n = 5; n <= 25; ++n)
            for (const auto& lam : p_regular_partitions(n, p)) {
                CHECK_NOTHROW(dim_closed_form(lam, p));
            }
}

TEST_CASE("bound reports") {
    auto reports = lower_bounds(Partition::parse("8,3,1"), 2);
    bool saw_sandwich = false, saw_exp = false;
    for (const auto& b : reports) {
        if (b.source == "prod-sandwich" && b.applicable && !b.via_mullineux) {
            saw_sandwich = true;
            CHECK(*b.lower == Rational(80));
            CHECK(*b.upper == Rational(Int(20736)));
        }
        if (b.source == "exp2" && b.applicable) saw_exp = true;
    }
    CHECK(saw_sandwich);
    CHECK(saw_exp);

    // single-row: the half-exponent bound degenerates to one
    for (const auto& b : lower_bounds(Partition::parse("7"), 3))
        if (b.source == "exp2-half") CHECK(*b.lower == Rational(1));

    // depth two: the quadratic lower bound
    bool saw_poly = false;
    for (const auto& b : lower_bounds(Partition::parse("9,2"), 2))
        if (b.source == "poly-depth2" && !b.via_mullineux) {
            saw_poly = true;
            CHECK(*b.lower == Rational(34));
        }
    CHECK(saw_poly);
}

TEST_CASE("depth cap exact comparisons") {
    auto cap = depth_cap_applies(324, true);
    REQUIRE(cap.has_value());
    CHECK(cap->admits(7));
    auto cap2 = depth_cap_applies(1024, true);
    REQUIRE(cap2.has_value());
    CHECK(cap2->admits(8));
    CHECK_FALSE(depth_cap_applies(323, true).has_value());
    CHECK_FALSE(depth_cap_applies(400, false).has_value());
    // the cap is monotone in n
    CHECK(depth_cap_applies(100000, true)->max_ell() >=
          depth_cap_applies(324, true)->max_ell());
}

TEST_CASE("low-dimension threshold") {
    CHECK_FALSE(low_dim_forces_depth1(16, Int(10)).has_value());
    CHECK(*low_dim_forces_depth1(17, Int(50)));
    CHECK_FALSE(*low_dim_forces_depth1(17, Int(200)));
}

TEST_CASE("tables round trip") {
    auto parsed = parse_tables(dump_tables());
    CHECK(parsed.version == 1);
    CHECK(!parsed.dims.empty());
    CHECK(!parsed.heart.empty());
    CHECK(!parsed.sym_cases.empty());
    CHECK(!parsed.alt_cases.empty());
}
