#include <doctest.h>

#include <set>

#include "symrep/partition.hpp"

using namespace symrep;

TEST_CASE("parsing and canonical form") {
    CHECK(Partition::parse("10,2").parts() == std::vector<int>{10, 2});
    CHECK(Partition::parse("3^3").parts() == std::vector<int>{3, 3, 3});
    CHECK(Partition::parse("4,3^2,1").parts() == std::vector<int>{4, 3, 3, 1});
    CHECK(Partition::parse("10,2").str() == "10,2");
    CHECK(Partition().n() == 0);
    CHECK_THROWS_AS(Partition({2, 3}), invalid_parameter);
    CHECK_THROWS_AS(Partition::parse("a,b"), invalid_parameter);
}

TEST_CASE("p-regularity") {
    CHECK_FALSE(is_p_regular(Partition::parse("2,2,1"), 2));
    CHECK(is_p_regular(Partition::parse("6,5,1"), 2));
    CHECK_FALSE(is_p_regular(Partition::parse("1,1,1"), 3));
    CHECK_THROWS_AS(is_p_regular(Partition::parse("2,1"), 4), invalid_parameter);
}

TEST_CASE("normal nodes") {
    Partition lam = Partition::parse("3,1");
    auto n0 = normal_nodes(lam, 0, 2);
    REQUIRE(n0.size() == 1);
    CHECK(n0[0] == Node{1, 3});
    CHECK(normal_nodes(lam, 1, 2).empty());
    // a single-row partition has its unique removable node normal
    Partition row = Partition::parse("6");
    const int i = residue_of({1, 6}, 5);
    auto nn = normal_nodes(row, i, 5);
    REQUIRE(nn.size() == 1);
    CHECK(nn[0] == Node{1, 6});
}

TEST_CASE("top removable node is normal for its residue") {
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 10; ++n)
            for (const auto& lam : p_regular_partitions(n, p)) {
                const Node top = lam.top_removable();
                const int i = residue_of(top, p);
                auto nn = normal_nodes(lam, i, p);
                bool found = false;
                for (const auto& nd : nn) found |= nd == top;
                CHECK(found);
            }
}

TEST_CASE("reduced signature is idempotent") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& lam : all_partitions(n))
            for (int i = 0; i < 3; ++i) {
                auto red = reduced_signature(lam, i, 3);
                // no adjacent -+ pair survives
                for (std::size_t k = 0; k + 1 < red.size(); ++k)
                    { const bool cancellable = red[k].sign == '-' && red[k + 1].sign == '+'; CHECK_FALSE(cancellable); }
            }
}

TEST_CASE("jantzen-seitz") {
    CHECK(is_JS(Partition::parse("5,1"), 3));
    CHECK(is_JS(Partition::parse("7"), 3));
    CHECK_FALSE(is_JS(Partition::parse("4,2"), 3));
    CHECK(is_JS(Partition::parse("4,2"), 2));
    CHECK(js_removal_target(Partition::parse("5,1"), 3) == Node{1, 5});
    CHECK_THROWS_AS(is_JS(Partition::parse("2,2,1"), 2), invalid_parameter);
}

TEST_CASE("mullineux anchors") {
    CHECK(mullineux(Partition::parse("5,4,2"), 2) == Partition::parse("5,4,2"));
    CHECK(mullineux(Partition::parse("6,2,1"), 3) == Partition::parse("5,2,2"));
    CHECK(mullineux(Partition::parse("4,3,3"), 3) == Partition::parse("7,2,1"));
    CHECK(mullineux_via_symbol(Partition::parse("6,2,1"), 3) == Partition::parse("5,2,2"));
    CHECK(mullineux_via_symbol(Partition::parse("4,3,3"), 3) == Partition::parse("7,2,1"));
    CHECK_THROWS_AS(mullineux(Partition::parse("2,2"), 2), invalid_parameter);
}

TEST_CASE("mullineux involution (small sweep)") {
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 10; ++n)
            for (const auto& lam : p_regular_partitions(n, p)) {
                Partition m = mullineux(lam, p);
                CHECK(m.n() == n);
                CHECK(is_p_regular(m, p));
                CHECK(mullineux(m, p) == lam);
                CHECK(mullineux_via_symbol(lam, p) == m);
            }
}

TEST_CASE("two-row near-hooks") {
    CHECK(beta(10) == Partition::parse("6,4"));
    CHECK(beta(11) == Partition::parse("6,5"));
    CHECK(beta(5) == Partition::parse("3,2"));
    CHECK_THROWS_AS(beta(2), invalid_parameter);
}

TEST_CASE("doubles") {
    CHECK(dbl(Partition::parse("12")) == std::vector<int>{7, 5});
    CHECK(dbl(Partition::parse("5,3")) == std::vector<int>{3, 2, 2, 1});
    CHECK(dbl(Partition()) == std::vector<int>{});
}

TEST_CASE("splitting predicate") {
    CHECK(in_PA(Partition::parse("7,5"), 2));
    CHECK_FALSE(in_PA(Partition::parse("6,4"), 2));
    CHECK(in_PA(Partition::parse("6,5,1"), 2));
    CHECK(in_PA(Partition::parse("3,3,2"), 7));
    CHECK(in_PA(Partition::parse("3,3,3"), 7));
}

TEST_CASE("doubles criterion by direct enumeration") {
    // at p = 2 the predicate agrees with the enumerated double set
    for (int n = 1; n <= 14; ++n) {
        std::set<std::vector<int>> doubles;
        for (const auto& mu : p_regular_partitions(n, 2)) {
            bool ok = true;
            for (int v : mu.parts())
                if (v % 4 == 2) ok = false;
            if (!ok) continue;
            auto comp = dbl(mu);
            bool partition = true;
            for (std::size_t i = 1; i < comp.size(); ++i)
                if (comp[i] > comp[i - 1]) partition = false;
            if (!partition) continue;
            Partition cand(comp);
            if (is_p_regular(cand, 2)) doubles.insert(cand.parts());
        }
        for (const auto& lam : p_regular_partitions(n, 2))
            { const bool lhs = in_PA(lam, 2); const bool rhs = doubles.count(lam.parts()) > 0; CHECK(lhs == rhs); }
    }
}

TEST_CASE("mullineux-fixed iff splits, odd characteristic") {
    for (int p : {3, 5})
        for (int n = 1; n <= 12; ++n)
            for (const auto& lam : p_regular_partitions(n, p))
                CHECK(in_PA(lam, p) == (mullineux(lam, p) == lam));
}

TEST_CASE("first-part cap for split labels") {
    for (int p : {2, 3, 5})
        for (int n = 5; n <= 20; ++n)
            for (const auto& lam : p_regular_partitions(n, p)) {
                if (!in_PA(lam, p)) continue;
                if (p == 2)
                    CHECK(2 * lam.first() <= n + 2);
                else
                    CHECK(2 * lam.first() <= n + p + 1);
            }
}

TEST_CASE("js definitions agree") {
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 20; ++n)
            for (const auto& lam : p_regular_partitions(n, p)) CHECK_NOTHROW(is_JS(lam, p));
}
