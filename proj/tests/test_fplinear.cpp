#include <doctest.h>

#include "symrep/fplinear.hpp"
#include "symrep/rng.hpp"

#include <set>

using namespace symrep;

namespace {

Mat random_mat(int q, std::size_t r, std::size_t c, Rng& rng) {
    Mat m(q, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = std::uint8_t(rng.below(std::uint64_t(q)));
    return m;
}

} // namespace

TEST_CASE("field tables") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 25, 64}) {
        const GF& F = gf(q);
        // additive and multiplicative group sanity
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(std::uint8_t(a), F.neg(std::uint8_t(a))) == 0);
            if (a) CHECK(F.mul(std::uint8_t(a), F.inv(std::uint8_t(a))) == 1);
        }
        // distributivity spot checks
        Rng rng(7);
        for (int t = 0; t < 50; ++t) {
            auto a = std::uint8_t(rng.below(std::uint64_t(q)));
            auto b = std::uint8_t(rng.below(std::uint64_t(q)));
            auto c = std::uint8_t(rng.below(std::uint64_t(q)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
        // generator order
        if (q > 2) {
            std::set<int> seen;
            std::uint8_t x = 1;
            for (int i = 0; i < q - 1; ++i) {
                seen.insert(x);
                x = F.mul(x, std::uint8_t(F.generator()));
            }
            CHECK(int(seen.size()) == q - 1);
        }
    }
}

TEST_CASE("subfield embedding") {
    const GF& small = gf(4);
    const GF& big = gf(64);
    auto emb = small.embedding_into(big);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            CHECK(emb[small.add(std::uint8_t(a), std::uint8_t(b))] ==
                  big.add(emb[std::size_t(a)], emb[std::size_t(b)]));
            CHECK(emb[small.mul(std::uint8_t(a), std::uint8_t(b))] ==
                  big.mul(emb[std::size_t(a)], emb[std::size_t(b)]));
        }
}

TEST_CASE("rank and nullity") {
    Mat m(3, 2, 2);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 2;
    CHECK(m.rank() == 1);
    CHECK(Mat::identity(5, 4).nullspace().rows() == 0);
    Rng rng(3);
    for (int q : {2, 3, 4, 5}) {
        for (std::size_t size : {5, 40, 150}) {
            Mat a = random_mat(q, size, size + 3, rng);
            CHECK(a.rank() + a.nullspace().rows() == a.cols());
            // nullspace rows actually annihilate
            Mat ns = a.nullspace();
            for (std::size_t i = 0; i < ns.rows(); ++i) {
                const GF& F = gf(q);
                for (std::size_t c = 0; c < a.cols() && i < 2; ++c) {
                    std::uint8_t acc = 0;
                    (void)F;
                    (void)acc;
                }
            }
            Mat prod = ns * a.transpose();
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("packed kernels agree with the generic path") {
    Rng rng(11);
    for (int q : {2, 3}) {
        for (int t = 0; t < 4; ++t) {
            Mat a = random_mat(q, 130, 137, rng);
            // generic rank via a small-field copy evades the packed path
            Mat b = a;
            std::size_t generic = b.rref_inplace().size();
            CHECK(a.rank() == generic);
        }
        Mat sq = random_mat(q, 140, 140, rng);
        auto inv = sq.inverse();
        if (inv) CHECK((*inv * sq).is_identity());
    }
}

TEST_CASE("multiplication fast paths") {
    Rng rng(5);
    for (int q : {2, 3}) {
        Mat a = random_mat(q, 100, 120, rng);
        Mat b = random_mat(q, 120, 110, rng);
        Mat fast = a * b;
        // reference multiplication
        const GF& F = gf(q);
        Mat ref(q, 100, 110);
        for (std::size_t i = 0; i < 100; ++i)
            for (std::size_t k = 0; k < 120; ++k)
                for (std::size_t j = 0; j < 110; ++j)
                    ref(i, j) = F.add(ref(i, j), F.mul(a(i, k), b(k, j)));
        CHECK(fast == ref);
    }
}

TEST_CASE("polynomial arithmetic and factorization") {
    Rng rng(17);
    // x^2 + x + 1 over GF(2) is irreducible
    Poly f(2, {1, 1, 1});
    auto factors = factor_poly(f, rng);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].first == f);
    CHECK(factors[0].second == 1);
    CHECK(poly_is_irreducible(f));

    for (int q : {2, 3, 4, 5, 9}) {
        for (int t = 0; t < 12; ++t) {
            std::vector<std::uint8_t> c(std::size_t(3 + rng.below(15)));
            for (auto& v : c) v = std::uint8_t(rng.below(std::uint64_t(q)));
            c.push_back(1);
            Poly g(q, std::move(c));
            auto fs = factor_poly(g, rng);
            Poly prod = Poly::constant(q, 1);
            for (const auto& [irr, mult] : fs) {
                CHECK(poly_is_irreducible(irr));
                for (unsigned i = 0; i < mult; ++i) prod = prod * irr;
            }
            CHECK(prod == g.monic());
        }
    }
}

TEST_CASE("characteristic polynomial") {
    Rng rng(23);
    for (int q : {2, 3, 5}) {
        for (std::size_t size : {1, 2, 5, 20}) {
            Mat a = random_mat(q, size, size, rng);
            Poly cp = charpoly(a);
            CHECK(cp.degree() == long(size));
            CHECK(cp.coeffs().back() == 1);
            // Cayley-Hamilton
            CHECK(cp.eval(a).is_zero());
        }
    }
    // known example: companion matrix of x^2+1 over GF(3)
    Mat c(3, 2, 2);
    c(0, 1) = 1;
    c(1, 0) = 2;
    Poly cp = charpoly(c);
    CHECK(cp == Poly(3, {1, 0, 1}));
}

TEST_CASE("bitsliced rank matches on symmetric inputs") {
    Rng rng(29);
    const std::size_t s = 90;
    Mat a(3, s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i; j < s; ++j) {
            auto v = std::uint8_t(rng.below(3));
            a(i, j) = v;
            a(j, i) = v;
        }
    Mat b = a;
    CHECK(a.rank() == b.rref_inplace().size());
}
