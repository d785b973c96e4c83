#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symrep/gf.hpp"
#include "symrep/rng.hpp"

namespace symrep {

// Dense matrix over GF(q), q <= 64. Storage is one byte per entry; the
// operations that dominate (rank, multiply) switch to bit-packed kernels for
// q = 2 and a bitsliced kernel for q = 3 when the matrix is large enough for
// it to matter.
class Mat {
  public:
    Mat() : q_(2), rows_(0), cols_(0) {}
    Mat(int q, std::size_t rows, std::size_t cols)
        : q_(q), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(int q, std::size_t n);

    int q() const { return q_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::uint8_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const std::uint8_t* row(std::size_t i) const { return a_.data() + i * cols_; }
    std::uint8_t* row(std::size_t i) { return a_.data() + i * cols_; }

    bool operator==(const Mat& o) const {
        return q_ == o.q_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool is_zero() const;
    bool is_identity() const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat transpose() const;
    Mat scaled(std::uint8_t c) const;

    // elimination-based queries (non-destructive)
    std::size_t rank() const;
    // basis of the right nullspace, rows of the result
    Mat nullspace() const;
    std::optional<Mat> inverse() const;
    // reinterpret entries into a larger field via subfield embedding
    Mat lifted_to(int bigq) const;

    // reduced row echelon form of this matrix; returns pivot columns
    std::vector<std::size_t> rref_inplace();

    // solve x * A = b for all rows b of B (A must be invertible square)
    static Mat solve_left(const Mat& A, const Mat& B);

    std::vector<std::uint8_t>& raw() { return a_; }
    const std::vector<std::uint8_t>& raw() const { return a_; }

  private:
    int q_;
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> a_;
};

// Polynomial over GF(q), coefficients low to high, normalized so the leading
// coefficient is nonzero (zero polynomial = empty vector).
class Poly {
  public:
    Poly() : q_(2) {}
    Poly(int q, std::vector<std::uint8_t> coeffs) : q_(q), c_(std::move(coeffs)) { trim(); }
    static Poly x(int q) { return Poly(q, {0, 1}); }
    static Poly constant(int q, std::uint8_t v) { return Poly(q, {v}); }

    int q() const { return q_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return long(c_.size()) - 1; } // -1 for zero
    std::uint8_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint8_t>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return q_ == o.q_ && c_ == o.c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(std::uint8_t v) const;
    Poly monic() const;
    // division with remainder
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    static Poly gcd(Poly a, Poly b);
    // (this^e) mod m
    Poly powmod(unsigned long long e, const Poly& m) const;
    // evaluate at a square matrix
    Mat eval(const Mat& M) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    int q_;
    std::vector<std::uint8_t> c_;
};

// characteristic polynomial via Hessenberg reduction, O(n^3)
Poly charpoly(const Mat& M);

// distinct-degree + equal-degree (Cantor-Zassenhaus) factorization;
// result is (monic irreducible, multiplicity), sorted
std::vector<std::pair<Poly, unsigned>> factor_poly(const Poly& f, Rng& rng);

bool poly_is_irreducible(const Poly& f);

// ---- kernels used by the Specht Gram pipeline ------------------------------

// rank over GF(2) of a matrix given as packed 64-bit rows (destructive)
std::size_t rank_gf2_packed(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t words);

// bitsliced GF(3) matrix: two bit planes (a = "is 1", b = "is 2")
struct SlicedGf3 {
    std::size_t rows = 0, cols = 0, words = 0;
    std::vector<std::uint64_t> a, b;
    void init(std::size_t r, std::size_t c) {
        rows = r;
        cols = c;
        words = (c + 63) / 64;
        a.assign(r * words, 0);
        b.assign(r * words, 0);
    }
    void set(std::size_t i, std::size_t j, std::uint8_t v) {
        const std::size_t w = i * words + j / 64;
        const std::uint64_t bit = 1ULL << (j % 64);
        if (v == 1)
            a[w] |= bit;
        else if (v == 2)
            b[w] |= bit;
    }
    std::uint8_t get(std::size_t i, std::size_t j) const {
        const std::size_t w = i * words + j / 64;
        const std::uint64_t bit = 1ULL << (j % 64);
        if (a[w] & bit) return 1;
        if (b[w] & bit) return 2;
        return 0;
    }
};

// destructive rank of a bitsliced GF(3) matrix
std::size_t rank_gf3_sliced(SlicedGf3& m);

} // namespace symrep
