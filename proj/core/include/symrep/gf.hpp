#pragma once

#include <cstdint>
#include <vector>

#include "symrep/errors.hpp"

namespace symrep {

bool is_prime(long v);

// Small finite field GF(q), q = r^f <= 64, table-driven. Elements are
// 0..q-1; for prime q these are the residues, for prime powers the integer
// encodes the coefficient vector of the polynomial basis, base r, with the
// constant coefficient least significant. One fixed primitive polynomial per
// supported q keeps encodings stable across runs.
class GF {
  public:
    explicit GF(int q);

    int q() const { return q_; }
    int characteristic() const { return r_; }
    int degree() const { return f_; }
    int generator() const { return gen_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, neg_[b])]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t inv(std::uint8_t a) const {
        if (a == 0) throw invalid_parameter("GF: inverse of zero");
        return inv_[a];
    }
    std::uint8_t div(std::uint8_t a, std::uint8_t b) const { return mul(a, inv(b)); }
    // frobenius x -> x^r
    std::uint8_t frob(std::uint8_t a) const { return frob_[a]; }
    std::uint8_t pow(std::uint8_t a, long e) const;

    // embedding of this field into a larger one with r^f | r^f'; image of the
    // canonical generator is chosen deterministically
    std::vector<std::uint8_t> embedding_into(const GF& big) const;

  private:
    int idx(std::uint8_t a, std::uint8_t b) const { return int(a) * q_ + int(b); }
    int q_, r_, f_, gen_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_, frob_;
};

// shared instances (fields are immutable)
const GF& gf(int q);

} // namespace symrep
