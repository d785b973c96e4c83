#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symrep/partition.hpp"

namespace symrep {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// One dimension bound with its applicability and provenance. `lower` and
// `upper` are exact; irrational lower bounds are replaced by their integer
// ceilings, which is lossless for integer dimensions.
struct BoundReport {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    bool applicable = false;
    std::string source;       // stable tag, see bounds.cpp for the catalog
    bool via_mullineux = false; // hypotheses checked on the Mullineux image
};

// product-form lower bound C_l(n) = (1/l!) * prod_{i<l} (n - (d_p + i) p),
// d_2 = 1 and d_p = 0 for odd p
Rational product_bound(long n, long ell, int p);

// closed-form dimension when the partition matches a known family row
std::optional<Int> dim_closed_form(const Partition& lam, int p);
// the known splitting verdict for the same rows, when recorded
std::optional<bool> splits_closed_form(const Partition& lam, int p);

// n - first part, the "depth" of the partition
long depth_of(const Partition& lam);
// whether lam or its Mullineux image has first part >= n - ell
bool in_L_ell(const Partition& lam, int p, long ell);

// every applicable lower/upper bound; `m_submodule` optionally supplies the
// minimal m with a one-dimensional submodule in the restriction chain, which
// sharpens the odd-characteristic exponential bound
std::vector<BoundReport> lower_bounds(const Partition& lam, int p,
                                      std::optional<long> m_submodule = std::nullopt);

// exact predicate for the logarithmic depth cap: ell <= 0.7 log2 n + 1.4,
// decided by the equivalent integer comparison 2^(10 ell - 14) <= n^7
struct DepthCap {
    long n = 0;
    bool admits(long ell) const;
    long max_ell() const;
};
std::optional<DepthCap> depth_cap_applies(long n, bool dim_hypothesis_holds);

// low-dimension threshold (n^2-5n+2)/2: below it the partition or its
// Mullineux image has first part >= n-1, provided n >= 17
std::optional<bool> low_dim_forces_depth1(long n, const Int& dim);

} // namespace symrep
