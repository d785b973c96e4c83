#include "symrep/bounds.hpp"

#include "symrep/gf.hpp"
#include "symrep/tables.hpp"

namespace symrep {

namespace {

Int int_pow(Int base, unsigned long e) {
    Int out = 1;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

Int ceil_nth_root(const Int& v, unsigned k) {
    // smallest x with x^k >= v
    if (v <= 0) return 0;
    Int lo = 0, hi = 1;
    while (int_pow(hi, k) < v) hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (int_pow(mid, k) >= v)
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

int delta_p(int p) { return p == 2 ? 1 : 0; }

} // namespace

Rational product_bound(long n, long ell, int p) {
    if (!is_prime(p)) throw invalid_parameter("product_bound: p must be prime");
    if (ell < 0) throw invalid_parameter("product_bound: ell must be nonnegative");
    Rational out = 1;
    for (long i = 0; i < ell; ++i) {
        out *= Rational(Int(n) - Int(delta_p(p) + i) * p);
        out /= Rational(i + 1);
    }
    return out;
}

namespace {

// quadratic/cubic/quartic helpers (exact rationals over n)
Rational quad(long n, long a, long b, long c, long div) {
    return Rational(Int(a) * n * n + Int(b) * n + c, div);
}
Rational cubic(long n, long a3, long a2, long a1, long a0, long div) {
    Int nn = n;
    return Rational(a3 * nn * nn * nn + a2 * nn * nn + a1 * nn + a0, div);
}
Rational quartic(long n, long a4, long a3, long a2, long a1, long a0, long div) {
    Int nn = n;
    return Rational(a4 * nn * nn * nn * nn + a3 * nn * nn * nn + a2 * nn * nn + a1 * nn + a0,
                    div);
}

} // namespace

std::optional<Int> dim_closed_form(const Partition& lam, int p) {
    require_p_regular(lam, p, "dim_closed_form");
    return table_dim_lookup(lam, p);
}

std::optional<bool> splits_closed_form(const Partition& lam, int p) {
    require_p_regular(lam, p, "splits_closed_form");
    return table_splits_lookup(lam, p);
}

long depth_of(const Partition& lam) { return lam.n() - lam.first(); }

bool in_L_ell(const Partition& lam, int p, long ell) {
    if (depth_of(lam) <= ell) return true;
    return depth_of(mullineux(lam, p)) <= ell;
}

std::vector<BoundReport> lower_bounds(const Partition& lam, int p,
                                      std::optional<long> m_submodule) {
    require_p_regular(lam, p, "lower_bounds");
    const long n = lam.n();
    const Partition lam_m = mullineux(lam, p);
    std::vector<BoundReport> out;

    auto push = [&](std::optional<Rational> lo, std::optional<Rational> up, bool app,
                    std::string src, bool via_m) {
        out.push_back({std::move(lo), std::move(up), app, std::move(src), via_m});
    };

    // product / permutation-degree sandwich, for depth >= 4 and n large enough
    auto sandwich = [&](const Partition& l, bool via_m) {
        const long ell = depth_of(l);
        const bool app = ell >= 4 && n >= (long)p * (delta_p(p) + ell - 2);
        push(product_bound(n, ell, p), Rational(int_pow(n, (unsigned long)ell)), app,
             "prod-sandwich", via_m);
    };
    sandwich(lam, false);
    if (lam_m != lam) sandwich(lam_m, true);

    // exponential bounds in n - k, k = max of the two first parts
    const long k = std::max<long>(lam.first(), lam_m.first());
    if (p == 2) {
        push(Rational(int_pow(2, (unsigned long)(n - k))), std::nullopt, true, "exp2", false);
    }
    push(Rational(ceil_nth_root(int_pow(2, (unsigned long)(n - k)), 2)), std::nullopt, true,
         "exp2-half", false);
    if (p > 2 && m_submodule) {
        const long t = std::max(n - k, *m_submodule);
        if (t >= 2) {
            // 2 * 3^((t-2)/3): ceil of the cube root of 8 * 3^(t-2)
            push(Rational(ceil_nth_root(Int(8) * int_pow(3, (unsigned long)(t - 2)), 3)),
                 std::nullopt, true, "exp3-submodule", false);
        }
    }

    // small-depth polynomial bounds
    auto smalldepth = [&](const Partition& l, bool via_m) {
        const long ell = depth_of(l);
        if (ell < 1 || ell > 4) return;
        Rational v;
        switch (ell) {
            case 1: v = Rational(n - 2); break;
            case 2: v = quad(n, 1, -5, 2, 2); break;
            case 3: v = cubic(n, 1, -9, 14, 0, 6); break;
            default: v = quartic(n, 1, -14, 47, -34, 0, 24); break;
        }
        push(v, std::nullopt, true, "poly-depth" + std::to_string(ell), via_m);
    };
    smalldepth(lam, false);
    if (lam_m != lam && depth_of(lam_m) != depth_of(lam)) smalldepth(lam_m, true);

    // threshold bounds for partitions outside the shallow classes
    {
        const bool hyp = (n >= 13) && (p != 2 || n >= 23);
        const bool app = hyp && !in_L_ell(lam, p, 2);
        push(cubic(n, 1, -9, 14, 0, 6), std::nullopt, app, "cube-threshold", false);
    }
    {
        const bool hyp = p >= 3 && n >= 17;
        const bool app = hyp && !in_L_ell(lam, p, 3);
        push(quartic(n, 1, -14, 47, -34, 0, 24), std::nullopt, app, "quartic-threshold", false);
    }
    return out;
}

bool DepthCap::admits(long ell) const {
    // ell <= 0.7 log2 n + 1.4  <=>  2^(10 ell - 14) <= n^7
    if (10 * ell <= 14) return true;
    return int_pow(2, (unsigned long)(10 * ell - 14)) <= int_pow(n, 7);
}

long DepthCap::max_ell() const {
    long ell = 0;
    while (admits(ell + 1)) ++ell;
    return ell;
}

std::optional<DepthCap> depth_cap_applies(long n, bool dim_hypothesis_holds) {
    if (n < 324 || !dim_hypothesis_holds) return std::nullopt;
    return DepthCap{n};
}

std::optional<bool> low_dim_forces_depth1(long n, const Int& dim) {
    if (n < 17) return std::nullopt;
    return 2 * dim < Int(n) * n - 5 * n + 2;
}

} // namespace symrep
