#include "symrep/specht.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace symrep {

Int hook_length_count(const Partition& lam) {
    const int n = lam.n();
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Int hooks = 1;
    for (int r = 1; r <= lam.rows(); ++r)
        for (int c = 1; c <= lam.part(r); ++c) {
            int arm = lam.part(r) - c;
            int leg = 0;
            for (int r2 = r + 1; r2 <= lam.rows(); ++r2)
                if (lam.part(r2) >= c) ++leg;
            hooks *= arm + leg + 1;
        }
    Int f = fact / hooks;
    if (f * hooks != fact) throw consistency_error("hook_length_count: non-integral quotient");
    return f;
}

namespace {

constexpr long kExpansionGate = 80'000'000L;

void check_gate(const Partition& lam, const OracleLimits& lim, const char* who) {
    if (lam.n() > lim.max_n)
        throw resource_limit(std::string(who) + ": n exceeds the configured gate");
}

void enumerate_standard(const Partition& lam, std::vector<std::vector<std::uint8_t>>& out) {
    const int n = lam.n();
    std::vector<int> filled(std::size_t(lam.rows()), 0);
    std::vector<std::uint8_t> row_of(std::size_t(n), 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            out.push_back(row_of);
            return;
        }
        for (int r = 0; r < lam.rows(); ++r) {
            const int c = filled[std::size_t(r)];
            if (c >= lam.part(r + 1)) continue;
            if (r > 0 && filled[std::size_t(r - 1)] <= c) continue;
            filled[std::size_t(r)]++;
            row_of[std::size_t(v)] = std::uint8_t(r);
            rec(v + 1);
            filled[std::size_t(r)]--;
        }
    };
    rec(0);
}

// permutations of {0..k-1} with signs, in a stable order
struct PermTable {
    std::vector<std::vector<std::uint8_t>> perms;
    std::vector<std::int8_t> signs;
};
const PermTable& perm_table(int k) {
    static std::map<int, PermTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    PermTable t;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 0);
    // lexicographic enumeration; sign tracked by inversion count
    do {
        int inv = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (cur[std::size_t(a)] > cur[std::size_t(b)]) ++inv;
        t.perms.push_back(cur);
        t.signs.push_back(inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return cache.emplace(k, std::move(t)).first->second;
}

// ranks row words with fixed content (the tabloid index)
class TabloidRanker {
  public:
    explicit TabloidRanker(const Partition& lam) : lam_(lam), n_(lam.n()) {
        counts0_.assign(std::size_t(lam.rows()), 0);
        for (int r = 0; r < lam.rows(); ++r) counts0_[std::size_t(r)] = lam.part(r + 1);
        total_ = 1;
        int placed = 0;
        for (int r = 0; r < lam.rows(); ++r)
            for (int i = 0; i < lam.part(r + 1); ++i) {
                ++placed;
                total_ = total_ * placed / (i + 1);
            }
    }
    std::uint64_t total() const { return total_; }
    std::uint64_t rank(const std::uint8_t* w) const {
        std::vector<int> counts(counts0_);
        std::uint64_t cur = total_;
        std::uint64_t rank = 0;
        for (int pos = 0; pos < n_; ++pos) {
            const int rem = n_ - pos;
            const int d = w[pos];
            for (int r = 0; r < d; ++r)
                if (counts[std::size_t(r)] > 0)
                    rank += cur * std::uint64_t(counts[std::size_t(r)]) / std::uint64_t(rem);
            cur = cur * std::uint64_t(counts[std::size_t(d)]) / std::uint64_t(rem);
            counts[std::size_t(d)]--;
        }
        return rank;
    }

  private:
    Partition lam_;
    int n_;
    std::vector<int> counts0_;
    std::uint64_t total_ = 1;
};

// polytabloid expansions in tabloid coordinates, grouped by tabloid
struct SpechtData {
    Partition lam;
    long s = 0;                 // number of standard tableaux
    std::uint64_t T = 0;        // tabloid space dimension
    std::vector<std::vector<std::uint8_t>> tabs; // row words of standard tableaux
    // triples sorted by tabloid: packed (tabloid << 24) | (tableau << 1) | negbit
    std::vector<std::uint64_t> triples;
    std::vector<std::uint32_t> bucket_start; // size T+1
    TabloidRanker ranker;

    explicit SpechtData(const Partition& l) : lam(l), ranker(l) {}
};

std::uint64_t pack_triple(std::uint64_t tabloid, std::uint64_t tableau, bool neg) {
    return (tabloid << 24) | (tableau << 1) | (neg ? 1 : 0);
}

std::shared_ptr<SpechtData> build_specht(const Partition& lam) {
    auto data = std::make_shared<SpechtData>(lam);
    const int n = lam.n();
    enumerate_standard(lam, data->tabs);
    data->s = long(data->tabs.size());
    {
        Int expected = hook_length_count(lam);
        if (Int(data->s) != expected)
            throw consistency_error("standard tableau count disagrees with the hook formula");
    }
    data->T = data->ranker.total();
    if (data->T >= (1ULL << 31)) throw resource_limit("tabloid space too large");
    if (std::uint64_t(data->s) >= (1ULL << 23)) throw resource_limit("too many standard tableaux");

    // column layout
    const int ncols = lam.first();
    std::vector<int> colh(std::size_t(ncols), 0);
    for (int c = 0; c < ncols; ++c)
        for (int r = 0; r < lam.rows(); ++r)
            if (lam.part(r + 1) > c) colh[std::size_t(c)]++;

    std::uint64_t colstab = 1;
    for (int c = 0; c < ncols; ++c) {
        for (int i = 2; i <= colh[std::size_t(c)]; ++i) colstab *= std::uint64_t(i);
    }
    const std::uint64_t nnz = std::uint64_t(data->s) * colstab;
    if (nnz > std::uint64_t(kExpansionGate))
        throw resource_limit("polytabloid expansion too large");
    data->triples.reserve(static_cast<std::size_t>(nnz));

    // values per column for one tableau: vals[c][j] = value in row j of column c
    std::vector<std::vector<std::uint8_t>> vals(static_cast<std::size_t>(ncols));
    for (int c = 0; c < ncols; ++c) vals[std::size_t(c)].resize(std::size_t(colh[std::size_t(c)]));
    std::vector<std::uint8_t> w(static_cast<std::size_t>(n));
    std::vector<int> live; // columns with height >= 2
    for (int c = 0; c < ncols; ++c)
        if (colh[std::size_t(c)] >= 2) live.push_back(c);

    for (long ti = 0; ti < data->s; ++ti) {
        const auto& row_of = data->tabs[std::size_t(ti)];
        std::vector<int> fillpos(std::size_t(lam.rows()), 0);
        for (int v = 0; v < n; ++v) {
            const int r = row_of[std::size_t(v)];
            const int c = fillpos[std::size_t(r)]++;
            vals[std::size_t(c)][std::size_t(r)] = std::uint8_t(v);
        }
        // odometer over the live columns
        std::vector<std::size_t> idx(live.size(), 0);
        while (true) {
            std::memcpy(w.data(), row_of.data(), std::size_t(n));
            int sign = 1;
            for (std::size_t li = 0; li < live.size(); ++li) {
                const int c = live[li];
                const auto& pt = perm_table(colh[std::size_t(c)]);
                const auto& pi = pt.perms[idx[li]];
                sign *= pt.signs[idx[li]];
                const auto& vc = vals[std::size_t(c)];
                for (std::size_t k = 0; k < vc.size(); ++k)
                    w[vc[k]] = pi[k];
            }
            const std::uint64_t rank = data->ranker.rank(w.data());
            data->triples.push_back(pack_triple(rank, std::uint64_t(ti), sign < 0));
            // advance odometer
            std::size_t li = 0;
            for (; li < live.size(); ++li) {
                const auto& pt = perm_table(colh[std::size_t(live[li])]);
                if (++idx[li] < pt.perms.size()) break;
                idx[li] = 0;
            }
            if (li == live.size()) break;
        }
    }
    // counting sort by tabloid
    data->bucket_start.assign(std::size_t(data->T) + 1, 0);
    for (auto t : data->triples) data->bucket_start[std::size_t(t >> 24) + 1]++;
    for (std::size_t i = 1; i < data->bucket_start.size(); ++i)
        data->bucket_start[i] += data->bucket_start[i - 1];
    {
        std::vector<std::uint64_t> sorted(data->triples.size());
        std::vector<std::uint32_t> cursor(data->bucket_start.begin(), data->bucket_start.end() - 1);
        for (auto t : data->triples) sorted[cursor[std::size_t(t >> 24)]++] = t;
        data->triples = std::move(sorted);
    }
    return data;
}

std::shared_ptr<SpechtData> specht_cache(const Partition& lam) {
    static std::map<std::vector<int>, std::weak_ptr<SpechtData>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[lam.parts()];
    if (auto held = slot.lock()) return held;
    auto built = build_specht(lam);
    slot = built;
    return built;
}

// accumulate the Gram matrix mod p in an upper-triangular byte buffer
std::vector<std::uint8_t> gram_upper(const SpechtData& sd, int p) {
    const std::size_t s = std::size_t(sd.s);
    std::vector<std::uint64_t> off(s);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < s; ++i) {
        off[i] = acc - i;
        acc += s - i;
    }
    std::vector<std::uint8_t> ut(std::size_t(acc), 0);
    std::vector<std::uint8_t> plus(static_cast<std::size_t>(p)), minus(static_cast<std::size_t>(p));
    for (int v = 0; v < p; ++v) {
        plus[std::size_t(v)] = std::uint8_t((v + 1) % p);
        minus[std::size_t(v)] = std::uint8_t((v + p - 1) % p);
    }
    const auto& tr = sd.triples;
    for (std::uint64_t b = 0; b < sd.T; ++b) {
        const std::uint32_t lo = sd.bucket_start[std::size_t(b)];
        const std::uint32_t hi = sd.bucket_start[std::size_t(b) + 1];
        for (std::uint32_t x = lo; x < hi; ++x) {
            const std::uint64_t ix = (tr[x] >> 1) & 0x7fffff;
            const bool nx = tr[x] & 1;
            const std::uint64_t base = off[std::size_t(ix)];
            for (std::uint32_t y = x; y < hi; ++y) {
                const std::uint64_t iy = (tr[y] >> 1) & 0x7fffff;
                const bool pos = (nx == ((tr[y] & 1) != 0));
                auto& cell = ut[std::size_t(base + iy)];
                cell = pos ? plus[cell] : minus[cell];
            }
        }
    }
    return ut;
}

long gram_rank(const SpechtData& sd, int p) {
    const std::size_t s = std::size_t(sd.s);
    auto ut = gram_upper(sd, p);
    auto at = [&](std::size_t i, std::size_t k) -> std::uint8_t {
        if (i > k) std::swap(i, k);
        // off[i] + k with off[i] = sum_{j<i}(s-j) - i
        const std::uint64_t offi = i * (2 * s - i + 1) / 2;
        return ut[std::size_t(offi + (k - i))];
    };
    if (p == 2) {
        const std::size_t w = (s + 63) / 64;
        std::vector<std::uint64_t> m(s * w, 0);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 0; k < s; ++k)
                if (at(i, k)) m[i * w + k / 64] |= 1ULL << (k % 64);
        ut.clear();
        ut.shrink_to_fit();
        return long(rank_gf2_packed(m, s, w));
    }
    if (p == 3) {
        SlicedGf3 m;
        m.init(s, s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 0; k < s; ++k) m.set(i, k, at(i, k));
        ut.clear();
        ut.shrink_to_fit();
        return long(rank_gf3_sliced(m));
    }
    Mat m(p, s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < s; ++k) m(i, k) = at(i, k);
    ut.clear();
    ut.shrink_to_fit();
    return long(m.rank());
}

} // namespace

std::vector<std::vector<std::uint8_t>> standard_tableaux(const Partition& lam,
                                                         const OracleLimits& lim) {
    check_gate(lam, lim, "standard_tableaux");
    std::vector<std::vector<std::uint8_t>> out;
    enumerate_standard(lam, out);
    return out;
}

long specht_dim(const Partition& lam, const OracleLimits& lim) {
    check_gate(lam, lim, "specht_dim");
    std::vector<std::vector<std::uint8_t>> out;
    enumerate_standard(lam, out);
    Int expected = hook_length_count(lam);
    if (Int(out.size()) != expected)
        throw consistency_error("specht_dim: enumeration disagrees with the hook formula");
    return long(out.size());
}

namespace {

// size of the sparse polytabloid expansion: tableau count times the order of
// the column stabilizer
Int expansion_size(const Partition& lam) {
    Int colstab = 1;
    for (int c = 1; c <= lam.first(); ++c) {
        int h = 0;
        for (int r = 1; r <= lam.rows(); ++r)
            if (lam.part(r) >= c) ++h;
        for (int i = 2; i <= h; ++i) colstab *= i;
    }
    return hook_length_count(lam) * colstab;
}

// overall work estimate: elimination dominates, expansion gates memory
Int gram_cost(const Partition& lam) {
    Int s = hook_length_count(lam);
    return s * s * s + 64 * expansion_size(lam);
}

} // namespace

long dim_D(const Partition& lam, int p, const OracleLimits& lim) {
    require_p_regular(lam, p, "dim_D");
    check_gate(lam, lim, "dim_D");

    static std::map<std::pair<std::vector<int>, int>, long> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({lam.parts(), p});
        if (it != memo.end()) return it->second;
    }

    Partition use = lam;
    if (lim.allow_sign_twist && p != 2) {
        Partition m = mullineux(lam, p);
        if (m != lam) {
            const bool lam_fits = expansion_size(lam) <= kExpansionGate;
            const bool m_fits = expansion_size(m) <= kExpansionGate;
            if (m_fits && (!lam_fits || gram_cost(m) < gram_cost(lam))) use = m;
        }
    }
    auto sd = specht_cache(use);
    const long d = gram_rank(*sd, p);
    {
        std::lock_guard<std::mutex> lock(mu);
        memo[{lam.parts(), p}] = d;
        if (use != lam) memo[{use.parts(), p}] = d;
    }
    return d;
}

// ---- representation construction --------------------------------------------

namespace {

// incremental echelon over GF(q) with byte rows, packed fast paths
class EchelonTracker {
  public:
    EchelonTracker(int q, std::size_t cols) : q_(q), cols_(cols) {}
    // returns true (and keeps a reduced copy) if the row is independent
    bool add(std::vector<std::uint8_t> row) {
        const GF& F = gf(q_);
        for (std::size_t t = 0; t < rows_.size(); ++t) {
            const std::uint8_t c = row[pivots_[t]];
            if (!c) continue;
            const auto& pr = rows_[t];
            for (std::size_t j = 0; j < cols_; ++j)
                if (pr[j]) row[j] = F.sub(row[j], F.mul(c, pr[j]));
        }
        std::size_t piv = cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (row[j]) {
                piv = j;
                break;
            }
        if (piv == cols_) return false;
        const std::uint8_t inv = F.inv(row[piv]);
        if (inv != 1)
            for (std::size_t j = piv; j < cols_; ++j) row[j] = F.mul(row[j], inv);
        rows_.push_back(std::move(row));
        pivots_.push_back(piv);
        return true;
    }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::size_t rank() const { return rows_.size(); }

  private:
    int q_;
    std::size_t cols_;
    std::vector<std::vector<std::uint8_t>> rows_;
    std::vector<std::size_t> pivots_;
};

// packed GF(2) echelon for wide rows
class EchelonTracker2 {
  public:
    explicit EchelonTracker2(std::size_t cols) : cols_(cols), w_((cols + 63) / 64) {}
    bool add(std::vector<std::uint64_t> row) {
        for (std::size_t t = 0; t < rows_.size(); ++t) {
            const std::size_t p = pivots_[t];
            if (row[p / 64] >> (p % 64) & 1)
                for (std::size_t j = 0; j < w_; ++j) row[j] ^= rows_[t][j];
        }
        std::size_t piv = cols_;
        for (std::size_t j = 0; j < w_ && piv == cols_; ++j)
            if (row[j]) piv = j * 64 + std::size_t(__builtin_ctzll(row[j]));
        if (piv >= cols_) return false;
        rows_.push_back(std::move(row));
        pivots_.push_back(piv);
        return true;
    }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

  private:
    std::size_t cols_, w_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
};

// bitsliced GF(3) echelon for wide rows
class EchelonTracker3 {
  public:
    explicit EchelonTracker3(std::size_t cols) : cols_(cols), w_((cols + 63) / 64) {}
    bool add(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
        auto get = [&](const std::vector<std::uint64_t>& xa, const std::vector<std::uint64_t>& xb,
                       std::size_t j) -> unsigned {
            if (xa[j / 64] >> (j % 64) & 1) return 1;
            if (xb[j / 64] >> (j % 64) & 1) return 2;
            return 0;
        };
        auto axpy = [&](std::vector<std::uint64_t>& za, std::vector<std::uint64_t>& zb,
                        const std::vector<std::uint64_t>& ya, const std::vector<std::uint64_t>& yb) {
            for (std::size_t k = 0; k < w_; ++k) {
                const std::uint64_t a1 = za[k], b1 = zb[k], a2 = ya[k], b2 = yb[k];
                const std::uint64_t s = a1 ^ a2, t = b1 ^ b2;
                za[k] = (s & ~t) | (b1 & b2);
                zb[k] = (t & ~s) | (a1 & a2);
            }
        };
        for (std::size_t t = 0; t < ra_.size(); ++t) {
            const unsigned c = get(a, b, pivots_[t]);
            if (c == 1) { // subtract pivot: add 2*pivot
                axpy(a, b, rb_[t], ra_[t]);
            } else if (c == 2) {
                axpy(a, b, ra_[t], rb_[t]);
            }
        }
        std::size_t piv = cols_;
        for (std::size_t j = 0; j < w_ && piv == cols_; ++j) {
            const std::uint64_t nz = a[j] | b[j];
            if (nz) piv = j * 64 + std::size_t(__builtin_ctzll(nz));
        }
        if (piv >= cols_) return false;
        if (get(a, b, piv) == 2) std::swap(a, b); // normalize pivot to 1
        ra_.push_back(std::move(a));
        rb_.push_back(std::move(b));
        pivots_.push_back(piv);
        return true;
    }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

  private:
    std::size_t cols_, w_;
    std::vector<std::vector<std::uint64_t>> ra_, rb_;
    std::vector<std::size_t> pivots_;
};

struct GramSelection {
    std::vector<std::uint32_t> basis;  // selected tableau indices (B)
    std::vector<std::uint32_t> pivcol; // pivot columns (J)
};

// greedy selection of standard polytabloids with independent Gram rows
GramSelection select_basis(const SpechtData& sd, int p) {
    const std::size_t s = std::size_t(sd.s);
    auto ut = gram_upper(sd, p);
    auto at = [&](std::size_t i, std::size_t k) -> std::uint8_t {
        if (i > k) std::swap(i, k);
        const std::uint64_t offi = i * (2 * s - i + 1) / 2;
        return ut[std::size_t(offi + (k - i))];
    };
    GramSelection sel;
    if (p == 2) {
        EchelonTracker2 ech(s);
        const std::size_t w = (s + 63) / 64;
        for (std::size_t i = 0; i < s; ++i) {
            std::vector<std::uint64_t> row(w, 0);
            for (std::size_t k = 0; k < s; ++k)
                if (at(i, k)) row[k / 64] |= 1ULL << (k % 64);
            if (ech.add(std::move(row))) sel.basis.push_back(std::uint32_t(i));
        }
        for (auto pcol : ech.pivots()) sel.pivcol.push_back(std::uint32_t(pcol));
        return sel;
    }
    if (p == 3) {
        EchelonTracker3 ech(s);
        const std::size_t w = (s + 63) / 64;
        for (std::size_t i = 0; i < s; ++i) {
            std::vector<std::uint64_t> a(w, 0), b(w, 0);
            for (std::size_t k = 0; k < s; ++k) {
                const auto v = at(i, k);
                if (v == 1) a[k / 64] |= 1ULL << (k % 64);
                else if (v == 2) b[k / 64] |= 1ULL << (k % 64);
            }
            if (ech.add(std::move(a), std::move(b))) sel.basis.push_back(std::uint32_t(i));
        }
        for (auto pcol : ech.pivots()) sel.pivcol.push_back(std::uint32_t(pcol));
        return sel;
    }
    EchelonTracker ech(p, s);
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<std::uint8_t> row(s);
        for (std::size_t k = 0; k < s; ++k) row[k] = at(i, k);
        if (ech.add(std::move(row))) sel.basis.push_back(std::uint32_t(i));
    }
    for (auto pcol : ech.pivots()) sel.pivcol.push_back(std::uint32_t(pcol));
    return sel;
}

// tabloid image table under the adjacent transposition (i, i+1)
std::vector<std::uint32_t> tabloid_perm(const SpechtData& sd, int i) {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(sd.T));
    const int n = sd.lam.n();
    // enumerate all row words of the right content in rank order by walking
    // the triples? Instead enumerate directly: iterate all words via recursion
    std::vector<std::uint8_t> w(static_cast<std::size_t>(n));
    std::vector<int> counts(std::size_t(sd.lam.rows()));
    for (int r = 0; r < sd.lam.rows(); ++r) counts[std::size_t(r)] = sd.lam.part(r + 1);
    std::uint64_t next_rank = 0;
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            std::swap(w[std::size_t(i)], w[std::size_t(i + 1)]);
            out[std::size_t(next_rank++)] = std::uint32_t(sd.ranker.rank(w.data()));
            std::swap(w[std::size_t(i)], w[std::size_t(i + 1)]);
            return;
        }
        for (int r = 0; r < sd.lam.rows(); ++r) {
            if (!counts[std::size_t(r)]) continue;
            counts[std::size_t(r)]--;
            w[std::size_t(pos)] = std::uint8_t(r);
            rec(pos + 1);
            counts[std::size_t(r)]++;
        }
    };
    rec(0);
    return out;
}

} // namespace

ModuleRep rep_D(const Partition& lam, int p, const OracleLimits& lim,
                const std::vector<int>& gen_subset) {
    require_p_regular(lam, p, "rep_D");
    check_gate(lam, lim, "rep_D");
    const int n = lam.n();
    auto sd = specht_cache(lam);

    auto sel = select_basis(*sd, p);
    const std::size_t r = sel.basis.size();
    ModuleRep rep;
    rep.lam = lam;
    rep.p = p;
    rep.dim = long(r);

    // G[B][J] and its inverse
    const GF& F = gf(p);
    // recompute gram rows of B restricted to J columns: use buckets
    // (cheaper: reuse upper-tri via select? rebuild small matrix directly)
    {
        auto ut = gram_upper(*sd, p);
        const std::size_t s = std::size_t(sd->s);
        auto at = [&](std::size_t i, std::size_t k) -> std::uint8_t {
            if (i > k) std::swap(i, k);
            const std::uint64_t offi = i * (2 * s - i + 1) / 2;
            return ut[std::size_t(offi + (k - i))];
        };
        Mat gbj(p, r, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                gbj(a, b) = at(sel.basis[a], sel.pivcol[b]);
        auto inv = gbj.inverse();
        if (!inv) throw consistency_error("rep_D: pivot Gram block is singular");

        // J-restricted bucket map: tabloid -> list of (j index, signed coeff)
        // held as flat arrays aligned with sd->bucket_start
        std::vector<std::uint32_t> jpos(std::size_t(sd->s), UINT32_MAX);
        for (std::size_t b = 0; b < r; ++b) jpos[sel.pivcol[b]] = std::uint32_t(b);
        std::vector<std::uint32_t> bpos(std::size_t(sd->s), UINT32_MAX);
        for (std::size_t b = 0; b < r; ++b) bpos[sel.basis[b]] = std::uint32_t(b);

        std::vector<int> want;
        if (gen_subset.empty()) {
            for (int i = 0; i + 1 < n; ++i) want.push_back(i);
        } else {
            want = gen_subset;
        }
        rep.coxeter.assign(std::size_t(n - 1), Mat());
        for (int gi : want) {
            auto pi = tabloid_perm(*sd, gi);
            // pairing A[b][j] = coefficient pairing of s_gi e_b against e_j
            Mat A(p, r, r);
            for (std::uint64_t t = 0; t < sd->T; ++t) {
                const std::uint32_t lo = sd->bucket_start[std::size_t(t)];
                const std::uint32_t hi = sd->bucket_start[std::size_t(t) + 1];
                if (lo == hi) continue;
                const std::uint64_t t2 = pi[std::size_t(t)];
                const std::uint32_t lo2 = sd->bucket_start[std::size_t(t2)];
                const std::uint32_t hi2 = sd->bucket_start[std::size_t(t2) + 1];
                if (lo2 == hi2) continue;
                for (std::uint32_t x = lo; x < hi; ++x) {
                    const std::uint32_t ib = bpos[std::size_t((sd->triples[x] >> 1) & 0x7fffff)];
                    if (ib == UINT32_MAX) continue;
                    const bool nx = sd->triples[x] & 1;
                    for (std::uint32_t y = lo2; y < hi2; ++y) {
                        const std::uint32_t jj =
                            jpos[std::size_t((sd->triples[y] >> 1) & 0x7fffff)];
                        if (jj == UINT32_MAX) continue;
                        const bool pos = (nx == ((sd->triples[y] & 1) != 0));
                        auto& cell = A(ib, jj);
                        cell = pos ? F.add(cell, 1) : F.sub(cell, 1);
                    }
                }
            }
            rep.coxeter[std::size_t(gi)] = A * *inv;
        }

        // structural checks on whatever was built
        for (int gi : want) {
            const Mat& M = rep.coxeter[std::size_t(gi)];
            if (!(M * M).is_identity())
                throw consistency_error("rep_D: involution relation failed");
        }
        if (gen_subset.empty() && r <= 4000) {
            for (int i = 0; i + 2 < n && i < 3; ++i) {
                const Mat& a = rep.coxeter[std::size_t(i)];
                const Mat& b = rep.coxeter[std::size_t(i + 1)];
                if (!(a * b * a == b * a * b))
                    throw consistency_error("rep_D: braid relation failed");
            }
            if (n >= 4) {
                const Mat& a = rep.coxeter[0];
                const Mat& b = rep.coxeter[std::size_t(n - 2)];
                if (!(a * b == b * a))
                    throw consistency_error("rep_D: commuting relation failed");
            }
        }
    }
    return rep;
}

Mat rep_matrix(const ModuleRep& rep, const Perm& g) {
    Mat acc = Mat::identity(rep.p, std::size_t(rep.dim));
    for (int i : g.adjacent_transpositions()) {
        const Mat& m = rep.coxeter[std::size_t(i)];
        if (m.rows() == 0) throw invalid_parameter("rep_matrix: generator matrix not built");
        acc = m * acc;
    }
    return acc;
}

std::vector<Mat> restrict_to(const ModuleRep& rep, const GeneratorSet& gs, std::uint64_t seed) {
    if (gs.degree != rep.lam.n())
        throw invalid_parameter("restrict_to: degree mismatch");
    std::vector<Mat> out;
    for (const auto& g : gs.gens) out.push_back(rep_matrix(rep, g));
    // spot-check the (anti)homomorphism property on random pairs
    if (!gs.gens.empty()) {
        Rng rng(stream_seed(seed, "restrict-check"));
        for (int t = 0; t < 2; ++t) {
            const auto& u = gs.gens[std::size_t(rng.below(gs.gens.size()))];
            const auto& v = gs.gens[std::size_t(rng.below(gs.gens.size()))];
            if (!(rep_matrix(rep, u * v) == rep_matrix(rep, v) * rep_matrix(rep, u)))
                throw consistency_error("restrict_to: homomorphism check failed");
        }
    }
    return out;
}

long fixed_space_dim(const std::vector<Mat>& mats) {
    if (mats.empty()) throw invalid_parameter("fixed_space_dim: no matrices");
    const std::size_t r = mats[0].rows();
    const int q = mats[0].q();
    Mat stacked(q, r, mats.size() * r);
    const GF& F = gf(q);
    for (std::size_t g = 0; g < mats.size(); ++g)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                std::uint8_t v = mats[g](i, j);
                if (i == j) v = F.sub(v, 1);
                stacked(i, g * r + j) = v;
            }
    return long(r - stacked.rank());
}

long sign_fixed_space_dim(const std::vector<Mat>& mats, const std::vector<bool>& even) {
    if (mats.empty()) throw invalid_parameter("sign_fixed_space_dim: no matrices");
    const std::size_t r = mats[0].rows();
    const int q = mats[0].q();
    const GF& F = gf(q);
    Mat stacked(q, r, mats.size() * r);
    for (std::size_t g = 0; g < mats.size(); ++g) {
        const std::uint8_t target = even[g] ? 1 : F.neg(1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                std::uint8_t v = mats[g](i, j);
                if (i == j) v = F.sub(v, target);
                stacked(i, g * r + j) = v;
            }
    }
    return long(r - stacked.rank());
}

long min_m_with_linear_submodule(const Partition& lam, int p, const OracleLimits& lim) {
    const int n = lam.n();
    ModuleRep rep = rep_D(lam, p, lim);
    for (int m = 0; m <= n - 1; ++m) {
        const int sub_n = n - m;
        if (sub_n <= 1) return m; // the trivial group surely has linear invariants
        std::vector<Mat> mats;
        std::vector<bool> even;
        for (int i = 0; i + 1 < sub_n; ++i) {
            mats.push_back(rep.coxeter[std::size_t(i)]);
            even.push_back(false);
        }
        if (fixed_space_dim(mats) > 0) return m;
        if (p != 2 && sign_fixed_space_dim(mats, even) > 0) return m;
    }
    return n;
}

std::uint8_t trace_of(const std::vector<Mat>& mats, const std::vector<int>& word) {
    if (mats.empty()) throw invalid_parameter("trace_of: no matrices");
    Mat acc = Mat::identity(mats[0].q(), mats[0].rows());
    for (int i : word) acc = mats[std::size_t(i)] * acc;
    const GF& F = gf(acc.q());
    std::uint8_t t = 0;
    for (std::size_t i = 0; i < acc.rows(); ++i) t = F.add(t, acc(i, i));
    return t;
}

int minpoly_degree_of_3cycle(const ModuleRep& rep) {
    if (rep.p != 2) throw invalid_parameter("minpoly_degree_of_3cycle: requires p = 2");
    if (rep.lam.n() < 3) throw invalid_parameter("minpoly_degree_of_3cycle: n too small");
    const Mat& a = rep.coxeter[0];
    const Mat& b = rep.coxeter[1];
    if (a.rows() == 0 || b.rows() == 0)
        throw invalid_parameter("minpoly_degree_of_3cycle: generators 0 and 1 must be built");
    Mat t = b * a; // matrix of the 3-cycle (0 1 2)
    if (t.is_identity()) return 1;
    Mat t2 = t * t;
    Mat sum = t2 + t + Mat::identity(2, t.rows());
    if (sum.is_zero()) return 2;
    return 3;
}

// ---- commutant and splitting -------------------------------------------------

namespace {

struct SpinBasis {
    Mat B;                       // rows are the basis vectors
    std::vector<int> parent;     // tree structure: parent index
    std::vector<int> gen;        // generator applied to the parent
    bool full = false;
};

SpinBasis spin_with_words(const std::vector<Mat>& mats, const std::vector<std::uint8_t>& v0) {
    const std::size_t r = mats[0].rows();
    const int q = mats[0].q();
    SpinBasis sb;
    EchelonTracker ech(q, r);
    std::vector<std::vector<std::uint8_t>> rows;
    if (!ech.add(v0)) return sb;
    rows.push_back(v0);
    sb.parent.push_back(-1);
    sb.gen.push_back(-1);
    const GF& F = gf(q);
    for (std::size_t k = 0; k < rows.size() && rows.size() < r; ++k) {
        for (std::size_t g = 0; g < mats.size() && rows.size() < r; ++g) {
            std::vector<std::uint8_t> img(r, 0);
            for (std::size_t i = 0; i < r; ++i) {
                const std::uint8_t c = rows[k][i];
                if (!c) continue;
                const std::uint8_t* mr = mats[g].row(i);
                for (std::size_t j = 0; j < r; ++j)
                    if (mr[j]) img[j] = F.add(img[j], F.mul(c, mr[j]));
            }
            if (ech.add(img)) {
                rows.push_back(std::move(img));
                sb.parent.push_back(int(k));
                sb.gen.push_back(int(g));
            }
        }
    }
    if (rows.size() == r) {
        sb.full = true;
        sb.B = Mat(q, r, r);
        for (std::size_t i = 0; i < r; ++i) std::memcpy(sb.B.row(i), rows[i].data(), r);
    }
    return sb;
}

struct CommutantData {
    long dim = 0;
    std::vector<Mat> sols; // solution basis, standard-basis coordinates
    std::vector<Mat> conj; // conjugated generator matrices
    Mat B, Binv;           // the spin-basis change
};

CommutantData commutant_data(const std::vector<Mat>& mats, std::uint64_t seed) {
    if (mats.empty()) throw invalid_parameter("commutant: no matrices");
    const std::size_t r = mats[0].rows();
    const int q = mats[0].q();
    const GF& F = gf(q);
    Rng rng(stream_seed(seed, "commutant"));

    SpinBasis sb;
    for (int attempt = 0; attempt < 12 && !sb.full; ++attempt) {
        std::vector<std::uint8_t> v0(r, 0);
        if (attempt == 0)
            v0[0] = 1;
        else
            for (auto& x : v0) x = std::uint8_t(rng.below(std::uint64_t(q)));
        bool zero = true;
        for (auto x : v0) zero &= x == 0;
        if (zero) continue;
        sb = spin_with_words(mats, v0);
    }
    if (!sb.full)
        throw consistency_error("commutant: no cyclic vector found (module outside the "
                                "expected dichotomy)");

    auto Binv = sb.B.inverse();
    if (!Binv) throw consistency_error("commutant: basis inversion failed");
    // conjugated generators: coordinates w.r.t. the spin basis
    std::vector<Mat> tm;
    for (const auto& m : mats) tm.push_back(sb.B * m * *Binv);

    // word matrices: e_k = e_0 * W_k in the new coordinates
    std::vector<Mat> W(r);
    W[0] = Mat::identity(q, r);
    for (std::size_t k = 1; k < r; ++k)
        W[k] = W[std::size_t(sb.parent[k])] * tm[std::size_t(sb.gen[k])];

    // constraint echelon on the unknown top row x0
    EchelonTracker constraints(q, r);
    auto solution_dim = [&]() { return long(r) - long(constraints.rank()); };

    std::vector<std::vector<std::uint8_t>> constraint_rows; // kept for nullspace

    auto add_constraint = [&](std::vector<std::uint8_t> row) {
        bool nz = false;
        for (auto v : row) nz |= v != 0;
        if (!nz) return;
        if (constraints.add(row)) constraint_rows.push_back(std::move(row));
    };

    auto verify_matrix = [&](const Mat& X) {
        for (const auto& m : tm) {
            if (!(X * m == m * X)) return false;
        }
        return true;
    };

    auto build_X = [&](const std::vector<std::uint8_t>& w) {
        Mat X(q, r, r);
        for (std::size_t k = 0; k < r; ++k) {
            // row k = w * W_k
            for (std::size_t i = 0; i < r; ++i) {
                const std::uint8_t c = w[i];
                if (!c) continue;
                const std::uint8_t* wr = W[k].row(i);
                std::uint8_t* xr = X.row(k);
                for (std::size_t j = 0; j < r; ++j)
                    if (wr[j]) xr[j] = F.add(xr[j], F.mul(c, wr[j]));
            }
        }
        return X;
    };

    // randomized functional stream with certified verification
    for (int round = 0; round < 64; ++round) {
        // random probe vector u and random generator
        for (std::size_t g = 0; g < tm.size(); ++g) {
            std::vector<std::uint8_t> u(r);
            for (auto& x : u) x = std::uint8_t(rng.below(std::uint64_t(q)));
            // y = M_g u, z_j = W_j u, zrows = stack_j (z_j), goal rows:
            // constraint for each k: x0 . (W_k M_g u - sum_j M_g[k][j] W_j u) = 0
            std::vector<std::uint8_t> y(r, 0);
            for (std::size_t i = 0; i < r; ++i) {
                const std::uint8_t* mr = tm[g].row(i);
                std::uint8_t acc = 0;
                for (std::size_t j = 0; j < r; ++j)
                    if (mr[j]) acc = F.add(acc, F.mul(mr[j], u[j]));
                y[i] = acc;
            }
            // Z[j][i] = (W_j u)_i
            Mat Z(q, r, r);
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t i = 0; i < r; ++i) {
                    const std::uint8_t* wr = W[j].row(i);
                    std::uint8_t acc = 0;
                    for (std::size_t c = 0; c < r; ++c)
                        if (wr[c]) acc = F.add(acc, F.mul(wr[c], u[c]));
                    Z(j, i) = acc;
                }
            // first term rows: (W_k y)_i ; second term rows: row k of (M_g Z)
            Mat MZ = tm[g] * Z;
            for (std::size_t k = 0; k < r; ++k) {
                std::vector<std::uint8_t> row(r, 0);
                for (std::size_t i = 0; i < r; ++i) {
                    const std::uint8_t* wr = W[k].row(i);
                    std::uint8_t acc = 0;
                    for (std::size_t c = 0; c < r; ++c)
                        if (wr[c]) acc = F.add(acc, F.mul(wr[c], y[c]));
                    row[i] = F.sub(acc, MZ(k, i));
                }
                add_constraint(std::move(row));
            }
        }
        // candidate check
        const long cand = solution_dim();
        if (cand <= 1) break;
        // build solution space basis and verify each element commutes
        Mat cmat(q, constraint_rows.size(), r);
        for (std::size_t i = 0; i < constraint_rows.size(); ++i)
            std::memcpy(cmat.row(i), constraint_rows[i].data(), r);
        Mat null = cmat.nullspace();
        if (long(null.rows()) != cand) throw consistency_error("commutant: rank bookkeeping");
        bool all_ok = true;
        std::vector<Mat> sols;
        for (std::size_t t = 0; t < null.rows(); ++t) {
            std::vector<std::uint8_t> w(null.row(t), null.row(t) + r);
            Mat X = build_X(w);
            if (!verify_matrix(X)) {
                all_ok = false;
                break;
            }
            sols.push_back(std::move(X));
        }
        if (all_ok) {
            CommutantData out;
            out.dim = cand;
            out.sols = std::move(sols);
            out.conj = std::move(tm);
            out.B = sb.B;
            out.Binv = *Binv;
            return out;
        }
    }
    // saturated at dimension 1: the identity is the whole commutant
    CommutantData out;
    out.dim = solution_dim();
    if (out.dim != 1) throw consistency_error("commutant: functional stream failed to settle");
    out.sols = {Mat::identity(q, r)};
    out.conj = std::move(tm);
    out.B = sb.B;
    out.Binv = *Binv;
    return out;
}

} // namespace

long commutant_dim(const std::vector<Mat>& mats, std::uint64_t seed) {
    return commutant_data(mats, seed).dim;
}

bool splits_over_An(const Partition& lam, int p, std::uint64_t seed, const OracleLimits& lim) {
    require_p_regular(lam, p, "splits_over_An");
    check_gate(lam, lim, "splits_over_An");
    const int n = lam.n();
    ModuleRep rep = rep_D(lam, p, lim);
    GeneratorSet alt = young_gens({n}, n, true);
    auto mats = restrict_to(rep, alt, seed);
    const long d = commutant_dim(mats, seed);
    if (d == 1) return false;
    if (d == 2) return true;
    throw consistency_error("splits_over_An: commutant dimension outside {1,2}");
}

SplitPair split_components(const std::vector<Mat>& defining, const std::vector<Mat>& extra,
                           std::uint64_t seed) {
    const std::vector<Mat>& mats = defining;
    auto cd = commutant_data(mats, seed);
    if (cd.dim != 2)
        throw invalid_parameter("split_components: the restriction does not split");
    const int q = mats[0].q();
    const std::size_t r = mats[0].rows();
    const GF& F = gf(q);
    // pick a non-scalar element of the commutant (standard-basis coordinates)
    Mat X;
    bool have = false;
    for (const auto& s : cd.sols) {
        bool scalar = true;
        const std::uint8_t d0 = s(0, 0);
        for (std::size_t i = 0; i < r && scalar; ++i)
            for (std::size_t j = 0; j < r && scalar; ++j)
                if (s(i, j) != (i == j ? d0 : 0)) scalar = false;
        if (!scalar) {
            X = s;
            have = true;
            break;
        }
    }
    if (!have) throw consistency_error("split_components: commutant has no non-scalar element");

    // minimal polynomial of X has degree 2: find it from I, X, X^2
    Mat X2 = X * X;
    // solve X^2 = a X + b I
    // use two independent positions
    std::uint8_t a = 0, b = 0;
    {
        // find (i,j), i != j with X[i][j] != 0 to pin a
        bool pinned = false;
        for (std::size_t i = 0; i < r && !pinned; ++i)
            for (std::size_t j = 0; j < r && !pinned; ++j) {
                if (i == j || !X(i, j)) continue;
                a = F.div(X2(i, j), X(i, j));
                pinned = true;
            }
        if (!pinned) throw consistency_error("split_components: endomorphism looks scalar");
        b = F.sub(X2(0, 0), F.mul(a, X(0, 0)));
        Mat check = X2 - X.scaled(a);
        for (std::size_t i = 0; i < r; ++i) check(i, i) = F.sub(check(i, i), b);
        if (!check.is_zero())
            throw consistency_error("split_components: quadratic relation failed");
    }
    // roots of t^2 - a t - b
    Poly quad(q, {F.neg(b), F.neg(a), 1});
    Rng rng(stream_seed(seed, "split-roots"));
    auto factors = factor_poly(quad, rng);
    int work_q = q;
    Mat Xw = X;
    std::vector<Mat> mw = cd.conj;
    std::vector<std::uint8_t> roots;
    if (factors.size() == 2 || (factors.size() == 1 && factors[0].second == 2)) {
        if (factors.size() == 1)
            throw consistency_error("split_components: repeated eigenvalue in the commutant");
        for (auto& [f, m] : factors) roots.push_back(gf(q).neg(f.coeff(0)));
    } else {
        // quadratic irreducible: pass to the degree-two extension
        int bigq = q * q;
        work_q = bigq;
        Xw = X.lifted_to(bigq);
        for (auto& m : mw) m = m.lifted_to(bigq);
        Poly lifted(bigq, {gf(q).embedding_into(gf(bigq))[F.neg(b)],
                           gf(q).embedding_into(gf(bigq))[F.neg(a)], 1});
        auto bf = factor_poly(lifted, rng);
        if (bf.size() != 2)
            throw consistency_error("split_components: quadratic did not split over the "
                                    "extension");
        for (auto& [f, m] : bf) roots.push_back(gf(bigq).neg(f.coeff(0)));
    }
    const GF& Fw = gf(work_q);
    // the extra matrices, moved to the same coordinates (and field)
    std::vector<Mat> ew;
    for (const auto& m : extra) {
        Mat t = cd.B * m * cd.Binv;
        ew.push_back(work_q == q ? t : t.lifted_to(work_q));
    }
    SplitPair out;
    out.q = work_q;
    std::vector<Mat> kernels;
    for (auto root : roots) {
        Mat shifted = Xw;
        for (std::size_t i = 0; i < r; ++i) shifted(i, i) = Fw.sub(shifted(i, i), root);
        kernels.push_back(shifted.transpose().nullspace()); // row space fixed by X
    }
    if (kernels[0].rows() + kernels[1].rows() != r)
        throw consistency_error("split_components: eigenspace dimensions do not add up");
    Mat P(work_q, r, r);
    for (std::size_t i = 0; i < kernels[0].rows(); ++i)
        std::memcpy(P.row(i), kernels[0].row(i), r);
    for (std::size_t i = 0; i < kernels[1].rows(); ++i)
        std::memcpy(P.row(kernels[0].rows() + i), kernels[1].row(i), r);
    auto Pinv = P.inverse();
    if (!Pinv) throw consistency_error("split_components: eigenbasis is singular");
    const std::size_t d0 = kernels[0].rows();
    auto cut = [&](const Mat& m, std::vector<Mat>& hi, std::vector<Mat>& lo) {
        Mat conj = P * m * *Pinv;
        Mat mplus(work_q, d0, d0), mminus(work_q, r - d0, r - d0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                const bool bi = i < d0, bj = j < d0;
                if (bi && bj)
                    mplus(i, j) = conj(i, j);
                else if (!bi && !bj)
                    mminus(i - d0, j - d0) = conj(i, j);
                else if (conj(i, j))
                    throw consistency_error("split_components: block structure violated");
            }
        hi.push_back(std::move(mplus));
        lo.push_back(std::move(mminus));
    };
    for (const auto& m : mw) cut(m, out.plus, out.minus);
    for (const auto& m : ew) cut(m, out.plus_extra, out.minus_extra);
    return out;
}

std::optional<long> brauer_value_order9(const Mat& g) {
    const int q = g.q();
    const GF& F = gf(q);
    if (F.characteristic() != 2)
        throw invalid_parameter("brauer_value_order9: characteristic two only");
    Mat lifted = g.lifted_to(64);
    const GF& F64 = gf(64);
    // an element of multiplicative order 9
    const std::uint8_t zeta = F64.pow(std::uint8_t(F64.generator()), 7);
    const std::size_t r = lifted.rows();
    long mult[9];
    long total = 0;
    for (int k = 0; k < 9; ++k) {
        Mat shifted = lifted;
        const std::uint8_t ev = F64.pow(zeta, k);
        for (std::size_t i = 0; i < r; ++i) shifted(i, i) = F64.sub(shifted(i, i), ev);
        mult[k] = long(r - shifted.rank());
        total += mult[k];
    }
    if (total != long(r)) return std::nullopt; // not diagonalizable with ninth roots
    // value = sum mult[k] zeta9^k reduced mod the ninth cyclotomic polynomial
    long c[9];
    for (int k = 0; k < 9; ++k) c[k] = mult[k];
    // x^6 = -x^3 - 1
    for (int k = 8; k >= 6; --k) {
        const long v = c[k];
        if (!v) continue;
        c[k] = 0;
        c[k - 3] -= v;
        c[k - 6] -= v;
    }
    for (int k = 1; k <= 5; ++k)
        if (c[k] != 0) return std::nullopt; // irrational value
    return c[0];
}

std::optional<std::vector<int>> find_element_of_order(const GeneratorSet& gs, int order,
                                                      std::uint64_t seed, int attempts) {
    Rng rng(stream_seed(seed, "order-search"));
    auto order_of = [&](const Perm& g) {
        Perm x = g;
        int o = 1;
        while (!x.is_identity()) {
            x = x * g;
            ++o;
            if (o > 10000) return -1;
        }
        return o;
    };
    std::vector<int> word;
    Perm acc = Perm::identity(gs.degree);
    for (int t = 0; t < attempts; ++t) {
        const int gi = int(rng.below(gs.gens.size()));
        word.push_back(gi);
        acc = gs.gens[std::size_t(gi)] * acc;
        const int o = order_of(acc);
        if (o == order) return word;
        if (o <= 0 || word.size() > 40) {
            word.clear();
            acc = Perm::identity(gs.degree);
        }
    }
    return std::nullopt;
}

} // namespace symrep
