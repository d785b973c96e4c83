#include "symrep/fplinear.hpp"

#include <algorithm>
#include <cstring>

namespace symrep {

namespace {

constexpr std::size_t kPackThreshold = 96; // below this, byte elimination wins

// ---- packed GF(2) helpers --------------------------------------------------

std::vector<std::uint64_t> pack_gf2(const Mat& m) {
    const std::size_t w = (m.cols() + 63) / 64;
    std::vector<std::uint64_t> out(m.rows() * w, 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::uint8_t* r = m.row(i);
        std::uint64_t* o = out.data() + i * w;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (r[j]) o[j / 64] |= 1ULL << (j % 64);
    }
    return out;
}

SlicedGf3 slice_gf3(const Mat& m) {
    SlicedGf3 s;
    s.init(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::uint8_t* r = m.row(i);
        std::uint64_t* pa = s.a.data() + i * s.words;
        std::uint64_t* pb = s.b.data() + i * s.words;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (r[j] == 1)
                pa[j / 64] |= 1ULL << (j % 64);
            else if (r[j] == 2)
                pb[j / 64] |= 1ULL << (j % 64);
        }
    }
    return s;
}

inline void axpy_gf3(std::uint64_t* za, std::uint64_t* zb, const std::uint64_t* ya,
                     const std::uint64_t* yb, std::size_t w) {
    for (std::size_t k = 0; k < w; ++k) {
        const std::uint64_t a1 = za[k], b1 = zb[k], a2 = ya[k], b2 = yb[k];
        const std::uint64_t s = a1 ^ a2, t = b1 ^ b2;
        za[k] = (s & ~t) | (b1 & b2);
        zb[k] = (t & ~s) | (a1 & a2);
    }
}

} // namespace

std::size_t rank_gf2_packed(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t words) {
    const std::size_t cols = words * 64;
    constexpr std::size_t K = 8;
    auto rowp = [&](std::size_t i) { return m.data() + i * words; };
    auto entry = [&](std::size_t i, std::size_t c) -> unsigned {
        return unsigned((rowp(i)[c / 64] >> (c % 64)) & 1u);
    };
    std::size_t r = 0, col = 0;
    std::vector<std::uint64_t> table;
    while (r < rows && col < cols) {
        // collect up to K staircase pivots starting at column `col`
        std::size_t pivcol[K];
        std::size_t k = 0;
        std::size_t c = col;
        while (k < K && c < cols && r + k < rows) {
            // effective entry of row i at column c after clearing earlier group pivots
            std::size_t found = rows;
            unsigned digs[K];
            for (std::size_t i = r + k; i < rows; ++i) {
                unsigned e[K];
                for (std::size_t t = 0; t < k; ++t) {
                    unsigned v = entry(i, pivcol[t]);
                    for (std::size_t u = 0; u < t; ++u) v ^= e[u] & entry(r + u, pivcol[t]);
                    e[t] = v;
                }
                unsigned v = entry(i, c);
                for (std::size_t u = 0; u < k; ++u) v ^= e[u] & entry(r + u, c);
                if (v) {
                    found = i;
                    for (std::size_t u = 0; u < k; ++u) digs[u] = e[u];
                    break;
                }
            }
            if (found == rows) {
                ++c;
                continue;
            }
            if (found != r + k)
                std::swap_ranges(rowp(found), rowp(found) + words, rowp(r + k));
            // make it a staircase row: clear its entries at earlier pivot columns
            for (std::size_t u = 0; u < k; ++u)
                if (digs[u])
                    for (std::size_t w = 0; w < words; ++w) rowp(r + k)[w] ^= rowp(r + u)[w];
            pivcol[k++] = c++;
        }
        if (k == 0) break;
        // combination table of the k pivot rows
        table.assign((std::size_t(1) << k) * words, 0);
        for (std::size_t t = 0; t < k; ++t) {
            const std::size_t lo = std::size_t(1) << t;
            for (std::size_t idx = 0; idx < lo; ++idx)
                for (std::size_t w = 0; w < words; ++w)
                    table[(lo + idx) * words + w] = table[idx * words + w] ^ rowp(r + t)[w];
        }
        for (std::size_t i = r + k; i < rows; ++i) {
            std::size_t idx = 0;
            unsigned e[K];
            for (std::size_t t = 0; t < k; ++t) {
                unsigned v = entry(i, pivcol[t]);
                for (std::size_t u = 0; u < t; ++u) v ^= e[u] & entry(r + u, pivcol[t]);
                e[t] = v;
                idx |= std::size_t(v) << t;
            }
            if (!idx) continue;
            const std::uint64_t* src = table.data() + idx * words;
            std::uint64_t* dst = rowp(i);
            for (std::size_t w = 0; w < words; ++w) dst[w] ^= src[w];
        }
        r += k;
        col = pivcol[k - 1] + 1;
    }
    return r;
}

std::size_t rank_gf3_sliced(SlicedGf3& m) {
    const std::size_t rows = m.rows, words = m.words, cols = m.cols;
    constexpr std::size_t K = 4;
    auto pa = [&](std::size_t i) { return m.a.data() + i * words; };
    auto pb = [&](std::size_t i) { return m.b.data() + i * words; };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap_ranges(pa(i), pa(i) + words, pa(j));
        std::swap_ranges(pb(i), pb(i) + words, pb(j));
    };
    auto negate_row = [&](std::size_t i) { std::swap_ranges(pa(i), pa(i) + words, pb(i)); };
    auto get = [&](std::size_t i, std::size_t c) -> unsigned {
        const std::uint64_t bit = 1ULL << (c % 64);
        if (pa(i)[c / 64] & bit) return 1;
        if (pb(i)[c / 64] & bit) return 2;
        return 0;
    };

    std::size_t r = 0, col = 0;
    std::vector<std::uint64_t> ta, tb; // combo tables, 3^k rows
    while (r < rows && col < cols) {
        std::size_t pivcol[K];
        std::size_t k = 0;
        std::size_t c = col;
        while (k < K && c < cols && r + k < rows) {
            std::size_t found = rows;
            unsigned digs[K];
            for (std::size_t i = r + k; i < rows; ++i) {
                unsigned e[K];
                for (std::size_t t = 0; t < k; ++t) {
                    int v = int(get(i, pivcol[t]));
                    for (std::size_t u = 0; u < t; ++u) v -= int(e[u] * get(r + u, pivcol[t]));
                    e[t] = unsigned(((v % 3) + 3) % 3);
                }
                int v = int(get(i, c));
                for (std::size_t u = 0; u < k; ++u) v -= int(e[u] * get(r + u, c));
                v = ((v % 3) + 3) % 3;
                if (v) {
                    found = i;
                    for (std::size_t u = 0; u < k; ++u) digs[u] = e[u];
                    break;
                }
            }
            if (found == rows) {
                ++c;
                continue;
            }
            if (found != r + k) swap_rows(found, r + k);
            for (std::size_t u = 0; u < k; ++u) {
                if (!digs[u]) continue;
                // subtract digs[u] * pivot_u: adding (3 - d) copies
                unsigned reps = 3 - digs[u];
                for (unsigned z = 0; z < reps; ++z)
                    axpy_gf3(pa(r + k), pb(r + k), pa(r + u), pb(r + u), words);
            }
            if (get(r + k, c) == 2) negate_row(r + k);
            pivcol[k++] = c++;
        }
        if (k == 0) break;
        std::size_t tsize = 1;
        for (std::size_t t = 0; t < k; ++t) tsize *= 3;
        ta.assign(tsize * words, 0);
        tb.assign(tsize * words, 0);
        std::size_t p3 = 1;
        for (std::size_t t = 0; t < k; ++t) {
            for (unsigned d = 1; d <= 2; ++d)
                for (std::size_t lo = 0; lo < p3; ++lo) {
                    const std::size_t dst = d * p3 + lo, src = (d - 1) * p3 + lo;
                    std::memcpy(ta.data() + dst * words, ta.data() + src * words, words * 8);
                    std::memcpy(tb.data() + dst * words, tb.data() + src * words, words * 8);
                    axpy_gf3(ta.data() + dst * words, tb.data() + dst * words, pa(r + t),
                             pb(r + t), words);
                }
            p3 *= 3;
        }
        for (std::size_t i = r + k; i < rows; ++i) {
            unsigned e[K];
            std::size_t idx = 0;
            std::size_t mul = 1;
            for (std::size_t t = 0; t < k; ++t) {
                int v = int(get(i, pivcol[t]));
                for (std::size_t u = 0; u < t; ++u) v -= int(e[u] * get(r + u, pivcol[t]));
                e[t] = unsigned(((v % 3) + 3) % 3);
                idx += ((3 - e[t]) % 3) * mul;
                mul *= 3;
            }
            if (!idx) continue;
            axpy_gf3(pa(i), pb(i), ta.data() + idx * words, tb.data() + idx * words, words);
        }
        r += k;
        col = pivcol[k - 1] + 1;
    }
    return r;
}

// ---- Mat -------------------------------------------------------------------

Mat Mat::identity(int q, std::size_t n) {
    Mat m(q, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (auto v : a_)
        if (v) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    const GF& F = gf(q_);
    Mat out(q_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = F.add(a_[i], o.a_[i]);
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    const GF& F = gf(q_);
    Mat out(q_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = F.sub(a_[i], o.a_[i]);
    return out;
}

Mat Mat::scaled(std::uint8_t c) const {
    const GF& F = gf(q_);
    Mat out(q_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = F.mul(a_[i], c);
    return out;
}

Mat Mat::transpose() const {
    Mat out(q_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_ || q_ != o.q_) throw invalid_parameter("Mat: shape/field mismatch");
    Mat out(q_, rows_, o.cols_);
    const std::size_t n = rows_, m = cols_, p = o.cols_;
    if (q_ == 2 && p >= kPackThreshold) {
        // method of four Russians on 8-row groups of o
        const std::size_t w = (p + 63) / 64;
        auto B = pack_gf2(o);
        std::vector<std::uint64_t> C(n * w, 0);
        std::vector<std::uint64_t> table(256 * w);
        for (std::size_t g = 0; g < m; g += 8) {
            const std::size_t k = std::min<std::size_t>(8, m - g);
            std::fill(table.begin(), table.begin() + (std::size_t(1) << k) * w, 0);
            for (std::size_t t = 0; t < k; ++t) {
                const std::size_t lo = std::size_t(1) << t;
                for (std::size_t idx = 0; idx < lo; ++idx)
                    for (std::size_t u = 0; u < w; ++u)
                        table[(lo + idx) * w + u] = table[idx * w + u] ^ B[(g + t) * w + u];
            }
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t idx = 0;
                for (std::size_t t = 0; t < k; ++t)
                    idx |= std::size_t((*this)(i, g + t) & 1) << t;
                if (!idx) continue;
                const std::uint64_t* src = table.data() + idx * w;
                std::uint64_t* dst = C.data() + i * w;
                for (std::size_t u = 0; u < w; ++u) dst[u] ^= src[u];
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < p; ++j)
                out(i, j) = std::uint8_t((C[i * w + j / 64] >> (j % 64)) & 1u);
        return out;
    }
    if (q_ == 3 && p >= kPackThreshold) {
        auto B = slice_gf3(o);
        SlicedGf3 C;
        C.init(n, p);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t* ca = C.a.data() + i * C.words;
            std::uint64_t* cb = C.b.data() + i * C.words;
            for (std::size_t kk = 0; kk < m; ++kk) {
                const std::uint8_t c = (*this)(i, kk);
                if (!c) continue;
                const std::uint64_t* ya = B.a.data() + kk * B.words;
                const std::uint64_t* yb = B.b.data() + kk * B.words;
                if (c == 1)
                    axpy_gf3(ca, cb, ya, yb, C.words);
                else
                    axpy_gf3(ca, cb, yb, ya, C.words); // times 2 = swapped planes
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < p; ++j) out(i, j) = C.get(i, j);
        return out;
    }
    const GF& F = gf(q_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t kk = 0; kk < m; ++kk) {
            const std::uint8_t c = (*this)(i, kk);
            if (!c) continue;
            const std::uint8_t* br = o.row(kk);
            std::uint8_t* cr = out.row(i);
            for (std::size_t j = 0; j < p; ++j)
                if (br[j]) cr[j] = F.add(cr[j], F.mul(c, br[j]));
        }
    return out;
}

std::size_t Mat::rank() const {
    if (q_ == 2 && cols_ >= kPackThreshold) {
        auto packed = pack_gf2(*this);
        return rank_gf2_packed(packed, rows_, (cols_ + 63) / 64);
    }
    if (q_ == 3 && cols_ >= kPackThreshold) {
        auto s = slice_gf3(*this);
        return rank_gf3_sliced(s);
    }
    Mat tmp = *this;
    return tmp.rref_inplace().size();
}

std::vector<std::size_t> Mat::rref_inplace() {
    const GF& F = gf(q_);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = rows_;
        for (std::size_t i = r; i < rows_; ++i)
            if ((*this)(i, c)) {
                piv = i;
                break;
            }
        if (piv == rows_) continue;
        if (piv != r)
            std::swap_ranges(row(piv), row(piv) + cols_, row(r));
        const std::uint8_t inv = F.inv((*this)(r, c));
        if (inv != 1)
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = F.mul((*this)(r, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const std::uint8_t f = (*this)(i, c);
            if (!f) continue;
            for (std::size_t j = c; j < cols_; ++j)
                (*this)(i, j) = F.sub((*this)(i, j), F.mul(f, (*this)(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Mat Mat::nullspace() const {
    Mat tmp = *this;
    auto pivots = tmp.rref_inplace();
    std::vector<bool> is_piv(cols_, false);
    for (auto c : pivots) is_piv[c] = true;
    const GF& F = gf(q_);
    const std::size_t nul = cols_ - pivots.size();
    Mat out(q_, nul, cols_);
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_piv[c]) continue;
        out(k, c) = 1;
        for (std::size_t t = 0; t < pivots.size(); ++t)
            out(k, pivots[t]) = F.neg(tmp(t, c));
        ++k;
    }
    return out;
}

namespace {

// Gauss-Jordan inverse on packed GF(2) rows
std::optional<Mat> inverse_gf2_packed(const Mat& m) {
    const std::size_t n = m.rows();
    const std::size_t w = (2 * n + 63) / 64;
    std::vector<std::uint64_t> a(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j)) a[i * w + j / 64] |= 1ULL << (j % 64);
        const std::size_t j = n + i;
        a[i * w + j / 64] |= 1ULL << (j % 64);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (a[i * w + c / 64] >> (c % 64) & 1) {
                piv = i;
                break;
            }
        if (piv == n) return std::nullopt;
        if (piv != c)
            std::swap_ranges(a.begin() + long(piv * w), a.begin() + long((piv + 1) * w),
                             a.begin() + long(c * w));
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            if (a[i * w + c / 64] >> (c % 64) & 1)
                for (std::size_t k = 0; k < w; ++k) a[i * w + k] ^= a[c * w + k];
        }
    }
    Mat out(2, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = std::uint8_t(a[i * w + (n + j) / 64] >> ((n + j) % 64) & 1);
    return out;
}

std::optional<Mat> inverse_gf3_sliced(const Mat& m) {
    const std::size_t n = m.rows();
    SlicedGf3 s;
    s.init(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s.set(i, j, m(i, j));
        s.set(i, n + i, 1);
    }
    auto pa = [&](std::size_t i) { return s.a.data() + i * s.words; };
    auto pb = [&](std::size_t i) { return s.b.data() + i * s.words; };
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (s.get(i, c)) {
                piv = i;
                break;
            }
        if (piv == n) return std::nullopt;
        if (piv != c) {
            std::swap_ranges(pa(piv), pa(piv) + s.words, pa(c));
            std::swap_ranges(pb(piv), pb(piv) + s.words, pb(c));
        }
        if (s.get(c, c) == 2) std::swap_ranges(pa(c), pa(c) + s.words, pb(c));
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            const std::uint8_t e = s.get(i, c);
            if (!e) continue;
            // subtract e * pivot = add (3 - e) * pivot
            const std::uint64_t* ya = e == 1 ? pb(c) : pa(c); // (3-e)=2 swaps planes
            const std::uint64_t* yb = e == 1 ? pa(c) : pb(c);
            for (std::size_t k = 0; k < s.words; ++k) {
                const std::uint64_t a1 = pa(i)[k], b1 = pb(i)[k], a2 = ya[k], b2 = yb[k];
                const std::uint64_t sx = a1 ^ a2, t = b1 ^ b2;
                pa(i)[k] = (sx & ~t) | (b1 & b2);
                pb(i)[k] = (t & ~sx) | (a1 & a2);
            }
        }
    }
    Mat out(3, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = s.get(i, n + j);
    return out;
}

} // namespace

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    if (q_ == 2 && rows_ >= kPackThreshold) return inverse_gf2_packed(*this);
    if (q_ == 3 && rows_ >= kPackThreshold) return inverse_gf3_sliced(*this);
    Mat aug(q_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::memcpy(aug.row(i), row(i), cols_);
        aug(i, cols_ + i) = 1;
    }
    auto piv = aug.rref_inplace();
    if (piv.size() != rows_ || piv.back() != cols_ - 1) {
        for (std::size_t t = 0; t < piv.size(); ++t)
            if (piv[t] >= cols_) return std::nullopt;
        if (piv.size() != rows_) return std::nullopt;
    }
    Mat out(q_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) std::memcpy(out.row(i), aug.row(i) + cols_, cols_);
    return out;
}

Mat Mat::solve_left(const Mat& A, const Mat& B) {
    // x A = B  <=>  A^T x^T = B^T
    auto inv = A.inverse();
    if (!inv) throw invalid_parameter("Mat: singular system");
    return B * *inv;
}

Mat Mat::lifted_to(int bigq) const {
    const GF& small = gf(q_);
    const GF& big = gf(bigq);
    auto emb = small.embedding_into(big);
    Mat out(bigq, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = emb[a_[i]];
    return out;
}

// ---- Poly ------------------------------------------------------------------

Poly Poly::operator+(const Poly& o) const {
    const GF& F = gf(q_);
    std::vector<std::uint8_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(coeff(i), o.coeff(i));
    return Poly(q_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    const GF& F = gf(q_);
    std::vector<std::uint8_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(coeff(i), o.coeff(i));
    return Poly(q_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(q_, {});
    const GF& F = gf(q_);
    std::vector<std::uint8_t> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(c_[i], o.c_[j]));
    }
    return Poly(q_, std::move(c));
}

Poly Poly::scaled(std::uint8_t v) const {
    const GF& F = gf(q_);
    std::vector<std::uint8_t> c(c_);
    for (auto& x : c) x = F.mul(x, v);
    return Poly(q_, std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const GF& F = gf(q_);
    return scaled(F.inv(c_.back()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw invalid_parameter("Poly: division by zero");
    const GF& F = gf(q_);
    std::vector<std::uint8_t> rem(c_);
    const long dd = d.degree();
    if (long(rem.size()) - 1 < dd) return {Poly(q_, {}), *this};
    std::vector<std::uint8_t> quo(rem.size() - dd, 0);
    const std::uint8_t lead_inv = F.inv(d.c_.back());
    for (long i = long(rem.size()) - 1; i >= dd; --i) {
        const std::uint8_t f = F.mul(rem[i], lead_inv);
        if (!f) continue;
        quo[i - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(f, d.c_[j]));
    }
    return {Poly(q_, std::move(quo)), Poly(q_, std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly Poly::powmod(unsigned long long e, const Poly& m) const {
    Poly base = *this % m;
    Poly out = Poly::constant(q_, 1);
    while (e) {
        if (e & 1) out = (out * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return out;
}

Mat Poly::eval(const Mat& M) const {
    Mat out(M.q(), M.rows(), M.cols());
    // Horner
    for (long i = degree(); i >= 0; --i) {
        out = out * M;
        const std::uint8_t c = coeff(static_cast<std::size_t>(i));
        if (c) {
            const GF& F = gf(M.q());
            for (std::size_t d = 0; d < M.rows(); ++d) out(d, d) = F.add(out(d, d), c);
        }
    }
    return out;
}

Poly charpoly(const Mat& M) {
    if (M.rows() != M.cols()) throw invalid_parameter("charpoly: square matrix required");
    const std::size_t n = M.rows();
    const int q = M.q();
    const GF& F = gf(q);
    Mat H = M;
    if (n >= 3) {
        for (std::size_t j = 0; j + 2 < n; ++j) {
            std::size_t piv = n;
            for (std::size_t i = j + 1; i < n; ++i)
                if (H(i, j)) {
                    piv = i;
                    break;
                }
            if (piv == n) continue;
            if (piv != j + 1) {
                for (std::size_t c = 0; c < n; ++c) std::swap(H(piv, c), H(j + 1, c));
                for (std::size_t r = 0; r < n; ++r) std::swap(H(r, piv), H(r, j + 1));
            }
            const std::uint8_t inv = F.inv(H(j + 1, j));
            for (std::size_t i = j + 2; i < n; ++i) {
                const std::uint8_t f = F.mul(H(i, j), inv);
                if (!f) continue;
                for (std::size_t c = j; c < n; ++c) H(i, c) = F.sub(H(i, c), F.mul(f, H(j + 1, c)));
                for (std::size_t r = 0; r < n; ++r) H(r, j + 1) = F.add(H(r, j + 1), F.mul(f, H(r, i)));
            }
        }
    }
    // recurrence on leading principal minors of (xI - H)
    std::vector<Poly> p(n + 1, Poly(q, {}));
    p[0] = Poly::constant(q, 1);
    for (std::size_t k = 1; k <= n; ++k) {
        Poly xc(q, {F.neg(H(k - 1, k - 1)), 1});
        p[k] = xc * p[k - 1];
        std::uint8_t beta = 1;
        for (std::size_t m = 1; m < k; ++m) {
            beta = F.mul(beta, H(k - m, k - m - 1));
            if (!beta) break;
            const std::uint8_t hval = H(k - 1 - m, k - 1);
            if (!hval) continue;
            p[k] = p[k] - p[k - 1 - m].scaled(F.mul(hval, beta));
        }
    }
    return p[n];
}

namespace {

// x^(q^d) mod f by iterated q-th powering
Poly frob_power(const Poly& x, const Poly& f, unsigned d) {
    Poly out = x % f;
    for (unsigned i = 0; i < d; ++i) out = out.powmod(static_cast<unsigned long long>(f.q()), f);
    return out;
}

Poly random_poly(int q, long deg_below, Rng& rng) {
    std::vector<std::uint8_t> c(std::size_t(deg_below), 0);
    for (auto& v : c) v = std::uint8_t(rng.below(std::uint64_t(q)));
    return Poly(q, std::move(c));
}

void equal_degree_split(const Poly& h, unsigned d, Rng& rng, std::vector<Poly>& out) {
    if (h.degree() == long(d)) {
        out.push_back(h.monic());
        return;
    }
    const int q = h.q();
    const GF& F = gf(q);
    const int r = F.characteristic();
    for (int attempt = 0; attempt < 400; ++attempt) {
        Poly t = random_poly(q, h.degree(), rng);
        if (t.degree() < 1) continue;
        Poly g = Poly::gcd(t, h);
        if (g.degree() > 0 && g.degree() < h.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split((h / g).monic(), d, rng, out);
            return;
        }
        Poly s;
        if (r == 2) {
            // trace map to GF(2): sum of 2^i-th powers
            const unsigned k = unsigned(F.degree()) * d;
            Poly acc = t % h;
            Poly cur = acc;
            for (unsigned i = 1; i < k; ++i) {
                cur = (cur * cur) % h;
                acc = acc + cur;
            }
            s = acc;
        } else {
            // norm to GF(q), then (q-1)/2 power
            Poly nrm = t % h;
            Poly pw = t % h;
            for (unsigned i = 1; i < d; ++i) {
                pw = pw.powmod(static_cast<unsigned long long>(q), h);
                nrm = (nrm * pw) % h;
            }
            s = nrm.powmod(static_cast<unsigned long long>((q - 1) / 2), h) -
                Poly::constant(q, 1);
        }
        g = Poly::gcd(s, h);
        if (g.degree() > 0 && g.degree() < h.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split((h / g).monic(), d, rng, out);
            return;
        }
    }
    throw inconclusive("equal-degree splitting exhausted its attempts");
}

void factor_squarefree(const Poly& f, Rng& rng, std::vector<Poly>& out) {
    Poly rem = f.monic();
    Poly x = Poly::x(f.q());
    Poly xq = x;
    unsigned d = 0;
    while (rem.degree() > 0) {
        if (2 * long(d + 1) > rem.degree()) {
            out.push_back(rem.monic());
            break;
        }
        ++d;
        xq = xq.powmod(static_cast<unsigned long long>(f.q()), rem);
        Poly g = Poly::gcd(xq - x, rem);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            rem = (rem / g).monic();
            xq = xq % rem;
        }
    }
}

} // namespace

std::vector<std::pair<Poly, unsigned>> factor_poly(const Poly& f, Rng& rng) {
    if (f.is_zero()) throw invalid_parameter("factor_poly: zero polynomial");
    std::vector<std::pair<Poly, unsigned>> result;
    Poly work = f.monic();
    if (work.degree() == 0) return result;
    const GF& F = gf(f.q());
    const int r = F.characteristic();

    // peel squarefree layers; handle f' == 0 via p-th roots
    while (work.degree() > 0) {
        // derivative
        std::vector<std::uint8_t> dc;
        for (long i = 1; i <= work.degree(); ++i) {
            std::uint8_t c = 0;
            const int mult = int(i % r);
            for (int t = 0; t < mult; ++t) c = F.add(c, work.coeff(static_cast<std::size_t>(i)));
            dc.push_back(c);
        }
        Poly deriv(f.q(), std::move(dc));
        if (deriv.is_zero()) {
            // work = h(x^r); r-th root of coefficients
            std::vector<std::uint8_t> hc;
            for (long i = 0; i <= work.degree(); i += r) {
                std::uint8_t c = work.coeff(static_cast<std::size_t>(i));
                // c^(q/r) is the r-th root in GF(q)
                int e = F.q() / r;
                std::uint8_t rt = 1, b = c;
                while (e) {
                    if (e & 1) rt = F.mul(rt, b);
                    b = F.mul(b, b);
                    e >>= 1;
                }
                hc.push_back(rt);
            }
            auto sub = factor_poly(Poly(f.q(), std::move(hc)), rng);
            for (auto& [p, m] : sub) {
                bool merged = false;
                for (auto& [p0, m0] : result)
                    if (p0 == p) {
                        m0 += m * unsigned(r);
                        merged = true;
                    }
                if (!merged) result.emplace_back(p, m * unsigned(r));
            }
            break;
        }
        Poly g = Poly::gcd(work, deriv);
        Poly sqf = (work / g).monic(); // product of distinct factors with mult not divisible by r
        std::vector<Poly> irr;
        factor_squarefree(sqf, rng, irr);
        for (auto& p : irr) {
            unsigned m = 0;
            while (true) {
                auto [quo, remd] = work.divmod(p);
                if (!remd.is_zero()) break;
                work = quo;
                ++m;
            }
            bool merged = false;
            for (auto& [p0, m0] : result)
                if (p0 == p) {
                    m0 += m;
                    merged = true;
                }
            if (!merged) result.emplace_back(p, m);
        }
        work = work.monic();
        if (sqf.degree() == 0 && g.degree() == work.degree()) break; // safety
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return result;
}

bool poly_is_irreducible(const Poly& f) {
    const long n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const int q = f.q();
    Poly x = Poly::x(q);
    // x^(q^n) == x mod f, and gcd(x^(q^(n/t)) - x, f) == 1 for prime t | n
    if (!((frob_power(x, f, unsigned(n)) - x) % f).is_zero()) return false;
    for (long t = 2; t <= n; ++t) {
        if (n % t != 0 || !is_prime(t)) continue;
        Poly g = Poly::gcd(frob_power(x, f, unsigned(n / t)) - x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

} // namespace symrep
