#include "symrep/meataxe.hpp"

#include <algorithm>
#include <cstring>
#include <map>

#include "symrep/rng.hpp"

namespace symrep {

namespace {

// spin the row vector v under right multiplication; returns an echelonized
// basis of the generated submodule
Mat spin(const std::vector<Mat>& mats, const std::vector<std::uint8_t>& v) {
    const std::size_t r = mats[0].rows();
    const int q = mats[0].q();
    const GF& F = gf(q);
    std::vector<std::vector<std::uint8_t>> ech;   // reduced rows
    std::vector<std::size_t> pivots;
    std::vector<std::vector<std::uint8_t>> work;  // unreduced spanning rows

    auto reduce_add = [&](std::vector<std::uint8_t> row) {
        for (std::size_t t = 0; t < ech.size(); ++t) {
            const std::uint8_t c = row[pivots[t]];
            if (!c) continue;
            const auto& pr = ech[t];
            for (std::size_t j = 0; j < r; ++j)
                if (pr[j]) row[j] = F.sub(row[j], F.mul(c, pr[j]));
        }
        std::size_t piv = r;
        for (std::size_t j = 0; j < r; ++j)
            if (row[j]) {
                piv = j;
                break;
            }
        if (piv == r) return false;
        const std::uint8_t inv = F.inv(row[piv]);
        if (inv != 1)
            for (std::size_t j = piv; j < r; ++j) row[j] = F.mul(row[j], inv);
        ech.push_back(row);
        pivots.push_back(piv);
        work.push_back(std::move(row));
        return true;
    };

    reduce_add(v);
    for (std::size_t k = 0; k < work.size() && ech.size() < r; ++k) {
        // NOTE: work rows are reduced copies; spinning reduced rows spans the
        // same submodule
        for (const auto& m : mats) {
            std::vector<std::uint8_t> img(r, 0);
            for (std::size_t i = 0; i < r; ++i) {
                const std::uint8_t c = work[k][i];
                if (!c) continue;
                const std::uint8_t* mr = m.row(i);
                for (std::size_t j = 0; j < r; ++j)
                    if (mr[j]) img[j] = F.add(img[j], F.mul(c, mr[j]));
            }
            reduce_add(std::move(img));
            if (ech.size() == r) break;
        }
    }
    Mat out(q, ech.size(), r);
    for (std::size_t i = 0; i < ech.size(); ++i) std::memcpy(out.row(i), ech[i].data(), r);
    return out;
}

std::vector<Mat> transpose_all(const std::vector<Mat>& mats) {
    std::vector<Mat> out;
    for (const auto& m : mats) out.push_back(m.transpose());
    return out;
}

struct MeataxeVerdict {
    bool irreducible = false;
    Mat submodule; // proper invariant row space when reducible
};

MeataxeVerdict run_meataxe(const std::vector<Mat>& mats, std::uint64_t seed,
                           const MeataxeOptions& opt) {
    if (mats.empty()) throw invalid_parameter("meataxe: no matrices");
    const std::size_t r = mats[0].rows();
    const int q = mats[0].q();
    if (long(r) > opt.max_dim) throw resource_limit("meataxe: dimension exceeds the gate");
    MeataxeVerdict verdict;
    if (r == 0) throw invalid_parameter("meataxe: zero module");
    if (r == 1) {
        verdict.irreducible = true;
        return verdict;
    }
    Rng rng(stream_seed(seed, "meataxe"));
    const GF& F = gf(q);

    // pool of algebra words, grown with random products
    std::vector<Mat> pool = mats;
    auto transposed = transpose_all(mats);

    for (int iter = 0; iter < opt.budget; ++iter) {
        if (iter > 0 && pool.size() < 24)
            pool.push_back(pool[std::size_t(rng.below(pool.size()))] *
                           pool[std::size_t(rng.below(pool.size()))]);
        // random element: sum of a few scaled pool members
        Mat z(q, r, r);
        const int terms = 2 + int(rng.below(3));
        for (int t = 0; t < terms; ++t) {
            std::uint8_t c = std::uint8_t(1 + rng.below(std::uint64_t(q - 1)));
            z = z + pool[std::size_t(rng.below(pool.size()))].scaled(c);
        }
        Poly cp = charpoly(z);
        auto factors = factor_poly(cp, rng);
        // try factors by ascending kernel dimension
        std::vector<std::pair<long, std::size_t>> order;
        std::vector<Mat> kernels(factors.size());
        for (std::size_t fi = 0; fi < factors.size(); ++fi) {
            Mat fz = factors[fi].first.eval(z);
            kernels[fi] = fz.transpose().nullspace(); // rows v with v f(z) = 0
            if (kernels[fi].rows() == 0) continue;
            order.emplace_back(long(kernels[fi].rows()), fi);
        }
        std::sort(order.begin(), order.end());
        for (auto [nullity, fi] : order) {
            const auto& f = factors[fi].first;
            const Mat& ker = kernels[fi];
            std::vector<std::uint8_t> v(ker.row(0), ker.row(0) + r);
            Mat sub = spin(mats, v);
            if (sub.rows() < r) {
                verdict.submodule = sub;
                return verdict;
            }
            // dual side (Norton): any kernel vector of f(z^T) spins the
            // transposed module; a proper hit exhibits a quotient
            Mat fzt = f.eval(z).transpose();
            Mat kert = fzt.transpose().nullspace();
            if (kert.rows() == 0) throw consistency_error("meataxe: empty dual kernel");
            std::vector<std::uint8_t> w(kert.row(0), kert.row(0) + r);
            Mat dsub = spin(transposed, w);
            if (dsub.rows() < r) {
                // annihilator of the dual submodule is a proper submodule
                Mat ann = dsub.nullspace();
                if (ann.rows() == 0 || ann.rows() == r)
                    throw consistency_error("meataxe: bad annihilator");
                // the annihilator is automatically invariant; take its spin to
                // guard against arithmetic slips
                std::vector<std::uint8_t> a0(ann.row(0), ann.row(0) + r);
                Mat sub2 = spin(mats, a0);
                if (sub2.rows() == r) throw consistency_error("meataxe: annihilator not invariant");
                verdict.submodule = sub2;
                return verdict;
            }
            if (nullity == f.degree()) {
                verdict.irreducible = true; // Norton witness
                return verdict;
            }
        }
        (void)F;
    }
    throw inconclusive("meataxe: iteration budget exhausted");
}

} // namespace

bool meataxe_irreducible(const std::vector<Mat>& mats, std::uint64_t seed,
                         const MeataxeOptions& opt) {
    return run_meataxe(mats, seed, opt).irreducible;
}

namespace {

void chop_rec(const std::vector<Mat>& mats, std::uint64_t seed, const MeataxeOptions& opt,
              std::vector<long>& out) {
    const std::size_t r = mats[0].rows();
    if (r == 0) return;
    auto verdict = run_meataxe(mats, seed, opt);
    if (verdict.irreducible) {
        out.push_back(long(r));
        return;
    }
    const int q = mats[0].q();
    const GF& F = gf(q);
    const Mat& W = verdict.submodule;
    const std::size_t d = W.rows();
    // complete the submodule basis to a full basis (incremental echelon)
    Mat P(q, r, r);
    for (std::size_t i = 0; i < d; ++i) std::memcpy(P.row(i), W.row(i), r);
    {
        std::vector<std::vector<std::uint8_t>> ech;
        std::vector<std::size_t> pivots;
        auto reduce_add = [&](std::vector<std::uint8_t> row) {
            for (std::size_t t = 0; t < ech.size(); ++t) {
                const std::uint8_t c = row[pivots[t]];
                if (!c) continue;
                for (std::size_t j = 0; j < r; ++j)
                    if (ech[t][j]) row[j] = F.sub(row[j], F.mul(c, ech[t][j]));
            }
            std::size_t piv = r;
            for (std::size_t j = 0; j < r; ++j)
                if (row[j]) {
                    piv = j;
                    break;
                }
            if (piv == r) return false;
            const std::uint8_t inv = F.inv(row[piv]);
            if (inv != 1)
                for (std::size_t j = piv; j < r; ++j) row[j] = F.mul(row[j], inv);
            ech.push_back(std::move(row));
            pivots.push_back(piv);
            return true;
        };
        for (std::size_t i = 0; i < d; ++i)
            if (!reduce_add(std::vector<std::uint8_t>(W.row(i), W.row(i) + r)))
                throw consistency_error("chop: dependent submodule basis");
        std::size_t have = d;
        for (std::size_t e = 0; e < r && have < r; ++e) {
            std::vector<std::uint8_t> unit(r, 0);
            unit[e] = 1;
            if (reduce_add(std::move(unit))) {
                P(have, e) = 1;
                ++have;
            }
        }
        if (have != r) throw consistency_error("chop: basis completion failed");
    }
    auto Pinv = P.inverse();
    if (!Pinv) throw consistency_error("chop: singular basis");
    std::vector<Mat> sub, quot;
    for (const auto& m : mats) {
        Mat conj = P * m * *Pinv;
        Mat ms(q, d, d), mq(q, r - d, r - d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                if (j < d)
                    ms(i, j) = conj(i, j);
                else if (conj(i, j))
                    throw consistency_error("chop: submodule is not invariant");
            }
        for (std::size_t i = d; i < r; ++i)
            for (std::size_t j = d; j < r; ++j) mq(i - d, j - d) = conj(i, j);
        sub.push_back(std::move(ms));
        quot.push_back(std::move(mq));
    }
    chop_rec(sub, seed + 1, opt, out);
    chop_rec(quot, seed + 2, opt, out);
}

} // namespace

std::vector<long> meataxe_chop(const std::vector<Mat>& mats, std::uint64_t seed,
                               const MeataxeOptions& opt) {
    std::vector<long> out;
    chop_rec(mats, seed, opt, out);
    std::sort(out.begin(), out.end());
    return out;
}

long max_irreducible_dim(const GeneratorSet& gs, int q, std::uint64_t seed,
                         const MeataxeOptions& opt) {
    gf(q); // validates the field size
    // enumerate the group by closure
    std::vector<Perm> elems{Perm::identity(gs.degree)};
    std::map<std::vector<int>, std::size_t> index{{elems[0].images(), 0}};
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (const auto& g : gs.gens) {
            Perm h = g * elems[k];
            if (index.emplace(h.images(), elems.size()).second) {
                elems.push_back(h);
                if (long(elems.size()) > opt.max_dim)
                    throw resource_limit("max_irreducible_dim: group order exceeds the gate");
            }
        }
    }
    const std::size_t N = elems.size();
    std::vector<Mat> regular;
    for (const auto& g : gs.gens) {
        Mat m(q, N, N);
        for (std::size_t k = 0; k < N; ++k) {
            Perm h = g * elems[k];
            m(k, index.at(h.images())) = 1;
        }
        regular.push_back(std::move(m));
    }
    auto dims = meataxe_chop(regular, seed, opt);
    return dims.empty() ? 0 : dims.back();
}

} // namespace symrep
