#include "symrep/gf.hpp"

#include <map>
#include <mutex>

namespace symrep {

bool is_prime(long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace {

// monic primitive polynomials, coefficients c0..c_{f-1} of x^f = -(sum c_i x^i)
const std::vector<int>& primpoly(int r, int f) {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1}},       // x^2 = x + 1
        {{2, 3}, {1, 1, 0}},    // x^3 = x + 1
        {{2, 4}, {1, 1, 0, 0}}, // x^4 = x + 1
        {{2, 5}, {1, 0, 1, 0, 0}},
        {{2, 6}, {1, 1, 0, 0, 0, 0}}, // x^6 = x + 1
        {{3, 2}, {2, 2}},             // x^2 = x + 1 over F_3  (-(2+2x) = 1+x)
        {{3, 3}, {1, 2, 0}},
        {{5, 2}, {2, 4}},
        {{7, 2}, {3, 6}},
    };
    auto it = table.find({r, f});
    if (it == table.end()) throw invalid_parameter("GF: unsupported field");
    return it->second;
}

} // namespace

GF::GF(int q) : q_(q) {
    if (q < 2 || q > 64) throw invalid_parameter("GF: q out of range");
    int r = 0;
    for (int c = 2; c <= q; ++c)
        if (is_prime(c) && q % c == 0) {
            r = c;
            break;
        }
    int f = 0, t = q;
    while (t > 1) {
        if (t % r != 0) throw invalid_parameter("GF: q is not a prime power");
        t /= r;
        ++f;
    }
    r_ = r;
    f_ = f;

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    frob_.resize(q);

    auto tovec = [&](int a) {
        std::vector<int> v(f);
        for (int i = 0; i < f; ++i) {
            v[i] = a % r;
            a /= r;
        }
        return v;
    };
    auto toint = [&](const std::vector<int>& v) {
        int x = 0;
        for (int i = f - 1; i >= 0; --i) x = x * r + v[i];
        return x;
    };

    if (f == 1) {
        for (int a = 0; a < q; ++a) {
            neg_[a] = std::uint8_t((q - a) % q);
            for (int b = 0; b < q; ++b) {
                add_[idx(std::uint8_t(a), std::uint8_t(b))] = std::uint8_t((a + b) % q);
                mul_[idx(std::uint8_t(a), std::uint8_t(b))] = std::uint8_t((a * b) % q);
            }
        }
    } else {
        const auto& pp = primpoly(r, f);
        for (int a = 0; a < q; ++a) {
            auto va = tovec(a);
            std::vector<int> vn(f);
            for (int i = 0; i < f; ++i) vn[i] = (r - va[i]) % r;
            neg_[a] = std::uint8_t(toint(vn));
            for (int b = 0; b < q; ++b) {
                auto vb = tovec(b);
                std::vector<int> s(f);
                for (int i = 0; i < f; ++i) s[i] = (va[i] + vb[i]) % r;
                add_[idx(std::uint8_t(a), std::uint8_t(b))] = std::uint8_t(toint(s));
                std::vector<int> prod(2 * f, 0);
                for (int i = 0; i < f; ++i)
                    for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % r;
                for (int i = 2 * f - 2; i >= f; --i) {
                    int c = prod[i];
                    if (c == 0) continue;
                    prod[i] = 0;
                    for (int j = 0; j < f; ++j) prod[i - f + j] = (prod[i - f + j] + (r - pp[j]) % r * c) % r;
                }
                prod.resize(f);
                mul_[idx(std::uint8_t(a), std::uint8_t(b))] = std::uint8_t(toint(prod));
            }
        }
    }

    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b)
            if (mul_[idx(std::uint8_t(a), std::uint8_t(b))] == 1) {
                inv_[a] = std::uint8_t(b);
                break;
            }
        if (inv_[a] == 0) throw consistency_error("GF: element without inverse");
    }
    for (int a = 0; a < q; ++a) {
        std::uint8_t x = std::uint8_t(a), out = 1;
        int e = r;
        while (e) {
            if (e & 1) out = mul_[idx(out, x)];
            x = mul_[idx(x, x)];
            e >>= 1;
        }
        frob_[a] = out;
    }
    gen_ = 0;
    for (int g = 1; g < q; ++g) {
        int seen = 0;
        std::uint8_t x = 1;
        std::vector<bool> hit(q, false);
        for (int i = 0; i < q - 1; ++i) {
            if (!hit[x]) {
                hit[x] = true;
                ++seen;
            }
            x = mul_[idx(x, std::uint8_t(g))];
        }
        if (seen == q - 1) {
            gen_ = g;
            break;
        }
    }
    if (q > 2 && gen_ == 0) throw consistency_error("GF: no multiplicative generator");
    if (q == 2) gen_ = 1;
}

std::uint8_t GF::pow(std::uint8_t a, long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    std::uint8_t out = 1, x = a;
    while (e) {
        if (e & 1) out = mul(out, x);
        x = mul(x, x);
        e >>= 1;
    }
    return out;
}

std::vector<std::uint8_t> GF::embedding_into(const GF& big) const {
    if (big.characteristic() != r_ || big.degree() % f_ != 0)
        throw invalid_parameter("GF: no subfield embedding");
    // the image of gen_ must have order q-1; pick the smallest power of
    // big's generator with that order which induces a field homomorphism
    std::vector<std::uint8_t> map(q_, 0);
    if (q_ == 2) {
        map[1] = 1;
        return map;
    }
    const long ordsub = q_ - 1;
    const long ordbig = big.q() - 1;
    for (long k = 1; k < ordbig; ++k) {
        if ((k * ordsub) % ordbig != 0) continue;
        std::uint8_t img = big.pow(std::uint8_t(big.generator()), k);
        // build candidate map from powers of gen_, then check additivity
        std::vector<std::uint8_t> cand(q_, 0);
        std::uint8_t x = 1, y = 1;
        bool ok = true;
        for (long i = 0; i < ordsub; ++i) {
            if (cand[x] != 0 && cand[x] != y) {
                ok = false;
                break;
            }
            cand[x] = y;
            x = mul(x, std::uint8_t(gen_));
            y = big.mul(y, img);
        }
        if (!ok) continue;
        for (int a = 0; a < q_ && ok; ++a)
            for (int b = 0; b < q_ && ok; ++b)
                if (cand[add(std::uint8_t(a), std::uint8_t(b))] !=
                    big.add(cand[a], cand[b]))
                    ok = false;
        if (ok) return cand;
    }
    throw consistency_error("GF: embedding search failed");
}

const GF& gf(int q) {
    static std::map<int, GF> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, GF(q)).first;
    return it->second;
}

} // namespace symrep
