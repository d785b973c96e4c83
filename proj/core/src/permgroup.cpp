#include "symrep/permgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "symrep/gf.hpp"
#include "symrep/rng.hpp"

namespace symrep {

// ---- Perm -------------------------------------------------------------------

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= int(img_.size()) || seen[std::size_t(v)])
            throw invalid_parameter("Perm: images are not a bijection");
        seen[std::size_t(v)] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles)
        for (std::size_t i = 0; i < cyc.size(); ++i)
            img[std::size_t(cyc[i])] = cyc[(i + 1) % cyc.size()];
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
    if (degree() != o.degree()) throw invalid_parameter("Perm: degree mismatch");
    std::vector<int> img(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) img[x] = img_[std::size_t(o.img_[x])];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) img[std::size_t(img_[x])] = int(x);
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != int(x)) return false;
    return true;
}

bool Perm::is_even() const {
    std::vector<bool> seen(img_.size(), false);
    int parity = 0;
    for (std::size_t x = 0; x < img_.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (std::size_t y = x; !seen[y]; y = std::size_t(img_[y])) {
            seen[y] = true;
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    return parity == 0;
}

Perm Perm::extended_to(int degree) const {
    if (degree < this->degree()) throw invalid_parameter("Perm: cannot shrink degree");
    std::vector<int> img(img_);
    for (int x = this->degree(); x < degree; ++x) img.push_back(x);
    return Perm(std::move(img));
}

std::vector<int> Perm::adjacent_transpositions() const {
    // bubble sort of the inverse word; applying s_i = (i, i+1) in the returned
    // order (left factor first) reproduces the permutation
    std::vector<int> word;
    std::vector<int> cur(img_);
    for (std::size_t pass = 0; pass + 1 < cur.size(); ++pass) {
        bool moved = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] > cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                word.push_back(int(i));
                moved = true;
            }
        }
        if (!moved) break;
    }
    // word sorts img to identity: img = s_{w1} ... s_{wk} applied right-to-left
    std::reverse(word.begin(), word.end());
    return word;
}

// ---- StabilizerChain ----------------------------------------------------------

StabilizerChain::StabilizerChain(const GeneratorSet& gs, std::uint64_t seed)
    : degree_(gs.degree) {
    if (gs.degree > kMaxDegree)
        throw resource_limit("StabilizerChain: degree exceeds the configured limit");
    for (const auto& g : gs.gens)
        if (g.degree() != gs.degree)
            throw invalid_parameter("StabilizerChain: generator degree mismatch");

    auto sift_add = [&](const Perm& g) {
        Perm residue = g;
        std::size_t lvl = 0;
        if (strip(g, residue, lvl)) return false;
        extend_level(lvl, residue);
        return true;
    };

    for (const auto& g : gs.gens) sift_add(g);

    // randomized enrichment: random subproducts reach deep stabilizers quickly
    if (!gs.gens.empty()) {
        Rng rng(stream_seed(seed, "schreier-sims"));
        Perm acc = Perm::identity(degree_);
        int quiet = 0;
        while (quiet < 16) {
            acc = acc * gs.gens[std::size_t(rng.below(gs.gens.size()))];
            if (rng.next() & 1) acc = gs.gens[std::size_t(rng.below(gs.gens.size()))] * acc;
            if (sift_add(acc))
                quiet = 0;
            else
                ++quiet;
        }
    }

    // deterministic verification: every Schreier generator must sift to the
    // identity; repeat until a clean pass (extension may reallocate the
    // levels, so everything is re-fetched by index and the scan restarts)
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (std::size_t li = 0; li < levels_.size() && !dirty; ++li) {
            for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !dirty; ++oi) {
                for (std::size_t hi = 0; hi < levels_[li].gens.size() && !dirty; ++hi) {
                    const Perm u = levels_[li].transversal[oi];
                    const Perm h = levels_[li].gens[hi];
                    const int y = h(levels_[li].orbit[oi]);
                    const Perm uy =
                        levels_[li].transversal[std::size_t(levels_[li].where[std::size_t(y)])];
                    Perm sg = uy.inverse() * h * u;
                    if (sift_add(sg)) dirty = true;
                }
            }
        }
    }

    order_ = 1;
    for (const auto& L : levels_) order_ *= L.orbit.size();
}

bool StabilizerChain::strip(const Perm& g, Perm& residue, std::size_t& level) const {
    residue = g;
    for (level = 0; level < levels_.size(); ++level) {
        const auto& L = levels_[level];
        const int x = residue(L.base);
        if (x == L.base) continue;
        const int w = L.where[std::size_t(x)];
        if (w < 0) return false;
        residue = L.transversal[std::size_t(w)].inverse() * residue;
    }
    return residue.is_identity();
}

void StabilizerChain::extend_level(std::size_t idx, const Perm& g) {
    if (g.is_identity()) return;
    if (idx == levels_.size()) {
        Level L;
        for (int x = 0; x < degree_; ++x)
            if (g(x) != x) {
                L.base = x;
                break;
            }
        levels_.push_back(std::move(L));
    }
    // the new element stabilizes every earlier base, but products through it
    // can still enlarge earlier orbits, so it joins every level down to idx
    for (std::size_t j = 0; j <= idx; ++j) {
        levels_[j].gens.push_back(g);
        rebuild_orbit(j);
    }
}

void StabilizerChain::rebuild_orbit(std::size_t idx) {
    auto& L = levels_[idx];
    L.orbit.assign(1, L.base);
    L.where.assign(std::size_t(degree_), -1);
    L.where[std::size_t(L.base)] = 0;
    L.transversal.assign(1, Perm::identity(degree_));
    for (std::size_t i = 0; i < L.orbit.size(); ++i) {
        for (const auto& h : L.gens) {
            const int y = h(L.orbit[i]);
            if (L.where[std::size_t(y)] < 0) {
                L.where[std::size_t(y)] = int(L.orbit.size());
                L.orbit.push_back(y);
                L.transversal.push_back(h * L.transversal[i]);
            }
        }
    }
}

bool StabilizerChain::contains(const Perm& g) const {
    Perm residue = g;
    std::size_t lvl = 0;
    return strip(g, residue, lvl);
}

Int group_order(const GeneratorSet& gs, std::uint64_t seed) {
    return StabilizerChain(gs, seed).order();
}

std::vector<std::vector<int>> orbits(const GeneratorSet& gs) {
    std::vector<int> comp(std::size_t(gs.degree), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < gs.degree; ++s) {
        if (comp[std::size_t(s)] >= 0) continue;
        std::vector<int> orb{s};
        comp[std::size_t(s)] = int(out.size());
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (const auto& g : gs.gens) {
                const int y = g(orb[i]);
                if (comp[std::size_t(y)] < 0) {
                    comp[std::size_t(y)] = int(out.size());
                    orb.push_back(y);
                }
            }
        out.push_back(std::move(orb));
    }
    return out;
}

bool is_transitive(const GeneratorSet& gs) { return orbits(gs).size() == 1; }

namespace {

// orbit of the tuple (0,1,...,k-1) under the coordinatewise action
std::size_t tuple_orbit_size(const GeneratorSet& gs, int k) {
    std::vector<int> start(static_cast<std::size_t>(k));
    std::iota(start.begin(), start.end(), 0);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
        auto t = stack.back();
        stack.pop_back();
        for (const auto& g : gs.gens) {
            std::vector<int> u(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) u[i] = g(t[i]);
            if (seen.insert(u).second) stack.push_back(u);
        }
    }
    return seen.size();
}

} // namespace

bool is_2_transitive(const GeneratorSet& gs) {
    if (gs.degree < 2) return false;
    return tuple_orbit_size(gs, 2) == std::size_t(gs.degree) * (gs.degree - 1);
}

int transitivity_degree(const GeneratorSet& gs, int kmax) {
    int deg = 0;
    std::size_t target = 1;
    for (int k = 1; k <= std::min(kmax, gs.degree); ++k) {
        target *= std::size_t(gs.degree - k + 1);
        if (tuple_orbit_size(gs, k) == target)
            deg = k;
        else
            break;
    }
    return deg;
}

bool all_gens_even(const GeneratorSet& gs) {
    for (const auto& g : gs.gens)
        if (!g.is_even()) return false;
    return true;
}

// ---- constructors -------------------------------------------------------------

namespace {

void check_degree(int degree) {
    if (degree < 1 || degree > kMaxDegree)
        throw resource_limit("constructor: degree out of supported range");
}

// generators of the even part of <gens>, via the coset transversal {1, t}
std::vector<Perm> even_part(const std::vector<Perm>& gens) {
    const Perm* odd = nullptr;
    for (const auto& g : gens)
        if (!g.is_even()) {
            odd = &g;
            break;
        }
    if (!odd) return gens;
    const Perm t = *odd;
    const Perm tinv = t.inverse();
    std::vector<Perm> out;
    auto push = [&](const Perm& g) {
        if (!g.is_even()) throw consistency_error("even_part: odd generator produced");
        if (!g.is_identity()) out.push_back(g);
    };
    for (const auto& g : gens) {
        if (g.is_even()) {
            push(g);
            push(t * g * tinv);
        } else {
            push(g * tinv);
            push(t * g);
        }
    }
    return out;
}

} // namespace

GeneratorSet young_gens(const std::vector<int>& nu, int degree, bool alternating) {
    if (nu.empty()) throw invalid_parameter("young_gens: empty composition");
    int total = 0;
    for (int m : nu) {
        if (m <= 0) throw invalid_parameter("young_gens: parts must be positive");
        total += m;
    }
    if (total > degree) throw invalid_parameter("young_gens: parts exceed the degree");
    check_degree(degree);

    GeneratorSet out;
    out.degree = degree;
    std::ostringstream desc;
    desc << "young:";
    for (std::size_t i = 0; i < nu.size(); ++i) desc << (i ? "," : "") << nu[i];
    if (alternating) desc << ",alt";
    out.descriptor = desc.str();

    std::vector<int> offset;
    int off = 0;
    for (int m : nu) {
        offset.push_back(off);
        off += m;
    }
    if (!alternating) {
        for (std::size_t b = 0; b < nu.size(); ++b)
            for (int i = 0; i + 1 < nu[b]; ++i)
                out.gens.push_back(Perm::from_cycles(degree, {{offset[b] + i, offset[b] + i + 1}}));
        return out;
    }
    for (std::size_t b = 0; b < nu.size(); ++b)
        for (int i = 0; i + 2 < nu[b]; ++i)
            out.gens.push_back(Perm::from_cycles(
                degree, {{offset[b] + i, offset[b] + i + 1, offset[b] + i + 2}}));
    // cross-block double transpositions chain the odd elements together
    int prev = -1;
    for (std::size_t b = 0; b < nu.size(); ++b) {
        if (nu[b] < 2) continue;
        if (prev >= 0)
            out.gens.push_back(Perm::from_cycles(
                degree, {{offset[std::size_t(prev)], offset[std::size_t(prev)] + 1},
                         {offset[b], offset[b] + 1}}));
        prev = int(b);
    }
    return out;
}

GeneratorSet wreath_gens(int a, int b, bool meet_alternating) {
    if (a < 1 || b < 1) throw invalid_parameter("wreath_gens: parameters must be positive");
    const int degree = a * b;
    check_degree(degree);
    GeneratorSet out;
    out.degree = degree;
    out.descriptor = "wreath:" + std::to_string(a) + "x" + std::to_string(b) +
                     (meet_alternating ? ",alt" : "");
    for (int i = 0; i + 1 < a; ++i) out.gens.push_back(Perm::from_cycles(degree, {{i, i + 1}}));
    for (int j = 0; j + 1 < b; ++j) {
        std::vector<int> img(static_cast<std::size_t>(degree));
        std::iota(img.begin(), img.end(), 0);
        for (int x = 0; x < a; ++x) std::swap(img[std::size_t(j * a + x)], img[std::size_t((j + 1) * a + x)]);
        out.gens.push_back(Perm(std::move(img)));
    }
    if (meet_alternating) out.gens = even_part(out.gens);
    return out;
}

namespace {

int ipow(int b, int e) {
    int out = 1;
    while (e--) out *= b;
    return out;
}

// affine map x -> Ax + t on the vectors of an m-dimensional space over F_r,
// points ordered lexicographically with coordinate 1 most significant
Perm affine_perm(const std::vector<std::vector<int>>& A, const std::vector<int>& t, int m,
                 int r) {
    const int n = ipow(r, m);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::vector<int> v(std::size_t(m), 0);
    for (int idx = 0; idx < n; ++idx) {
        int x = idx;
        for (int i = m - 1; i >= 0; --i) {
            v[std::size_t(i)] = x % r;
            x /= r;
        }
        int widx = 0;
        for (int i = 0; i < m; ++i) {
            int w = t[std::size_t(i)];
            for (int j = 0; j < m; ++j) w += A[std::size_t(i)][std::size_t(j)] * v[std::size_t(j)];
            widx = widx * r + (w % r);
        }
        img[std::size_t(idx)] = widx;
    }
    return Perm(std::move(img));
}

std::vector<std::vector<int>> eye(int m) {
    std::vector<std::vector<int>> A(std::size_t(m), std::vector<int>(std::size_t(m), 0));
    for (int i = 0; i < m; ++i) A[std::size_t(i)][std::size_t(i)] = 1;
    return A;
}

int primitive_root(int r) {
    for (int g = 2; g < r; ++g) {
        std::set<int> pow;
        int x = 1;
        for (int i = 0; i < r - 1; ++i) {
            pow.insert(x);
            x = x * g % r;
        }
        if (int(pow.size()) == r - 1) return g;
    }
    return 1;
}

AffinePair affine_family(int m, int r, bool special) {
    if (!is_prime(r)) throw invalid_parameter("affine constructor: r must be prime");
    if (m < 1) throw invalid_parameter("affine constructor: m must be positive");
    const int degree = ipow(r, m);
    check_degree(degree);
    AffinePair out;
    out.group.degree = out.translations.degree = degree;
    out.group.descriptor = (special ? "asl:" : "agl:") + std::to_string(m) + "," + std::to_string(r);
    out.translations.descriptor = "vsub:" + std::to_string(m) + "," + std::to_string(r);
    for (int i = 0; i < m; ++i) {
        std::vector<int> t(std::size_t(m), 0);
        t[std::size_t(i)] = 1;
        Perm tr = affine_perm(eye(m), t, m, r);
        out.group.gens.push_back(tr);
        out.translations.gens.push_back(tr);
    }
    const std::vector<int> zero(std::size_t(m), 0);
    const int g = primitive_root(r);
    if (m == 1) {
        if (!special && r > 2) out.group.gens.push_back(affine_perm({{g}}, zero, 1, r));
        return out;
    }
    auto T = eye(m);
    T[0][1] = 1;
    out.group.gens.push_back(affine_perm(T, zero, m, r));
    std::vector<std::vector<int>> C(std::size_t(m), std::vector<int>(std::size_t(m), 0));
    for (int i = 1; i < m; ++i) C[std::size_t(i)][std::size_t(i - 1)] = 1;
    C[0][std::size_t(m - 1)] = (m % 2 == 1) ? 1 : (r - 1) % r; // determinant one
    out.group.gens.push_back(affine_perm(C, zero, m, r));
    if (!special && r > 2) {
        auto D = eye(m);
        D[0][0] = g;
        out.group.gens.push_back(affine_perm(D, zero, m, r));
    }
    return out;
}

} // namespace

AffinePair agl_gens(int m, int r) { return affine_family(m, r, false); }
AffinePair asl_gens(int m, int r) { return affine_family(m, r, true); }

GeneratorSet frobenius_gens(int r, int k) {
    if (!is_prime(r)) throw invalid_parameter("frobenius_gens: r must be prime");
    if (k < 1 || (r - 1) % k != 0)
        throw invalid_parameter("frobenius_gens: k must divide r-1");
    check_degree(r);
    GeneratorSet out;
    out.degree = r;
    out.descriptor = "frob:" + std::to_string(r) + "," + std::to_string(k);
    out.gens.push_back(affine_perm({{1}}, {1}, 1, r));
    if (k > 1) {
        const int g = primitive_root(r);
        int mult = 1;
        for (int i = 0; i < (r - 1) / k; ++i) mult = mult * g % r;
        out.gens.push_back(affine_perm({{mult}}, {0}, 1, r));
    }
    return out;
}

GeneratorSet affine_q8_gens() {
    GeneratorSet out;
    out.degree = 9;
    out.descriptor = "aq8";
    out.gens.push_back(affine_perm(eye(2), {1, 0}, 2, 3));
    out.gens.push_back(affine_perm(eye(2), {0, 1}, 2, 3));
    out.gens.push_back(affine_perm({{0, 2}, {1, 0}}, {0, 0}, 2, 3));
    out.gens.push_back(affine_perm({{1, 1}, {1, 2}}, {0, 0}, 2, 3));
    return out;
}

GeneratorSet projective_line_gens(int q, ProjFlavor flavor) {
    static const std::set<int> supported{4, 5, 7, 8, 9, 11, 13};
    if (!supported.count(q)) throw invalid_parameter("projective_line_gens: unsupported q");
    if (flavor == ProjFlavor::M10 && q != 9)
        throw invalid_parameter("projective_line_gens: the M10 extension needs q = 9");
    const GF& F = gf(q);
    const bool oddq = F.characteristic() != 2;
    const int INF = q;
    GeneratorSet out;
    out.degree = q + 1;
    switch (flavor) {
        case ProjFlavor::PSL: out.descriptor = "psl2:" + std::to_string(q); break;
        case ProjFlavor::PGL: out.descriptor = "pgl2:" + std::to_string(q); break;
        case ProjFlavor::PSigmaL: out.descriptor = "psigmal2:" + std::to_string(q); break;
        case ProjFlavor::PGammaL: out.descriptor = "pgammal2:" + std::to_string(q); break;
        case ProjFlavor::M10: out.descriptor = "m10"; break;
    }
    auto permof = [&](auto f) {
        std::vector<int> img(static_cast<std::size_t>(q + 1));
        for (int z = 0; z <= q; ++z) img[std::size_t(z)] = f(z);
        return Perm(std::move(img));
    };
    const std::uint8_t g = std::uint8_t(F.generator());
    const std::uint8_t nu = oddq ? F.mul(g, g) : g;
    out.gens.push_back(permof([&](int z) { return z == INF ? INF : int(F.add(std::uint8_t(z), 1)); }));
    out.gens.push_back(permof([&](int z) { return z == INF ? INF : int(F.mul(std::uint8_t(z), nu)); }));
    out.gens.push_back(permof([&](int z) {
        if (z == INF) return 0;
        if (z == 0) return INF;
        return int(F.neg(F.inv(std::uint8_t(z))));
    }));
    const bool want_frob = flavor == ProjFlavor::PSigmaL || flavor == ProjFlavor::PGammaL;
    const bool want_pgl = oddq && (flavor == ProjFlavor::PGL || flavor == ProjFlavor::PGammaL);
    if (want_frob && F.degree() > 1)
        out.gens.push_back(permof([&](int z) { return z == INF ? INF : int(F.frob(std::uint8_t(z))); }));
    if (want_pgl)
        out.gens.push_back(permof([&](int z) { return z == INF ? INF : int(F.mul(std::uint8_t(z), g)); }));
    if (flavor == ProjFlavor::M10)
        out.gens.push_back(
            permof([&](int z) { return z == INF ? INF : int(F.mul(g, F.frob(std::uint8_t(z)))); }));
    return out;
}

GeneratorSet psl3_2_gens() {
    // action on the seven nonzero vectors of F_2^3; index = binary value - 1
    GeneratorSet out;
    out.degree = 7;
    out.descriptor = "psl3:2";
    auto matperm = [&](std::vector<std::vector<int>> A) {
        std::vector<int> img(7);
        for (int val = 1; val <= 7; ++val) {
            const int v[3] = {(val >> 2) & 1, (val >> 1) & 1, val & 1};
            int w = 0;
            for (int i = 0; i < 3; ++i) {
                int wi = 0;
                for (int j = 0; j < 3; ++j) wi ^= A[std::size_t(i)][std::size_t(j)] & v[j];
                w = (w << 1) | wi;
            }
            img[std::size_t(val - 1)] = w - 1;
        }
        return Perm(std::move(img));
    };
    out.gens.push_back(matperm({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
    out.gens.push_back(matperm({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
    return out;
}

GeneratorSet mathieu_gens(int degree_choice) {
    GeneratorSet out;
    if (degree_choice == 10) return projective_line_gens(9, ProjFlavor::M10);
    if (degree_choice == 11) {
        out.degree = 11;
        out.descriptor = "m11";
        out.gens.push_back(Perm::from_cycles(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}));
        out.gens.push_back(Perm::from_cycles(11, {{2, 6, 10, 7}, {3, 9, 4, 5}}));
        return out;
    }
    if (degree_choice == 12) {
        out.degree = 12;
        out.descriptor = "m12";
        out.gens.push_back(Perm::from_cycles(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}));
        out.gens.push_back(Perm::from_cycles(12, {{2, 6, 10, 7}, {3, 9, 4, 5}}));
        out.gens.push_back(
            Perm::from_cycles(12, {{0, 11}, {1, 10}, {2, 5}, {3, 7}, {4, 8}, {6, 9}}));
        return out;
    }
    throw invalid_parameter("mathieu_gens: supported degrees are 10, 11, 12");
}

GeneratorSet m11_on_12_gens() {
    GeneratorSet out;
    out.degree = 12;
    out.descriptor = "m11@12";
    out.gens.push_back(Perm({2, 7, 3, 8, 0, 6, 1, 10, 5, 4, 9, 11}));
    out.gens.push_back(Perm({6, 0, 9, 1, 8, 4, 2, 7, 3, 10, 11, 5}));
    return out;
}

// ---- descriptors ----------------------------------------------------------------

namespace {

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stol(tok));
    return out;
}

} // namespace

GeneratorSet build_group_even(const GroupSpec& spec, int ambient_n) {
    GeneratorSet gs = build_group(spec, ambient_n);
    bool any_odd = false;
    for (const auto& g : gs.gens) any_odd |= !g.is_even();
    if (!any_odd) return gs;
    if (spec.degree > ambient_n - 2)
        throw invalid_parameter("build_group_even: no room for the parity compensation");
    Perm swap2 = Perm::from_cycles(ambient_n, {{spec.degree, spec.degree + 1}});
    for (auto& g : gs.gens)
        if (!g.is_even()) g = g * swap2;
    gs.descriptor += "+swap";
    return gs;
}

GroupSpec parse_descriptor(const std::string& text, int ambient_n) {
    GroupSpec spec;
    spec.token = text;
    auto bad = [&](const std::string& why) {
        throw invalid_parameter("group descriptor '" + text + "': " + why);
    };
    auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);

    if (text == "an") {
        spec.family = GroupFamily::FullAlternating;
        spec.degree = ambient_n;
        spec.constructible = true;
        spec.two_transitive = ambient_n >= 4;
        spec.transitivity = std::max(0, ambient_n - 2);
        return spec;
    }
    if (text == "sn-1" || text == "an-1" || text == "an-2") {
        spec.family = text[0] == 's' ? GroupFamily::NaturalS : GroupFamily::NaturalA;
        spec.degree = ambient_n - (text == "an-2" ? 2 : 1);
        if (spec.degree < 1) bad("ambient degree too small");
        spec.alternating_part = text[0] == 'a';
        spec.young = {spec.degree};
        spec.constructible = true;
        spec.transitivity = 0;
        return spec;
    }
    if (head == "young") {
        auto items = tail;
        spec.alternating_part = false;
        if (items.size() >= 4 && items.substr(items.size() - 4) == ",alt") {
            spec.alternating_part = true;
            items = items.substr(0, items.size() - 4);
        }
        auto vals = parse_longs(items);
        if (vals.empty()) bad("empty block list");
        int total = 0;
        for (long v : vals) {
            if (v <= 0) bad("blocks must be positive");
            spec.young.push_back(int(v));
            total += int(v);
        }
        if (total > ambient_n) bad("blocks exceed the ambient degree");
        spec.family = spec.alternating_part ? GroupFamily::YoungA : GroupFamily::YoungS;
        spec.degree = total;
        spec.constructible = true;
        return spec;
    }
    if (head == "wreath") {
        auto x = tail.find('x');
        if (x == std::string::npos) bad("expected wreath:AxB");
        spec.alternating_part = false;
        std::string rest = tail.substr(x + 1);
        if (rest.size() >= 4 && rest.substr(rest.size() - 4) == ",alt") {
            spec.alternating_part = true;
            rest = rest.substr(0, rest.size() - 4);
        }
        spec.params = {std::stol(tail.substr(0, x)), std::stol(rest)};
        spec.family = spec.alternating_part ? GroupFamily::WreathMeetA : GroupFamily::Wreath;
        spec.degree = int(spec.params[0] * spec.params[1]);
        spec.constructible = true;
        return spec;
    }
    if (head == "agl" || head == "asl" || head == "vsub") {
        auto vals = parse_longs(tail);
        if (vals.size() != 2) bad("expected m,r");
        const long m = vals[0], r = vals[1];
        if (!is_prime(r)) bad("r must be prime");
        spec.params = {m, r};
        spec.family = head == "vsub" ? GroupFamily::AffineV : GroupFamily::Affine;
        long deg = 1;
        for (long i = 0; i < m; ++i) deg *= r;
        spec.degree = int(deg);
        spec.constructible = true;
        if (head == "agl") {
            spec.two_transitive = true;
            spec.transitivity = (r == 2 && m >= 2) ? 3 : 2;
        } else if (head == "asl") {
            spec.two_transitive = m >= 2;
            spec.transitivity = m >= 2 ? 2 : 1;
        }
        return spec;
    }
    if (head == "frob") {
        auto vals = parse_longs(tail);
        if (vals.size() != 2) bad("expected r,k");
        spec.params = vals;
        spec.family = GroupFamily::Affine;
        spec.degree = int(vals[0]);
        spec.constructible = true;
        spec.two_transitive = vals[1] == vals[0] - 1;
        spec.transitivity = spec.two_transitive ? 2 : 1;
        return spec;
    }
    if (text == "aq8") {
        spec.family = GroupFamily::Affine;
        spec.degree = 9;
        spec.constructible = true;
        spec.two_transitive = true;
        spec.transitivity = 2;
        return spec;
    }
    if (head == "psl2" || head == "pgl2" || head == "psigmal2" || head == "pgammal2" ||
        text == "m10") {
        long q = text == "m10" ? 9 : (parse_longs(tail).empty() ? 0 : parse_longs(tail)[0]);
        static const std::set<long> supported{4, 5, 7, 8, 9, 11, 13};
        if (!supported.count(q)) bad("unsupported field size");
        spec.family = GroupFamily::ProjLine;
        spec.params = {q};
        spec.degree = int(q + 1);
        spec.constructible = true;
        spec.two_transitive = true;
        const bool evenq = q % 2 == 0;
        if (text == "m10")
            spec.transitivity = 3;
        else if (evenq)
            spec.transitivity = 3;
        else if (head == "pgl2" || head == "pgammal2")
            spec.transitivity = 3;
        else
            spec.transitivity = 2;
        return spec;
    }
    if (text == "psl3:2") {
        spec.family = GroupFamily::PSLd;
        spec.params = {3, 2};
        spec.degree = 7;
        spec.constructible = true;
        spec.two_transitive = true;
        spec.transitivity = 2;
        return spec;
    }
    if (head == "psl") {
        auto vals = parse_longs(tail);
        if (vals.size() != 2) bad("expected d,q");
        const long d = vals[0], q = vals[1];
        if (d < 3) bad("projective descriptors with d = 2 use psl2:q");
        spec.family = GroupFamily::PSLd;
        spec.params = vals;
        long deg = 0, pw = 1;
        for (long i = 0; i < d; ++i) {
            deg += pw;
            pw *= q;
        }
        spec.degree = int(deg);
        spec.constructible = false;
        spec.two_transitive = true;
        spec.transitivity = 2;
        return spec;
    }
    if (text == "m11" || text == "m12" || text == "m11@12" || text == "m22" ||
        text == "aut_m22" || text == "m23" || text == "m24") {
        spec.family = GroupFamily::Mathieu;
        spec.two_transitive = true;
        if (text == "m11") {
            spec.degree = 11;
            spec.transitivity = 4;
            spec.constructible = true;
        } else if (text == "m12") {
            spec.degree = 12;
            spec.transitivity = 5;
            spec.constructible = true;
        } else if (text == "m11@12") {
            spec.degree = 12;
            spec.transitivity = 3;
            spec.constructible = true;
        } else if (text == "m22" || text == "aut_m22") {
            spec.degree = 22;
            spec.transitivity = 3;
        } else if (text == "m23") {
            spec.degree = 23;
            spec.transitivity = 4;
        } else {
            spec.degree = 24;
            spec.transitivity = 5;
        }
        return spec;
    }
    if (head == "sp") {
        auto vals = parse_longs(tail);
        if (vals.size() != 2 || vals[0] < 3 || (vals[1] != 0 && vals[1] != 1))
            bad("expected sp:m,defect with m >= 3");
        spec.family = GroupFamily::Sp2m;
        spec.params = vals;
        long pw = 1;
        for (long i = 0; i < vals[0]; ++i) pw *= 2;
        spec.degree = int((pw / 2) * (pw + (vals[1] == 0 ? 1 : -1)));
        spec.two_transitive = true;
        spec.transitivity = 2;
        return spec;
    }
    if (text == "a7gl42") {
        spec.family = GroupFamily::A7InGL42;
        spec.degree = 15;
        spec.two_transitive = true;
        spec.transitivity = 2;
        return spec;
    }
    if (text == "c24a7") {
        spec.family = GroupFamily::C24A7;
        spec.degree = 16;
        spec.two_transitive = true;
        spec.transitivity = 2;
        return spec;
    }
    if (head == "suzuki" || head == "psu3" || head == "ree") {
        auto vals = parse_longs(tail);
        if (vals.size() != 1) bad("expected a field size");
        const long q = vals[0];
        spec.params = vals;
        spec.two_transitive = true;
        spec.transitivity = 2;
        if (head == "suzuki") {
            spec.family = GroupFamily::Suzuki;
            spec.degree = int(q * q + 1);
        } else {
            spec.family = head == "psu3" ? GroupFamily::PSU3 : GroupFamily::Ree;
            spec.degree = int(q * q * q + 1);
        }
        return spec;
    }
    if (text == "psl2_11@11") {
        spec.family = GroupFamily::PSL2_11on11;
        spec.degree = 11;
        spec.two_transitive = true;
        spec.transitivity = 2;
        return spec;
    }
    if (text == "hs") {
        spec.family = GroupFamily::HS;
        spec.degree = 176;
        spec.two_transitive = true;
        spec.transitivity = 2;
        return spec;
    }
    if (text == "co3") {
        spec.family = GroupFamily::Co3;
        spec.degree = 276;
        spec.two_transitive = true;
        spec.transitivity = 2;
        return spec;
    }
    if (head == "twin") {
        static const std::set<std::string> inner{"psigmal2:9", "m10", "pgammal2:9"};
        if (!inner.count(tail)) bad("twin actions exist for the three six-letter extensions");
        spec.family = GroupFamily::TwinSix;
        spec.params = {};
        spec.degree = 12;
        spec.two_transitive = false;
        return spec;
    }
    if (text == "remark-wreath") {
        spec.family = GroupFamily::RemarkWreath;
        spec.degree = ambient_n;
        return spec;
    }
    bad("unknown family");
    return spec; // unreachable
}

GeneratorSet build_group(const GroupSpec& spec, int ambient_n) {
    if (!spec.constructible)
        throw invalid_parameter("group '" + spec.token + "' is classification-only");
    if (spec.degree > ambient_n)
        throw invalid_parameter("group degree exceeds the ambient degree");
    check_degree(ambient_n);
    GeneratorSet base;
    switch (spec.family) {
        case GroupFamily::FullAlternating:
            base = young_gens({ambient_n}, ambient_n, true);
            base.descriptor = "an";
            break;
        case GroupFamily::NaturalS:
            base = young_gens(spec.young, spec.degree, false);
            break;
        case GroupFamily::NaturalA:
        case GroupFamily::YoungA: {
            // the even part is taken inside the ambient group, so build at
            // ambient degree directly
            base = young_gens(spec.young, ambient_n, true);
            base.degree = ambient_n;
            GeneratorSet out = base;
            out.descriptor = spec.token;
            return out;
        }
        case GroupFamily::YoungS:
            base = young_gens(spec.young, spec.degree, false);
            break;
        case GroupFamily::Wreath:
            base = wreath_gens(int(spec.params[0]), int(spec.params[1]), false);
            break;
        case GroupFamily::WreathMeetA: {
            // even part relative to the full ambient alternating group: the
            // wreath acts on a*b points which must equal the ambient degree
            if (spec.degree != ambient_n)
                throw invalid_parameter("wreath ,alt: degree must equal the ambient degree");
            base = wreath_gens(int(spec.params[0]), int(spec.params[1]), true);
            break;
        }
        case GroupFamily::Affine: {
            if (spec.token.rfind("agl:", 0) == 0)
                base = agl_gens(int(spec.params[0]), int(spec.params[1])).group;
            else if (spec.token.rfind("asl:", 0) == 0)
                base = asl_gens(int(spec.params[0]), int(spec.params[1])).group;
            else if (spec.token.rfind("frob:", 0) == 0)
                base = frobenius_gens(int(spec.params[0]), int(spec.params[1]));
            else
                base = affine_q8_gens();
            break;
        }
        case GroupFamily::AffineV:
            base = agl_gens(int(spec.params[0]), int(spec.params[1])).translations;
            break;
        case GroupFamily::ProjLine: {
            ProjFlavor flavor = ProjFlavor::PSL;
            if (spec.token == "m10")
                flavor = ProjFlavor::M10;
            else if (spec.token.rfind("pgl2", 0) == 0)
                flavor = ProjFlavor::PGL;
            else if (spec.token.rfind("psigmal2", 0) == 0)
                flavor = ProjFlavor::PSigmaL;
            else if (spec.token.rfind("pgammal2", 0) == 0)
                flavor = ProjFlavor::PGammaL;
            base = projective_line_gens(int(spec.params[0]), flavor);
            break;
        }
        case GroupFamily::PSLd:
            base = psl3_2_gens();
            break;
        case GroupFamily::Mathieu:
            if (spec.token == "m11")
                base = mathieu_gens(11);
            else if (spec.token == "m12")
                base = mathieu_gens(12);
            else
                base = m11_on_12_gens();
            break;
        default:
            throw invalid_parameter("group '" + spec.token + "' is classification-only");
    }
    GeneratorSet out;
    out.degree = ambient_n;
    out.descriptor = spec.token;
    for (const auto& g : base.gens) out.gens.push_back(g.extended_to(ambient_n));
    return out;
}

} // namespace symrep
