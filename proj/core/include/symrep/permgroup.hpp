#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symrep/errors.hpp"

namespace symrep {

using Int = boost::multiprecision::cpp_int;

// Permutation on {0, ..., n-1}; (f*g)(x) = f(g(x)).
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int degree);
    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return int(img_.size()); }
    int operator()(int x) const { return img_[std::size_t(x)]; }
    const std::vector<int>& images() const { return img_; }

    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool is_identity() const;
    bool is_even() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }

    // pad fixed points up to a larger degree
    Perm extended_to(int degree) const;
    // decomposition into adjacent transpositions (i, i+1), as indices i
    std::vector<int> adjacent_transpositions() const;

  private:
    std::vector<int> img_;
};

struct GeneratorSet {
    int degree = 0;
    std::vector<Perm> gens;
    std::string descriptor;
};

// deterministic stabilizer-chain machinery (randomized schreier generators
// first, then a full verification pass, so the answer is exact)
class StabilizerChain {
  public:
    StabilizerChain(const GeneratorSet& gs, std::uint64_t seed);
    Int order() const { return order_; }
    bool contains(const Perm& g) const;

  private:
    struct Level {
        int base = 0;
        std::vector<int> orbit;                 // orbit of base
        std::vector<int> where;                 // point -> index in orbit, or -1
        std::vector<Perm> transversal;          // u with u(base) = point
        std::vector<Perm> gens;                 // generators of this stabilizer
    };
    bool strip(const Perm& g, Perm& residue, std::size_t& level) const;
    void extend_level(std::size_t idx, const Perm& g);
    void rebuild_orbit(std::size_t idx);
    int degree_;
    std::vector<Level> levels_;
    Int order_ = 1;
};

Int group_order(const GeneratorSet& gs, std::uint64_t seed = 0);
std::vector<std::vector<int>> orbits(const GeneratorSet& gs);
bool is_transitive(const GeneratorSet& gs);
bool is_2_transitive(const GeneratorSet& gs);
// largest k <= kmax with a single orbit on distinct k-tuples
int transitivity_degree(const GeneratorSet& gs, int kmax = 6);
bool all_gens_even(const GeneratorSet& gs);

// ---- family constructors ----------------------------------------------------
// The maximum supported degree for constructed groups.
constexpr int kMaxDegree = 64;

// block-diagonal symmetric group on the given composition; if `alternating`,
// its intersection with the alternating group of `degree`
GeneratorSet young_gens(const std::vector<int>& nu, int degree, bool alternating);
// imprimitive wreath product on a*b points; if `meet_alternating`, its even part
GeneratorSet wreath_gens(int a, int b, bool meet_alternating = false);

// affine groups on r^m points (vectors of the m-dimensional space over the
// r-element field, ordered lexicographically by coordinates)
struct AffinePair {
    GeneratorSet group;        // the requested affine group
    GeneratorSet translations; // its regular normal subgroup
};
AffinePair agl_gens(int m, int r);
AffinePair asl_gens(int m, int r);
// one-dimensional affine subgroup of order r*k (k | r-1)
GeneratorSet frobenius_gens(int r, int k);
// the nine-point affine group with quaternion linear part
GeneratorSet affine_q8_gens();

// projective line constructions on q+1 points, q in {4,5,7,8,9,11,13}
enum class ProjFlavor {
    PSL,      // z+1, square multipliers, -1/z
    PGL,      // adds the full multiplier (odd q)
    PSigmaL,  // adds the field automorphism
    PGammaL,  // adds both
    M10,      // PSL2(9) extended by (multiplier . frobenius); q = 9 only
};
GeneratorSet projective_line_gens(int q, ProjFlavor flavor);

// the seven-point action of the simple group of order 168 on the nonzero
// vectors of a 3-dimensional binary space
GeneratorSet psl3_2_gens();

// Mathieu groups from embedded, order-verified generator data
GeneratorSet mathieu_gens(int degree_choice); // 10 -> M10@10, 11 -> M11@11, 12 -> M12@12
GeneratorSet m11_on_12_gens();

// ---- descriptor grammar ------------------------------------------------------
// Families the classification engine understands. Constructible ones can be
// turned into a GeneratorSet.
enum class GroupFamily {
    FullAlternating,   // an
    NaturalS,          // sn-1 (or young with one block + fixed points)
    NaturalA,          // an-1, an-2
    YoungS,            // young:a,b,...
    YoungA,            // young:a,b,...,alt
    Wreath,            // wreath:axb
    WreathMeetA,       // wreath:axb,alt
    Affine,            // agl:m,r / asl:m,r / frob:r,k / aq8
    AffineV,           // vsub:m,r (the translation subgroup itself)
    ProjLine,          // psl2:q, pgl2:q, psigmal2:q, pgammal2:q, m10
    PSLd,              // psl3:2 constructible; psl:d,q abstract
    Mathieu,           // m11, m12, m11@12, m22, m23, m24, aut_m22
    Sp2m,              // sp:m,0 / sp:m,1 (abstract)
    A7InGL42,          // a7gl42 (abstract, 15 points)
    C24A7,             // c24a7 (abstract, 16 points)
    Suzuki,            // suzuki:q (abstract)
    PSU3,              // psu3:q (abstract)
    Ree,               // ree:q (abstract)
    PSL2_11on11,       // psl2_11@11 (abstract)
    HS,                // hs (abstract, 176)
    Co3,               // co3 (abstract, 276)
    RemarkWreath,      // remark-wreath (flags supplied separately)
    TwinSix,           // twin:<token>, socle acting by two inequivalent
                       // 2-transitive actions on six plus six points
};

struct GroupSpec {
    GroupFamily family;
    std::string token;          // normalized descriptor
    int degree = 0;             // number of moved-or-fixed points of the natural action
    std::vector<long> params;   // family parameters (m, r, q, k, defect, ...)
    std::vector<int> young;     // block sizes for Young-type descriptors
    bool alternating_part = false;
    bool constructible = false;
    // descriptor-level facts the classifier relies on
    bool two_transitive = false;
    int transitivity = 0;       // stated transitivity degree of the full family
};

// parse a descriptor like "young:5,2,alt", "agl:3,2", "m11@12", "psl2:7";
// `ambient_n` is used only to resolve the shorthands "an", "sn-1", "an-1", "an-2"
GroupSpec parse_descriptor(const std::string& text, int ambient_n);

// concrete generators, embedded in the symmetric group on `ambient_n` points
// (the natural action on points 1..degree, fixing the rest)
GeneratorSet build_group(const GroupSpec& spec, int ambient_n);

// the same, with odd generators compensated by the transposition of the
// first two fixed points, so the result lies in the alternating group
GeneratorSet build_group_even(const GroupSpec& spec, int ambient_n);

} // namespace symrep
