#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "symrep/bounds.hpp"
#include "symrep/fplinear.hpp"
#include "symrep/partition.hpp"
#include "symrep/permgroup.hpp"
#include "symrep/rng.hpp"

namespace symrep {

// resource gates for the ground-truth engine; the defaults keep every
// computation at desk scale
struct OracleLimits {
    int max_n = 13;
    long max_dim = 600;
    // compute Gram ranks on the cheaper of the partition and its Mullineux
    // image (the sign twist preserves dimensions; disable to force the
    // literal partition)
    bool allow_sign_twist = true;
};

// number of standard tableaux by the hook length formula
Int hook_length_count(const Partition& lam);

// standard tableaux, each as the row index (0-based) of every value 0..n-1;
// enumeration order is stable
std::vector<std::vector<std::uint8_t>> standard_tableaux(const Partition& lam,
                                                         const OracleLimits& lim = {});
long specht_dim(const Partition& lam, const OracleLimits& lim = {});

// Gram rank of the standard polytabloid basis over GF(p)
long dim_D(const Partition& lam, int p, const OracleLimits& lim = {});

// matrices of the adjacent transpositions on the head of the Specht module
struct ModuleRep {
    Partition lam;
    int p = 2;
    long dim = 0;
    std::vector<Mat> coxeter; // n-1 matrices; rows are image coordinates
};

// gen_subset: if nonempty, build only those adjacent-transposition matrices
// (0-based indices); relation checks run only when the full set is present
ModuleRep rep_D(const Partition& lam, int p, const OracleLimits& lim = {},
                const std::vector<int>& gen_subset = {});

// matrix of an arbitrary permutation; with the row-as-image convention the
// matrix of a composition f.g is M_g * M_f
Mat rep_matrix(const ModuleRep& rep, const Perm& g);

// restriction to a generator set; spot-checks the homomorphism property on
// random word pairs
std::vector<Mat> restrict_to(const ModuleRep& rep, const GeneratorSet& gs,
                             std::uint64_t seed = 0);

// dimension of the common fixed space of the given matrices
long fixed_space_dim(const std::vector<Mat>& mats);
// same, with each matrix twisted by the sign of its permutation
long sign_fixed_space_dim(const std::vector<Mat>& mats, const std::vector<bool>& even);

// minimal m >= 0 such that the restriction to the first n-m points has a
// one-dimensional submodule (trivial or sign)
long min_m_with_linear_submodule(const Partition& lam, int p, const OracleLimits& lim = {});

// trace of the matrix of a word in the given matrices
std::uint8_t trace_of(const std::vector<Mat>& mats, const std::vector<int>& word);

// degree (1, 2 or 3) of the minimal polynomial of a 3-cycle at p = 2
int minpoly_degree_of_3cycle(const ModuleRep& rep);

// commutant dimension of the restriction to the alternating group; true
// means the restriction splits (dimension 2), false means it stays simple
bool splits_over_An(const Partition& lam, int p, std::uint64_t seed = 0,
                    const OracleLimits& lim = {});

// commutant dimension of an arbitrary matrix collection (cyclic-vector method)
long commutant_dim(const std::vector<Mat>& mats, std::uint64_t seed);

// the two summands of a split restriction, possibly over the quadratic
// extension when the pair is Galois-conjugate; `extra` matrices (for a
// smaller subgroup, say) are cut down to the same invariant subspaces
struct SplitPair {
    int q = 2;                       // field of the components
    std::vector<Mat> plus, minus;    // blocks of the defining matrices
    std::vector<Mat> plus_extra, minus_extra;
};
SplitPair split_components(const std::vector<Mat>& defining, const std::vector<Mat>& extra,
                           std::uint64_t seed);

// Brauer character value at an order-9 element, as an exact integer when the
// value is rational: the eigenvalue multiset is computed over GF(64) and
// summed in the ninth cyclotomic field. Returns nullopt when irrational.
std::optional<long> brauer_value_order9(const Mat& order9_elt);

// find a word in gs whose permutation has the given order (for trace tests)
std::optional<std::vector<int>> find_element_of_order(const GeneratorSet& gs, int order,
                                                      std::uint64_t seed, int attempts = 4000);

} // namespace symrep
