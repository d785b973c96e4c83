#pragma once

#include <cstdint>
#include <vector>

#include "symrep/fplinear.hpp"
#include "symrep/permgroup.hpp"

namespace symrep {

struct MeataxeOptions {
    long max_dim = 600;
    int budget = 200; // random algebra elements before giving up
};

// certified irreducibility of the module spanned by the given matrices
// (throws `inconclusive` if the element budget runs out)
bool meataxe_irreducible(const std::vector<Mat>& mats, std::uint64_t seed,
                         const MeataxeOptions& opt = {});

// composition factor dimensions (multiset, sorted ascending)
std::vector<long> meataxe_chop(const std::vector<Mat>& mats, std::uint64_t seed,
                               const MeataxeOptions& opt = {});

// largest irreducible dimension over GF(q) of a concrete permutation group,
// from chopping its regular representation (gated by max_dim >= |G|); pass a
// large enough extension field when absolute dimensions are wanted
long max_irreducible_dim(const GeneratorSet& gs, int q, std::uint64_t seed,
                         const MeataxeOptions& opt = {});

} // namespace symrep
