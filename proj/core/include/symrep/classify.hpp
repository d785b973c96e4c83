#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symrep/partition.hpp"
#include "symrep/permgroup.hpp"

namespace symrep {

enum class Answer {
    Irreducible,
    Reducible,
    SplitsPair,               // the restriction decomposes into the two halves
    ConditionallyIrreducible, // irreducible subject to the recorded condition
};

struct Verdict {
    Answer answer = Answer::Reducible;
    std::string rule;                  // which rule of the catalog decided it
    std::string table_row;             // data-file row id, when one applies
    std::vector<std::string> citations;
    std::string condition_id;          // for conditional answers
};

std::string answer_name(Answer a);

// flags for the imprimitive wreath exception at the natural heart: the caller
// asserts transitivity, that both block projections are 2-transitive with an
// irreducible heart, and that the two half-module actions are not isomorphic
struct WreathHeartFlags {
    bool transitive = false;
    bool blocks_act_irreducibly = false;
    std::optional<bool> halves_nonisomorphic;
};

// restriction of the simple module labelled by `lam` from the symmetric
// group on n points to the subgroup described by `spec`
Verdict classify_sn(int p, int n, const Partition& lam, const GroupSpec& spec,
                    const WreathHeartFlags* wreath = nullptr);

// restriction of a simple alternating-group module: the one labelled by
// `lam` when its restriction stays simple, or either member of the split
// pair when it does not
Verdict classify_an(int p, int n, const Partition& lam, const GroupSpec& spec);

// the same analyses restricted to almost quasisimple subgroups; descriptors
// outside that class are rejected
Verdict classify_quasisimple_sn(int p, int n, const Partition& lam, const GroupSpec& spec);
Verdict classify_quasisimple_an(int p, int n, const Partition& lam, const GroupSpec& spec);

// whether the descriptor names a subgroup of the alternating group (certain
// for constructible families, declared for classification-only ones)
bool contained_in_alternating(const GroupSpec& spec, int ambient_n);

// whether the group embeds in the alternating group, allowing the standard
// parity-compensated embedding when at least two ambient points are fixed
bool embeddable_in_alternating(const GroupSpec& spec, int ambient_n);

} // namespace symrep
