#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symrep/bounds.hpp"
#include "symrep/partition.hpp"

namespace symrep {

// One versioned data file carries the dimension/splitting rows for the
// special module families and the classification rows for two-transitive
// groups and the sporadic restriction examples. See tables.cpp for the
// embedded copy and the schema comment at its head.

struct DimRow {
    std::string id;
    std::string pattern; // beta_n | (n-1,1) | (n-2,2) | (n-2,1^2) | literal parts
    std::string pcond;
    std::string ncond;
    std::string formula; // spin | lin:a,b | quad:a,b,c,d | const:v
    std::string splits;  // yes | no | iff:<cond> | ?
};

struct HeartRow { // two-transitive families for the natural heart
    std::string id;
    std::string key; // family key, matched by the classifier
    std::string degree;
    std::string transitivity;
    std::string pcond; // `special` for rows whose condition is computed
};

struct CaseRow { // sporadic irreducible-restriction examples
    std::string id;       // S1..S14 / A1..A18
    Partition lambda;     // explicit partition
    std::vector<std::string> groups; // descriptor tokens
    int n = 0;            // ambient degree
    int act = 0;          // degree of the 2-transitive action (0 = special)
    std::string pcond;
    std::string extra;    // -, spade, spadespade
};

struct TableData {
    int version = 0;
    std::vector<DimRow> dims;
    std::vector<HeartRow> heart;
    std::vector<CaseRow> sym_cases; // restrictions from the symmetric group
    std::vector<CaseRow> alt_cases; // restrictions from the alternating group
};

const TableData& tables();
// replace the active tables with the contents of a file (same format)
void load_tables_from_file(const std::string& path);
TableData parse_tables(const std::string& text);
// the active data, serialized
std::string dump_tables();

// predicate/formula evaluators for the row mini-language
bool eval_pcond(const std::string& cond, long p, long n);
Int eval_formula(const std::string& formula, long n);
std::optional<bool> eval_splits(const std::string& expr, long p, long n);
bool match_pattern(const std::string& pattern, const Partition& lam);

// table-driven closed forms (the engine behind dim_closed_form)
std::optional<Int> table_dim_lookup(const Partition& lam, int p);
std::optional<bool> table_splits_lookup(const Partition& lam, int p);

} // namespace symrep
