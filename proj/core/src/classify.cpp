#include "symrep/classify.hpp"

#include <algorithm>

#include "symrep/gf.hpp"
#include "symrep/tables.hpp"

namespace symrep {

std::string answer_name(Answer a) {
    switch (a) {
        case Answer::Irreducible: return "irreducible";
        case Answer::Reducible: return "reducible";
        case Answer::SplitsPair: return "splits-pair";
        case Answer::ConditionallyIrreducible: return "conditionally-irreducible";
    }
    return "?";
}

namespace {

Verdict verdict(Answer a, std::string rule, std::string row = {}, std::string cond = {}) {
    Verdict v;
    v.answer = a;
    v.rule = std::move(rule);
    v.table_row = std::move(row);
    v.condition_id = std::move(cond);
    if (!v.table_row.empty()) v.citations.push_back("row " + v.table_row);
    if (!v.rule.empty()) v.citations.push_back("rule " + v.rule);
    return v;
}

bool is_power_of_two(long v, long& exponent) {
    if (v < 2) return false;
    exponent = 0;
    while (v % 2 == 0) {
        v /= 2;
        ++exponent;
    }
    return v == 1;
}

// normalized block sizes of a Young-type descriptor inside the ambient group:
// declared blocks plus a singleton for every fixed point, sorted descending
std::vector<int> padded_blocks(const GroupSpec& spec, int n) {
    std::vector<int> blocks = spec.young;
    int total = 0;
    for (int b : blocks) total += b;
    for (int i = total; i < n; ++i) blocks.push_back(1);
    std::sort(blocks.rbegin(), blocks.rend());
    return blocks;
}

bool is_young_like(const GroupSpec& spec) {
    switch (spec.family) {
        case GroupFamily::NaturalS:
        case GroupFamily::NaturalA:
        case GroupFamily::YoungS:
        case GroupFamily::YoungA:
            return true;
        default:
            return false;
    }
}

// the group key a spec matches in the two-transitive table
std::string heart_key(const GroupSpec& spec) {
    switch (spec.family) {
        case GroupFamily::FullAlternating: return "alt";
        case GroupFamily::NaturalS:
        case GroupFamily::YoungS:
            return spec.young.size() == 1 ? "sym" : "";
        case GroupFamily::NaturalA:
        case GroupFamily::YoungA:
            return spec.young.size() == 1 ? "alt" : "";
        case GroupFamily::Affine:
        case GroupFamily::C24A7:
            return spec.two_transitive ? "affine" : "";
        case GroupFamily::ProjLine: {
            const long q = spec.params[0];
            if (q % 2 == 0) return "sl2_even";
            const bool sigma_only =
                spec.token.rfind("psl2", 0) == 0 || spec.token.rfind("psigmal2", 0) == 0;
            return sigma_only ? "psl2_sigma" : "psl2_gamma";
        }
        case GroupFamily::PSLd: return "psl_d";
        case GroupFamily::Mathieu: {
            if (spec.token == "m11") return "m11";
            if (spec.token == "m11@12") return "m11@12";
            if (spec.token == "m12") return "m12";
            if (spec.token == "m22" || spec.token == "aut_m22") return "m22";
            if (spec.token == "m23") return "m23";
            return "m24";
        }
        case GroupFamily::Sp2m: return "sp2m";
        case GroupFamily::A7InGL42: return "a7gl42";
        case GroupFamily::Suzuki: return "suzuki";
        case GroupFamily::PSU3: return "psu3";
        case GroupFamily::Ree: return "ree";
        case GroupFamily::PSL2_11on11: return "psl2_11@11";
        case GroupFamily::HS: return "hs";
        case GroupFamily::Co3: return "co3";
        default: return "";
    }
}

// p-condition of the natural-heart table for this family
bool heart_condition(const GroupSpec& spec, int p) {
    const std::string key = heart_key(spec);
    if (key.empty() || !spec.two_transitive) return false;
    if (key == "suzuki") {
        // q = 2^e with e odd; the excluded primes divide q + 1 + sqrt(2q)
        const long q = spec.params[0];
        long e = 0;
        if (!is_power_of_two(q, e) || e % 2 == 0 || e < 3)
            throw invalid_parameter("suzuki: q must be an odd power of two, at least 8");
        long root = 1;
        for (long i = 0; i < (e + 1) / 2; ++i) root *= 2;
        return (q + 1 + root) % p != 0;
    }
    if (key == "psu3") {
        const long q = spec.params[0];
        return (q + 1) % p != 0;
    }
    if (key == "ree") {
        const long q = spec.params[0];
        long e = 0, t = q, root = 1;
        while (t % 3 == 0) {
            t /= 3;
            ++e;
        }
        if (t != 1 || e % 2 == 0)
            throw invalid_parameter("ree: q must be an odd power of three");
        for (long i = 0; i < (e + 1) / 2; ++i) root *= 3;
        return ((q + 1) * (q + 1 + root)) % p != 0;
    }
    if (key == "psl_d") {
        const long q = spec.params.size() == 2 ? spec.params[1] : 2;
        for (long r = 2; r <= q; ++r)
            if (is_prime(r) && q % r == 0) return p != r;
        return true;
    }
    if (key == "affine") {
        long r = 2;
        if (spec.token.rfind("agl:", 0) == 0 || spec.token.rfind("asl:", 0) == 0)
            r = spec.params[1];
        else if (spec.token.rfind("frob:", 0) == 0)
            r = spec.params[0];
        else if (spec.token == "aq8")
            r = 3;
        else if (spec.family == GroupFamily::C24A7)
            r = 2;
        return p != r;
    }
    for (const auto& row : tables().heart) {
        if (row.key != key) continue;
        return eval_pcond(row.pcond, p, spec.degree);
    }
    return false;
}

std::string heart_row_id(const GroupSpec& spec) {
    const std::string key = heart_key(spec);
    for (const auto& row : tables().heart)
        if (row.key == key) return row.id;
    return "";
}

bool lambda_or_twist_matches(const Partition& lam, int p, const Partition& target) {
    if (lam == target) return true;
    return mullineux(lam, p) == target;
}

// conditions phrased over the label or its sign-twist image are tested on
// both; at p = 2 the twist is the identity and the two clauses coincide
bool matches_shape(const Partition& lam, int p, const char* pattern) {
    if (match_pattern(pattern, lam)) return true;
    return match_pattern(pattern, mullineux(lam, p));
}

// sporadic rows: the group token set must contain the spec token, degrees
// and conditions must match; lambda is compared up to the sign twist
std::optional<std::string> case_row_match(const std::vector<CaseRow>& rows,
                                          const Partition& lam, int p, int n,
                                          const GroupSpec& spec,
                                          const std::vector<std::string>* allowed_ids,
                                          std::string* extra_out) {
    for (const auto& row : rows) {
        if (row.n != n) continue;
        if (row.act != spec.degree) continue;
        if (!eval_pcond(row.pcond, p, n)) continue;
        if (std::find(row.groups.begin(), row.groups.end(), spec.token) == row.groups.end())
            continue;
        if (!lambda_or_twist_matches(lam, p, row.lambda)) continue;
        if (allowed_ids &&
            std::find(allowed_ids->begin(), allowed_ids->end(), row.id) == allowed_ids->end())
            continue;
        if (extra_out) *extra_out = row.extra;
        return row.id;
    }
    return std::nullopt;
}

void validate_common(int p, int n, const Partition& lam, const GroupSpec& spec) {
    if (!is_prime(p)) throw invalid_parameter("classify: p must be prime");
    if (n < 5) throw invalid_parameter("classify: n must be at least 5");
    if (lam.n() != n) throw invalid_parameter("classify: partition size differs from n");
    require_p_regular(lam, p, "classify");
    if (spec.degree > n) throw invalid_parameter("classify: group degree exceeds n");
    if (lam == Partition({n}) || mullineux(lam, p) == Partition({n}))
        throw invalid_parameter("classify: the module is one-dimensional");
    if (spec.family == GroupFamily::FullAlternating && spec.degree != n)
        throw invalid_parameter("classify: alternating-group descriptor at the wrong degree");
    // reject descriptors that denote the full symmetric group
    if ((spec.family == GroupFamily::YoungS || spec.family == GroupFamily::NaturalS) &&
        padded_blocks(spec, n).size() == 1)
        throw invalid_parameter("classify: the subgroup must be proper");
    if (spec.family == GroupFamily::Wreath && (spec.params[0] == 1 || spec.params[1] == 1) &&
        spec.degree == n)
        throw invalid_parameter("classify: degenerate wreath equals the full group");
}

} // namespace

bool embeddable_in_alternating(const GroupSpec& spec, int ambient_n) {
    if (contained_in_alternating(spec, ambient_n)) return true;
    return spec.degree <= ambient_n - 2;
}

bool contained_in_alternating(const GroupSpec& spec, int ambient_n) {
    if (spec.constructible) {
        auto gs = build_group(spec, ambient_n);
        return all_gens_even(gs);
    }
    switch (spec.family) {
        case GroupFamily::Mathieu: return spec.token.rfind("aut_", 0) != 0;
        case GroupFamily::Sp2m:
        case GroupFamily::A7InGL42:
        case GroupFamily::C24A7:
        case GroupFamily::PSL2_11on11:
        case GroupFamily::HS:
        case GroupFamily::Co3:
        case GroupFamily::TwinSix:
            return true;
        default:
            return false; // unknown for extensions; never assumed
    }
}

namespace {

// ---- basic spin engine (characteristic two, two-row near-hook) --------------

// restriction of the unsplit spin module from the symmetric group
Verdict classify_spin_sn(int n, const Partition& lam, const GroupSpec& spec,
                         bool quasisimple);

// split (or unsplit, when n = 2 mod 4) spin module over the alternating group
Verdict classify_spin_an(int n, const GroupSpec& spec, bool quasisimple) {
    const int p = 2;
    // young-type subgroups
    if (is_young_like(spec)) {
        auto blocks = padded_blocks(spec, n);
        if (!spec.alternating_part && spec.family != GroupFamily::NaturalA)
            throw invalid_parameter("classify: subgroup of the alternating group expected");
        if (blocks.size() == 2) {
            const int a = blocks[0], b = blocks[1];
            const bool irr = (n % 4 == 0 && a % 2 == 1) ||
                             (n % 4 != 2 && (a % 4 == 2 || b % 4 == 2));
            return verdict(irr ? Answer::Irreducible : Answer::Reducible, "spin-split-young");
        }
        if (blocks.size() == 3 && n % 4 == 0) {
            const std::vector<int> t1{n - 3, 2, 1}, t2{n - 2, 1, 1};
            if (blocks == t1 || blocks == t2)
                return verdict(Answer::Irreducible, "spin-split-young3");
        }
        return verdict(Answer::Reducible, "spin-split-young");
    }
    if (spec.family == GroupFamily::WreathMeetA) {
        const long a = spec.params[0], b = spec.params[1];
        if (a * b != n || a == 1 || b == 1)
            return verdict(Answer::Reducible, "spin-split-wreath");
        const bool irr = (a % 2 == 1) || (a % 4 == 2 && b == 2);
        return verdict(irr ? Answer::Irreducible : Answer::Reducible, "spin-split-wreath");
    }
    // sporadic rows (the quasisimple filter is implied by descriptor class)
    std::string extra;
    auto row = case_row_match(tables().alt_cases, beta(n), p, n, spec, nullptr, &extra);
    if (row) {
        if (extra == "spade")
            return verdict(Answer::ConditionallyIrreducible, "spin-split-sporadic", *row,
                           "spade");
        if (extra == "spadespade")
            return verdict(Answer::ConditionallyIrreducible, "spin-split-sporadic", *row,
                           "spadespade");
        return verdict(Answer::Irreducible, "spin-split-sporadic", *row);
    }
    (void)quasisimple;
    return verdict(Answer::Reducible, "spin-split-none");
}

Verdict classify_spin_sn(int n, const Partition& lam, const GroupSpec& spec,
                         bool quasisimple) {
    const int p = 2;
    const int d = spec.degree;
    if (spec.family == GroupFamily::FullAlternating) {
        if (n % 4 == 2) return verdict(Answer::Irreducible, "spin-alt");
        return verdict(Answer::SplitsPair, "spin-alt");
    }
    // subgroups of the alternating group inherit the splitting
    if (contained_in_alternating(spec, n)) {
        if (n % 4 != 2) return verdict(Answer::Reducible, "spin-splits-first");
        // unsplit module: the alternating-side analysis answers directly
        return classify_spin_an(n, spec, quasisimple);
    }
    if (is_young_like(spec) || spec.family == GroupFamily::Wreath) {
        if (spec.family == GroupFamily::Wreath) {
            const long a = spec.params[0], b = spec.params[1];
            if (a * b == n && b > 1 && a % 2 == 1)
                return verdict(Answer::Irreducible, "spin-wreath");
            return verdict(Answer::Reducible, "spin-wreath");
        }
        auto blocks = padded_blocks(spec, n);
        if (blocks.size() == 2 && blocks[0] % 2 == 1 && blocks[1] % 2 == 1)
            return verdict(Answer::Irreducible, "spin-two-block");
        return verdict(Answer::Reducible, "spin-two-block");
    }
    // groups acting on fewer points: only the point-fixing chain survives
    if (d < n) {
        if (d <= n - 2 || n % 2 == 1) return verdict(Answer::Reducible, "spin-point-chain");
        // d = n-1, n even: the restriction to the point stabilizer is again
        // basic spin; recurse one level down
        GroupSpec inner = spec;
        return classify_spin_sn(n - 1, beta(n - 1), inner, quasisimple);
    }
    // primitive families at full degree
    std::string extra;
    std::vector<std::string> allowed{"S12", "S13", "S14"};
    if (quasisimple) allowed = {"S13", "S14"};
    auto row = case_row_match(tables().sym_cases, lam, p, n, spec, &allowed, &extra);
    if (row) return verdict(Answer::Irreducible, "spin-sporadic", *row);
    return verdict(Answer::Reducible, "spin-none");
}

// ---- the general engine -------------------------------------------------------

Verdict classify_general_sn(int p, int n, const Partition& lam, const GroupSpec& spec,
                            const WreathHeartFlags* wreath, bool quasisimple) {
    const Partition lam_m = mullineux(lam, p);
    const int d = spec.degree;

    if (spec.family == GroupFamily::FullAlternating) {
        if (in_PA(lam, p)) return verdict(Answer::SplitsPair, "alt");
        return verdict(Answer::Irreducible, "alt");
    }
    if (contained_in_alternating(spec, n) && in_PA(lam, p))
        return verdict(Answer::Reducible, "splits-first");

    // natural heart over a two-transitive group at full degree (the affine
    // line is unavailable to the quasisimple analysis, but affine
    // descriptors never reach it)
    if (matches_shape(lam, p, "(n-1,1)") && d == n && spec.two_transitive) {
        if (heart_condition(spec, p))
            return verdict(Answer::Irreducible, "heart-2t", heart_row_id(spec));
    }
    // imprimitive wreath exception at the natural heart
    if (!quasisimple && spec.family == GroupFamily::RemarkWreath) {
        if (p == 2 && n % 4 == 2 && lam == Partition({n - 1, 1}) && wreath &&
            wreath->transitive && wreath->blocks_act_irreducibly) {
            if (!wreath->halves_nonisomorphic)
                return verdict(Answer::ConditionallyIrreducible, "heart-wreath", "",
                               "halves-nonisomorphic");
            if (*wreath->halves_nonisomorphic)
                return verdict(Answer::Irreducible, "heart-wreath");
        }
        return verdict(Answer::Reducible, "heart-wreath");
    }
    // the exterior-square family over the binary affine group
    if (p != 2 && matches_shape(lam, p, "(n-2,1^2)") && d == n &&
        spec.token.rfind("agl:", 0) == 0 && spec.params[1] == 2) {
        long m = 0;
        if (is_power_of_two(n, m) && m >= 3 && spec.params[0] == m)
            return verdict(Answer::Irreducible, "ext-affine2");
    }
    // point-fixing analogue
    if (p != 2 && matches_shape(lam, p, "(n-2,1^2)") && d == n - 1 &&
        spec.token.rfind("agl:", 0) == 0 && spec.params[1] == 2 && n % p == 0) {
        long m = 0;
        if (is_power_of_two(long(n) - 1, m) && m >= 2 && spec.params[0] == m)
            return verdict(Answer::Irreducible, "ext-affine2-point");
    }
    // the restriction chain to the point stabilizers
    const bool is_natural_sym =
        (spec.family == GroupFamily::NaturalS || spec.family == GroupFamily::YoungS) &&
        padded_blocks(spec, n).size() == 2 && padded_blocks(spec, n)[1] == 1;
    const bool is_natural_alt =
        (spec.family == GroupFamily::NaturalA || spec.family == GroupFamily::YoungA) &&
        padded_blocks(spec, n).size() == 2 && padded_blocks(spec, n)[1] == 1;
    if (is_JS(lam, p)) {
        if (is_natural_sym && d == n - 1) return verdict(Answer::Irreducible, "js-natural");
        if (is_natural_alt && d == n - 1 && !in_PA(lam, p))
            return verdict(Answer::Irreducible, "js-alt");
    }
    // natural heart over a two-transitive group fixing one point; the
    // stabilizer chain groups match the full symmetric/alternating rows
    if (n % p == 0 && matches_shape(lam, p, "(n-1,1)") && d == n - 1 &&
        (spec.two_transitive || is_natural_sym || is_natural_alt)) {
        GroupSpec inner = spec;
        if (is_natural_sym || is_natural_alt) inner.two_transitive = true;
        if (heart_condition(inner, p))
            return verdict(Answer::Irreducible, "heart-2t-point", heart_row_id(inner));
    }
    // sporadic rows
    std::vector<std::string> allowed{"S1", "S2", "S3", "S4", "S5", "S6",
                                     "S7", "S8", "S9", "S10", "S11"};
    if (quasisimple) allowed = {"S1", "S2", "S3", "S4", "S9", "S10", "S11"};
    std::string extra;
    auto row = case_row_match(tables().sym_cases, lam, p, n, spec, &allowed, &extra);
    if (row) return verdict(Answer::Irreducible, "sporadic", *row);
    return verdict(Answer::Reducible, "none");
}

void validate_quasisimple(const GroupSpec& spec, int n) {
    // descriptors that denote almost quasisimple groups: the simple and
    // almost simple families, the alternating/symmetric point chains, and
    // the specific young groups isomorphic to symmetric groups
    switch (spec.family) {
        case GroupFamily::FullAlternating:
        case GroupFamily::ProjLine:
        case GroupFamily::PSLd:
        case GroupFamily::Mathieu:
        case GroupFamily::Sp2m:
        case GroupFamily::A7InGL42:
        case GroupFamily::Suzuki:
        case GroupFamily::PSU3:
        case GroupFamily::Ree:
        case GroupFamily::PSL2_11on11:
        case GroupFamily::HS:
        case GroupFamily::Co3:
            return;
        case GroupFamily::NaturalS:
        case GroupFamily::NaturalA:
        case GroupFamily::YoungS:
        case GroupFamily::YoungA: {
            auto blocks = padded_blocks(spec, n);
            // S_{n-1}, A_{n-1}, A_{n-2}, A_{n-2,2}, A_{n-3,2,1}
            const std::vector<std::vector<int>> ok{{n - 1, 1},
                                                   {n - 2, 1, 1},
                                                   {n - 2, 2},
                                                   {n - 3, 2, 1}};
            const bool alt = spec.alternating_part || spec.family == GroupFamily::NaturalA;
            if (blocks == ok[0] || (alt && (blocks == ok[1] || blocks == ok[2] || blocks == ok[3])))
                return;
            throw invalid_parameter("classify: this young subgroup is not almost quasisimple");
        }
        default:
            throw invalid_parameter("classify: descriptor is not almost quasisimple");
    }
}

} // namespace

Verdict classify_sn(int p, int n, const Partition& lam, const GroupSpec& spec,
                    const WreathHeartFlags* wreath) {
    validate_common(p, n, lam, spec);
    if (p == 2 && lam == beta(n)) return classify_spin_sn(n, lam, spec, false);
    return classify_general_sn(p, n, lam, spec, wreath, false);
}

namespace {

// a symmetric-type young descriptor with two spare points embeds in the
// alternating group as the parity-paired young subgroup on its blocks plus a
// two-point block; normalize so the case analysis sees that group
GroupSpec normalize_for_alternating(const GroupSpec& spec, int n) {
    if ((spec.family == GroupFamily::YoungS || spec.family == GroupFamily::NaturalS) &&
        spec.degree <= n - 2) {
        GroupSpec out = spec;
        out.family = GroupFamily::YoungA;
        out.alternating_part = true;
        out.young.push_back(2);
        out.degree = spec.degree + 2;
        out.token = spec.token + "+swap";
        return out;
    }
    return spec;
}

} // namespace

Verdict classify_an(int p, int n, const Partition& lam, const GroupSpec& spec_in) {
    validate_common(p, n, lam, spec_in);
    if (spec_in.family == GroupFamily::FullAlternating)
        throw invalid_parameter("classify: the subgroup must be proper in the alternating group");
    if (!embeddable_in_alternating(spec_in, n))
        throw invalid_parameter("classify: descriptor is not inside the alternating group");
    const GroupSpec spec = normalize_for_alternating(spec_in, n);
    if (!in_PA(lam, p)) {
        // the restriction stays simple; its behaviour matches the
        // symmetric-group analysis of the same pair
        if (p == 2 && lam == beta(n)) return classify_spin_sn(n, lam, spec, false);
        return classify_general_sn(p, n, lam, spec, nullptr, false);
    }
    // split pair
    if (p == 2 && lam == beta(n)) return classify_spin_an(n, spec, false);
    if (is_young_like(spec)) {
        auto blocks = padded_blocks(spec, n);
        const bool alt = spec.alternating_part || spec.family == GroupFamily::NaturalA;
        if (!alt) throw invalid_parameter("classify: subgroup of the alternating group expected");
        if (blocks.size() == 2 && blocks[1] == 1) {
            // the point stabilizer
            const auto nn = all_normal_nodes(lam, p);
            bool two_nonzero = nn.size() == 2;
            for (const auto& [node, res] : nn)
                if (res == 0) two_nonzero = false;
            if (is_JS(lam, p) || two_nonzero)
                return verdict(Answer::Irreducible, "split-point");
            return verdict(Answer::Reducible, "split-point");
        }
        const std::vector<int> two_fixed{n - 2, 1, 1};
        const std::vector<int> pair_block{n - 2, 2};
        if ((blocks == two_fixed || blocks == pair_block) && is_JS(lam, p))
            return verdict(Answer::Irreducible, "split-two-step");
        return verdict(Answer::Reducible, "split-none");
    }
    std::vector<std::string> allowed{"A1", "A2", "A3", "A4", "A5", "A6"};
    std::string extra;
    auto row = case_row_match(tables().alt_cases, lam, p, n, spec, &allowed, &extra);
    if (row) return verdict(Answer::Irreducible, "split-sporadic", *row);
    return verdict(Answer::Reducible, "split-none");
}

Verdict classify_quasisimple_sn(int p, int n, const Partition& lam, const GroupSpec& spec) {
    validate_common(p, n, lam, spec);
    validate_quasisimple(spec, n);
    if (p == 2 && lam == beta(n)) return classify_spin_sn(n, lam, spec, true);
    return classify_general_sn(p, n, lam, spec, nullptr, true);
}

Verdict classify_quasisimple_an(int p, int n, const Partition& lam, const GroupSpec& spec) {
    validate_common(p, n, lam, spec);
    validate_quasisimple(spec, n);
    if (!embeddable_in_alternating(spec, n))
        throw invalid_parameter("classify: descriptor is not inside the alternating group");
    if (!in_PA(lam, p)) {
        if (p == 2 && lam == beta(n)) return classify_spin_sn(n, lam, spec, true);
        return classify_general_sn(p, n, lam, spec, nullptr, true);
    }
    if (p == 2 && lam == beta(n)) return classify_spin_an(n, spec, true);
    // non-spin split pairs: the young cases and the first four sporadic rows
    if (is_young_like(spec)) return classify_an(p, n, lam, spec);
    std::vector<std::string> allowed{"A1", "A2", "A3", "A4"};
    std::string extra;
    auto row = case_row_match(tables().alt_cases, lam, p, n, spec, &allowed, &extra);
    if (row) return verdict(Answer::Irreducible, "split-sporadic", *row);
    return verdict(Answer::Reducible, "split-none");
}

} // namespace symrep
