#include "symrep/tables.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include "symrep/errors.hpp"

namespace symrep {

// Schema, one record per line, fields separated by '|', '#' comments.
//   version N
//   dim   |id|pattern|pcond|ncond|formula|splits
//   heart |id|family-key|degree|transitivity|pcond
//   scase |id|lambda|groups(;-separated)|n|act|pcond|extra
//   acase |id|lambda|groups(;-separated)|n|act|pcond|extra
// pattern:  beta_n, (n-1,1), (n-2,2), (n-2,1^2), or literal parts `a,b,c`
// pcond:    `any` or '&'-joined clauses: p=K  p!=K[,..]  p>K  pdivn  pndivn
//           nmodK=a[,..]  nmodK!=a[,..]  n=K  n>=K
// formula:  spin (2^floor((n-1)/2)), lin:a,b ((a*n+b)), quad:a,b,c,d
//           ((a*n^2+b*n+c)/d), const:v
// splits:   yes, no, iff:<pcond>
// act = 0 marks rows whose action is described by their extra condition.
static const char* kEmbeddedTables = R"TBL(
version 1

# ---- dimensions and splitting of the special families ----
dim|spin2|beta_n|p=2|n>=3|spin|iff:nmod4!=2
dim|heart_a|(n-1,1)|pndivn|n>=3|lin:1,-1|no
dim|heart_b|(n-1,1)|pdivn|n>=3|lin:1,-2|no
dim|h22_a|(n-2,2)|p>2&nmodp!=1,2|n>=5|quad:1,-3,0,2|no
dim|h22_a2|(n-2,2)|p=2&nmod4=3|n>=5|quad:1,-3,0,2|no
dim|h22_b|(n-2,2)|p>2&nmodp=1|n>=5|quad:1,-3,-2,2|no
dim|h22_b2|(n-2,2)|p=2&nmod4=1|n>=5|quad:1,-3,-2,2|iff:n=5
dim|h22_c|(n-2,2)|p>2&nmodp=2|n>=5|quad:1,-5,2,2|no
dim|h22_c2|(n-2,2)|p=2&nmod4=2|n>=5|quad:1,-5,2,2|no
dim|h22_d|(n-2,2)|p=2&nmod4=0|n>=5|quad:1,-5,4,2|no
dim|h211_a|(n-2,1^2)|p>2&pndivn|n>=5|quad:1,-3,2,2|iff:n=5
dim|h211_b|(n-2,1^2)|p>2&pdivn|n>=5|quad:1,-5,6,2|iff:p=3&n=6
dim|r53|5,3|p=5|any|const:21|no
dim|r63|6,3|p=5|any|const:21|no
dim|r332|3,3,2|p>5|any|const:42|yes
dim|r333|3,3,3|p>5|any|const:42|yes
dim|r651|6,5,1|p=2|any|const:288|yes
dim|r751|7,5,1|p=2|any|const:288|yes
dim|r2121a|21,2,1|p!=2,3,7,23|any|const:3520|no
dim|r2121b|21,2,1|p=7|any|const:3267|no
dim|r2121c|21,2,1|p=23|any|const:3269|no
dim|r2111|21,1,1,1|p>3|any|const:1771|no
dim|r2211|22,1,1,1|p=5|any|const:1771|no
# depth <= 4 families at twenty-four points, characteristic two
dim|x2_222|22,2|p=2|n=24|const:230|?
dim|x2_213|21,3|p=2|n=24|const:1496|?
dim|x2_2121|21,2,1|p=2|n=24|const:3520|?
dim|x2_204|20,4|p=2|n=24|const:7084|?
dim|x2_2031|20,3,1|p=2|n=24|const:17248|?
# same families, characteristic three
dim|x3_222|22,2|p=3|n=24|const:252|?
dim|x3_2211|22,1,1|p=3|n=24|const:231|?
dim|x3_213|21,3|p=3|n=24|const:1726|?
dim|x3_2121|21,2,1|p=3|n=24|const:1540|?
dim|x3_204|20,4|p=3|n=24|const:6854|?
dim|x3_2031|20,3,1|p=3|n=24|const:26082|?
dim|x3_2022|20,2,2|p=3|n=24|const:7315|?
dim|x3_20211|20,2,1,1|p=3|n=24|const:26334|?

# ---- two-transitive groups for the natural heart ----
heart|t2_sym|sym|n|n|any
heart|t2_alt|alt|n|n-2|any
heart|t2_affine|affine|r^m|2 or 3|p!=r
heart|t2_psl_d|psl_d|(q^d-1)/(q-1)|2|pndivq
heart|t2_a7gl42|a7gl42|15|2|p!=2
heart|t2_sp2m|sp2m|2^(m-1)(2^m+-1)|2|p!=2
heart|t2_sl2_even|sl2_even|q+1|3|any
heart|t2_psl2_sigma|psl2_sigma|q+1|2|p!=2
heart|t2_psl2_gamma|psl2_gamma|q+1|3|any
heart|t2_suzuki|suzuki|q^2+1|2|special
heart|t2_psu3|psu3|q^3+1|2|special
heart|t2_ree|ree|q^3+1|2|special
heart|t2_m24|m24|24|5|p!=2
heart|t2_m23|m23|23|4|p!=2
heart|t2_m22|m22|22|3|p!=2
heart|t2_m12|m12|12|5|any
heart|t2_m11|m11|11|4|any
heart|t2_m11_12|m11@12|12|3|p!=3
heart|t2_psl2_11|psl2_11@11|11|2|p!=3
heart|t2_hs|hs|176|2|p!=2,3
heart|t2_co3|co3|276|2|p!=2,3

# ---- sporadic irreducible restrictions from the symmetric group ----
scase|S1|5,2|psl3:2|7|7|p=5|-
scase|S1|7,2|pgammal2:8|9|9|p!=2,7|-
scase|S1|9,2|m11|11|11|p!=3,5|-
scase|S1|10,2|m11@12|12|12|p=2|-
scase|S1|10,2|m12|12|12|p!=5|-
scase|S1|21,2|m23|23|23|p!=2,3|-
scase|S1|22,2|m24|24|24|p!=2|-
scase|S2|10,2|m11|12|11|p=2|-
scase|S2|11,2|m12|13|12|p=11|-
scase|S2|22,2|m23|24|23|p=11|-
scase|S2|23,2|m24|25|24|p=23|-
scase|S3|4,1,1|pgl2:5|6|6|p=3|-
scase|S3|9,1,1|m11|11|11|p!=2,11|-
scase|S3|10,1,1|m11@12|12|12|p!=2,3|-
scase|S3|10,1,1|m12|12|12|p!=2|-
scase|S3|20,1,1|m22;aut_m22|22|22|p!=2|-
scase|S3|21,1,1|m23|23|23|p!=2|-
scase|S3|22,1,1|m24|24|24|p!=2|-
scase|S4|10,1,1|m11|12|11|p=3|-
scase|S4|11,1,1|m11@12|13|12|p=13|-
scase|S4|11,1,1|m12|13|12|p=13|-
scase|S4|21,1,1|m22;aut_m22|23|22|p=23|-
scase|S4|22,1,1|m23|24|23|p=3|-
scase|S4|23,1,1|m24|25|24|p=5|-
scase|S5|14,1,1|c24a7|16|16|p!=2|-
scase|S6|15,1,1|c24a7|17|16|p=17|-
scase|S7|5,3|agl:3,2|8|8|p=5|-
scase|S8|6,3|agl:3,2|9|8|p=5|-
scase|S9|21,2,1|m24|24|24|p!=2,3|-
scase|S10|21,1,1,1|m24|24|24|p!=2,3|-
scase|S11|22,1,1,1|m24|25|24|p=5|-
scase|S12|3,2|frob:5,4|5|5|p=2|-
scase|S13|4,2|pgl2:5|6|6|p=2|-
scase|S14|6,4|psigmal2:9;m10;pgammal2:9|10|10|p=2|-

# ---- sporadic irreducible restrictions from the alternating group ----
acase|A1|6,5,1|m12|12|12|p=2|-
acase|A2|7,5,1|m12|13|12|p=2|-
acase|A3|4,1,1|psl2:5|6|6|p=3|-
acase|A4|3,3,3|pgammal2:8|9|9|p>5|-
acase|A5|3,3,2|agl:3,2|8|8|p>5|-
acase|A6|3,3,3|agl:3,2|9|8|p>5|-
acase|A7|3,2|frob:5,2|5|5|p=2|-
acase|A8|5,4|asl:2,3;aq8|9|9|p=2|-
acase|A9|5,4|psl2:8;pgammal2:8|9|9|p=2|spade
acase|A10|6,4|m10|10|10|p=2|-
acase|A11|6,5|m11|11|11|p=2|-
acase|A12|7,5|m11@12;m12|12|12|p=2|-
acase|A13|4,3|psl2:5|7|6|p=2|-
acase|A14|5,3|psl2:5;pgl2:5|8|6|p=2|-
acase|A15|6,5|m10|11|10|p=2|-
acase|A16|7,5|psigmal2:9;m10;pgammal2:9|12|10|p=2|-
acase|A17|7,5|twin:psigmal2:9;twin:m10;twin:pgammal2:9|12|12|p=2|spadespade
acase|A18|7,5|m11|12|11|p=2|-
)TBL";

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

TableData* active_tables = nullptr;
std::mutex tables_mutex;

} // namespace

TableData parse_tables(const std::string& text) {
    TableData data;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("version", 0) == 0) {
            data.version = std::stoi(line.substr(7));
            continue;
        }
        auto f = split(line, '|');
        auto bad = [&](const char* why) {
            throw invalid_parameter("tables line " + std::to_string(lineno) + ": " + why);
        };
        if (f[0] == "dim") {
            if (f.size() != 7) bad("dim row needs 7 fields");
            data.dims.push_back({f[1], f[2], f[3], f[4], f[5], f[6]});
        } else if (f[0] == "heart") {
            if (f.size() != 6) bad("heart row needs 6 fields");
            data.heart.push_back({f[1], f[2], f[3], f[4], f[5]});
        } else if (f[0] == "scase" || f[0] == "acase") {
            if (f.size() != 8) bad("case row needs 8 fields");
            CaseRow row;
            row.id = f[1];
            row.lambda = Partition::parse(f[2]);
            row.groups = split(f[3], ';');
            row.n = std::stoi(f[4]);
            row.act = std::stoi(f[5]);
            row.pcond = f[6];
            row.extra = f[7];
            (f[0] == "scase" ? data.sym_cases : data.alt_cases).push_back(std::move(row));
        } else {
            bad("unknown record type");
        }
    }
    if (data.version == 0) throw invalid_parameter("tables: missing version record");
    return data;
}

const TableData& tables() {
    std::lock_guard<std::mutex> lock(tables_mutex);
    if (!active_tables) active_tables = new TableData(parse_tables(kEmbeddedTables));
    return *active_tables;
}

void load_tables_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter("tables: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    TableData parsed = parse_tables(buf.str());
    std::lock_guard<std::mutex> lock(tables_mutex);
    delete active_tables;
    active_tables = new TableData(std::move(parsed));
}

std::string dump_tables() { return kEmbeddedTables; }

// ---- mini-language ----------------------------------------------------------

bool eval_pcond(const std::string& cond, long p, long n) {
    if (cond == "any" || cond.empty() || cond == "-") return true;
    for (const auto& clause : split(cond, '&')) {
        bool ok = false;
        if (clause == "pndivn") {
            ok = n % p != 0;
        } else if (clause == "pdivn") {
            ok = n % p == 0;
        } else if (clause.rfind("p!=", 0) == 0) {
            ok = true;
            for (const auto& v : split(clause.substr(3), ','))
                if (p == std::stol(v)) ok = false;
        } else if (clause.rfind("p=", 0) == 0) {
            ok = p == std::stol(clause.substr(2));
        } else if (clause.rfind("p>", 0) == 0) {
            ok = p > std::stol(clause.substr(2));
        } else if (clause.rfind("nmod", 0) == 0) {
            auto rest = clause.substr(4);
            long mod;
            std::string vals;
            bool neg = false;
            auto eq = rest.find("!=");
            if (eq != std::string::npos) {
                neg = true;
                mod = rest.substr(0, eq) == "p" ? p : std::stol(rest.substr(0, eq));
                vals = rest.substr(eq + 2);
            } else {
                eq = rest.find('=');
                mod = rest.substr(0, eq) == "p" ? p : std::stol(rest.substr(0, eq));
                vals = rest.substr(eq + 1);
            }
            bool hit = false;
            for (const auto& v : split(vals, ','))
                if (n % mod == std::stol(v) % mod) hit = true;
            ok = neg ? !hit : hit;
        } else if (clause.rfind("n>=", 0) == 0) {
            ok = n >= std::stol(clause.substr(3));
        } else if (clause.rfind("n=", 0) == 0) {
            ok = n == std::stol(clause.substr(2));
        } else {
            throw invalid_parameter("pcond: cannot parse '" + clause + "'");
        }
        if (!ok) return false;
    }
    return true;
}

Int eval_formula(const std::string& formula, long n) {
    if (formula == "spin") {
        Int out = 1;
        for (long i = 0; i < (n - 1) / 2; ++i) out *= 2;
        return out;
    }
    auto args = [&](std::size_t off) {
        std::vector<long> v;
        for (const auto& t : split(formula.substr(off), ',')) v.push_back(std::stol(t));
        return v;
    };
    if (formula.rfind("lin:", 0) == 0) {
        auto a = args(4);
        return Int(a[0]) * n + a[1];
    }
    if (formula.rfind("quad:", 0) == 0) {
        auto a = args(5);
        Int num = Int(a[0]) * n * n + Int(a[1]) * n + a[2];
        if (num % a[3] != 0) throw consistency_error("formula: non-integral quadratic");
        return num / a[3];
    }
    if (formula.rfind("const:", 0) == 0) return Int(std::stol(formula.substr(6)));
    throw invalid_parameter("formula: cannot parse '" + formula + "'");
}

std::optional<bool> eval_splits(const std::string& expr, long p, long n) {
    if (expr == "yes") return true;
    if (expr == "no") return false;
    if (expr == "?") return std::nullopt;
    if (expr.rfind("iff:", 0) == 0) return eval_pcond(expr.substr(4), p, n);
    throw invalid_parameter("splits: cannot parse '" + expr + "'");
}

bool match_pattern(const std::string& pattern, const Partition& lam) {
    const long n = lam.n();
    const auto& ps = lam.parts();
    if (pattern == "beta_n") return n >= 3 && lam == beta(int(n));
    if (pattern == "(n-1,1)") return ps.size() == 2 && ps[0] == n - 1 && ps[1] == 1;
    if (pattern == "(n-2,2)") return ps.size() == 2 && ps[0] == n - 2 && ps[1] == 2;
    if (pattern == "(n-2,1^2)")
        return ps.size() == 3 && ps[0] == n - 2 && ps[1] == 1 && ps[2] == 1;
    return lam == Partition::parse(pattern);
}

std::optional<Int> table_dim_lookup(const Partition& lam, int p) {
    std::optional<Int> found;
    for (const auto& row : tables().dims) {
        if (!match_pattern(row.pattern, lam)) continue;
        if (!eval_pcond(row.pcond, p, lam.n())) continue;
        if (!eval_pcond(row.ncond, p, lam.n())) continue;
        Int v = eval_formula(row.formula, lam.n());
        if (found && *found != v)
            throw consistency_error("dimension rows disagree at row " + row.id);
        found = v;
    }
    return found;
}

std::optional<bool> table_splits_lookup(const Partition& lam, int p) {
    std::optional<bool> found;
    for (const auto& row : tables().dims) {
        if (!match_pattern(row.pattern, lam)) continue;
        if (!eval_pcond(row.pcond, p, lam.n())) continue;
        if (!eval_pcond(row.ncond, p, lam.n())) continue;
        auto v = eval_splits(row.splits, p, lam.n());
        if (!v) continue;
        if (found && *found != *v)
            throw consistency_error("splitting rows disagree at row " + row.id);
        found = v;
    }
    return found;
}

} // namespace symrep
