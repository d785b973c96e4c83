#include "symrep/verify.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "symrep/bounds.hpp"
#include "symrep/classify.hpp"
#include "symrep/meataxe.hpp"
#include "symrep/specht.hpp"
#include "symrep/tables.hpp"

namespace symrep {

namespace {

class Suite {
  public:
    Suite(std::string name, const VerifyOptions& opt) : opt_(opt) {
        result_.name = std::move(name);
        start_ = std::chrono::steady_clock::now();
    }
    void check(const std::string& id, bool pass, const std::string& details = "") {
        CheckLine line{id, pass, details};
        if (opt_.progress) opt_.progress(result_.name, line);
        result_.checks.push_back(std::move(line));
    }
    template <typename F>
    void guarded(const std::string& id, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            check(id, false, std::string("exception: ") + e.what());
        }
    }
    int cap(int full) const { return opt_.max_n > 0 ? std::min(opt_.max_n, full) : full; }
    std::uint64_t seed() const { return opt_.seed; }
    SuiteResult finish() {
        result_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(result_);
    }

  private:
    const VerifyOptions& opt_;
    SuiteResult result_;
    std::chrono::steady_clock::time_point start_;
};

std::string pstr(const Partition& lam) { return "(" + lam.str() + ")"; }

} // namespace

SuiteResult suite_mullineux(const VerifyOptions& opt) {
    Suite s("mullineux", opt);
    s.guarded("anchors", [&] {
        const bool a = mullineux(Partition::parse("6,2,1"), 3) == Partition::parse("5,2,2");
        const bool b = mullineux(Partition::parse("4,3,3"), 3) == Partition::parse("7,2,1");
        const bool a2 =
            mullineux_via_symbol(Partition::parse("6,2,1"), 3) == Partition::parse("5,2,2");
        const bool b2 =
            mullineux_via_symbol(Partition::parse("4,3,3"), 3) == Partition::parse("7,2,1");
        s.check("anchors", a && b && a2 && b2);
    });
    for (int p : {2, 3, 5}) {
        const int nmax = s.cap(p == 2 ? 20 : 16);
        bool invol = true, preserve = true, agree = true, fixed_iff_split = true;
        std::string bad;
        for (int n = 1; n <= nmax; ++n) {
            for (const auto& lam : p_regular_partitions(n, p)) {
                Partition m = mullineux(lam, p);
                if (m.n() != n || !is_p_regular(m, p)) {
                    preserve = false;
                    bad = pstr(lam);
                }
                if (mullineux(m, p) != lam) {
                    invol = false;
                    bad = pstr(lam);
                }
                if (p == 2 && m != lam) {
                    invol = false;
                    bad = pstr(lam);
                }
                if (mullineux_via_symbol(lam, p) != m) {
                    agree = false;
                    bad = pstr(lam);
                }
                if (p != 2 && n >= 1 && n <= 16) {
                    if (in_PA(lam, p) != (m == lam)) {
                        fixed_iff_split = false;
                        bad = pstr(lam);
                    }
                }
            }
        }
        const std::string tag = "p=" + std::to_string(p);
        s.check("involution/" + tag, invol, bad);
        s.check("preservation/" + tag, preserve, bad);
        s.check("two-algorithms/" + tag, agree, bad);
        if (p != 2) s.check("fixed-iff-splits/" + tag, fixed_iff_split, bad);
    }
    return s.finish();
}

SuiteResult suite_dimensions(const VerifyOptions& opt) {
    Suite s("dimensions", opt);
    const int nmax = s.cap(12);
    OracleLimits lim;
    lim.max_n = std::max(lim.max_n, nmax);
    for (int p : {2, 3, 5}) {
        bool all = true;
        std::string bad;
        long instances = 0;
        for (int n = 5; n <= nmax; ++n) {
            for (const auto& lam : p_regular_partitions(n, p)) {
                auto cf = dim_closed_form(lam, p);
                if (!cf) continue;
                ++instances;
                const long d = dim_D(lam, p, lim);
                if (Int(d) != *cf) {
                    all = false;
                    bad = pstr(lam) + " oracle " + std::to_string(d);
                }
            }
        }
        s.check("closed-forms/p=" + std::to_string(p), all,
                bad.empty() ? std::to_string(instances) + " instances" : bad);
    }
    s.guarded("anchor-21", [&] {
        s.check("anchor-21", dim_D(Partition::parse("5,3"), 5, lim) == 21);
    });
    return s.finish();
}

SuiteResult suite_bounds(const VerifyOptions& opt) {
    Suite s("bounds", opt);
    const int nmax = s.cap(13);
    OracleLimits lim;
    lim.max_n = std::max(lim.max_n, nmax);
    for (int p : {2, 3}) {
        bool all = true;
        std::string bad;
        long checked = 0;
        for (int n = 5; n <= nmax; ++n) {
            for (const auto& lam : p_regular_partitions(n, p)) {
                if (lam == Partition({n})) continue;
                const long d = dim_D(lam, p, lim);
                for (const auto& rep : lower_bounds(lam, p)) {
                    if (!rep.applicable) continue;
                    ++checked;
                    if (rep.lower && Rational(d) < *rep.lower) {
                        all = false;
                        bad = pstr(lam) + " " + rep.source + " lower";
                    }
                    if (rep.upper && Rational(d) > *rep.upper) {
                        all = false;
                        bad = pstr(lam) + " " + rep.source + " upper";
                    }
                }
            }
        }
        s.check("sandwich/p=" + std::to_string(p), all,
                bad.empty() ? std::to_string(checked) + " bounds" : bad);
    }
    s.guarded("refined-exponential", [&] {
        bool all = true;
        std::string bad;
        for (int n = 5; n <= std::min(8, nmax); ++n) {
            for (const auto& lam : p_regular_partitions(n, 3)) {
                if (lam == Partition({n})) continue;
                const long m = min_m_with_linear_submodule(lam, 3, lim);
                const long d = dim_D(lam, 3, lim);
                for (const auto& rep : lower_bounds(lam, 3, m)) {
                    if (!rep.applicable || rep.source != "exp3-submodule") continue;
                    if (rep.lower && Rational(d) < *rep.lower) {
                        all = false;
                        bad = pstr(lam);
                    }
                }
            }
        }
        s.check("refined-exponential", all, bad);
    });
    s.guarded("depth-cap", [&] {
        auto c324 = depth_cap_applies(324, true);
        auto c1024 = depth_cap_applies(1024, true);
        const bool ok = c324 && c324->admits(7) && c1024 && c1024->admits(8) &&
                        !depth_cap_applies(323, true) && !depth_cap_applies(400, false) &&
                        c324->max_ell() >= 7;
        s.check("depth-cap", ok);
    });
    return s.finish();
}

SuiteResult suite_splitting(const VerifyOptions& opt) {
    Suite s("splitting", opt);
    const int nmax = s.cap(9);
    for (int p : {2, 3}) {
        bool all = true;
        std::string bad;
        for (int n = 5; n <= nmax; ++n) {
            for (const auto& lam : p_regular_partitions(n, p)) {
                if (lam == Partition({n}) || mullineux(lam, p) == Partition({n})) continue;
                const bool by_comb = in_PA(lam, p);
                const bool by_module = splits_over_An(lam, p, opt.seed);
                if (by_comb != by_module) {
                    all = false;
                    bad = pstr(lam);
                }
            }
        }
        s.check("splits-iff/p=" + std::to_string(p), all, bad);
    }
    return s.finish();
}

SuiteResult suite_js_branching(const VerifyOptions& opt) {
    Suite s("js-branching", opt);
    const int nmax = s.cap(8);
    for (int p : {2, 3}) {
        bool all = true;
        std::string bad;
        for (int n = 5; n <= nmax; ++n) {
            GeneratorSet sub = young_gens({n - 1}, n, false);
            for (const auto& lam : p_regular_partitions(n, p)) {
                if (lam == Partition({n}) || mullineux(lam, p) == Partition({n})) continue;
                ModuleRep rep = rep_D(lam, p);
                auto mats = restrict_to(rep, sub, opt.seed);
                const bool irr = meataxe_irreducible(mats, opt.seed);
                if (irr != is_JS(lam, p)) {
                    all = false;
                    bad = pstr(lam);
                }
            }
        }
        s.check("point-stabilizer/p=" + std::to_string(p), all, bad);
    }
    return s.finish();
}

SuiteResult suite_invariant_spaces(const VerifyOptions& opt) {
    Suite s("invariant-spaces", opt);
    const int nmax = s.cap(11);
    for (int p : {2, 3}) {
        bool all = true;
        std::string bad;
        long cases = 0;
        for (int n = 5; n <= nmax; ++n) {
            for (const auto& lam : p_regular_partitions(n, p)) {
                const long ell = n - lam.first();
                if (ell < 1 || 2 * ell >= n) continue;
                ModuleRep rep = rep_D(lam, p);
                for (long L = 2 * ell; L < n; ++L) {
                    const long sub_n = n - L;
                    std::vector<Mat> mats;
                    for (long i = 0; i + 1 < sub_n; ++i)
                        mats.push_back(rep.coxeter[std::size_t(i)]);
                    ++cases;
                    const long fd = mats.empty() ? rep.dim : fixed_space_dim(mats);
                    if (fd < 1) {
                        all = false;
                        bad = pstr(lam) + " L=" + std::to_string(L);
                    }
                }
            }
        }
        s.check("trivial-submodule/p=" + std::to_string(p), all,
                bad.empty() ? std::to_string(cases) + " cases" : bad);
    }
    s.guarded("depth2-chain", [&] {
        bool all = true;
        std::string bad;
        for (int n = 5; n <= nmax; ++n) {
            for (int p : {2, 3}) {
                const bool applies =
                    (p == 3 && (n % 3 == 0 || n % 3 == 1)) ||
                    (p == 2 && (n % 4 == 0 || n % 4 == 1 || n % 4 == 3));
                if (!applies) continue;
                Partition lam({n - 2, 2});
                if (!is_p_regular(lam, p)) continue;
                ModuleRep rep = rep_D(lam, p);
                std::vector<Mat> mats;
                for (int i = 0; i + 1 < n - 3; ++i) mats.push_back(rep.coxeter[std::size_t(i)]);
                const long fd = mats.empty() ? rep.dim : fixed_space_dim(mats);
                if (fd < 1) {
                    all = false;
                    bad = "n=" + std::to_string(n) + " p=" + std::to_string(p);
                }
            }
        }
        s.check("depth2-chain", all, bad);
    });
    // translation-subgroup invariants: exhaustive characterizations
    s.guarded("translations-8-3", [&] {
        GeneratorSet v3 = build_group(parse_descriptor("vsub:3,2", 8), 8);
        std::set<Partition> expect;
        for (const char* t : {"7,1", "6,1,1", "5,3"}) {
            Partition lam = Partition::parse(t);
            expect.insert(lam);
            expect.insert(mullineux(lam, 3));
        }
        bool all = true;
        std::string bad;
        for (const auto& lam : p_regular_partitions(8, 3)) {
            if (lam == Partition({8}) || mullineux(lam, 3) == Partition({8})) continue;
            ModuleRep rep = rep_D(lam, 3);
            auto mats = restrict_to(rep, v3, opt.seed);
            const bool zero = fixed_space_dim(mats) == 0;
            if (zero != (expect.count(lam) > 0)) {
                all = false;
                bad = pstr(lam);
            }
        }
        s.check("translations-8-3", all, bad);
    });
    s.guarded("translations-9-2", [&] {
        GeneratorSet v2 = build_group(parse_descriptor("vsub:2,3", 9), 9);
        std::set<Partition> expect{Partition::parse("8,1"), Partition::parse("5,4")};
        bool all = true;
        std::string bad;
        for (const auto& lam : p_regular_partitions(9, 2)) {
            if (lam == Partition({9})) continue;
            ModuleRep rep = rep_D(lam, 2);
            auto mats = restrict_to(rep, v2, opt.seed);
            const bool zero = fixed_space_dim(mats) == 0;
            if (zero != (expect.count(lam) > 0)) {
                all = false;
                bad = pstr(lam);
            }
        }
        s.check("translations-9-2", all, bad);
    });
    if (s.cap(16) >= 16) {
        s.guarded("translations-16-3", [&] {
            OracleLimits big;
            big.max_n = 16;
            GeneratorSet v4 = build_group(parse_descriptor("vsub:4,2", 16), 16);
            bool all = true;
            for (const char* t : {"14,1,1"}) {
                Partition lam = Partition::parse(t);
                for (const Partition& use : {lam, mullineux(lam, 3)}) {
                    ModuleRep rep = rep_D(use, 3, big);
                    auto mats = restrict_to(rep, v4, opt.seed);
                    if (rep.dim != 105 || fixed_space_dim(mats) != 0) all = false;
                }
            }
            s.check("translations-16-3", all);
        });
    }
    return s.finish();
}

// ---- classification instances -------------------------------------------------

namespace {

struct OracleOutcome {
    bool irreducible_plus = false;
    bool irreducible_minus = false;
    bool split = false;
    std::optional<long> spade_plus, spade_minus; // order-9 trace values
};

OracleOutcome oracle_restrict_sn(int p, int n, const Partition& lam, const std::string& desc,
                                 std::uint64_t seed) {
    GroupSpec spec = parse_descriptor(desc, n);
    GeneratorSet gs = build_group(spec, n);
    ModuleRep rep = rep_D(lam, p);
    auto mats = restrict_to(rep, gs, seed);
    OracleOutcome out;
    out.irreducible_plus = meataxe_irreducible(mats, seed);
    return out;
}

OracleOutcome oracle_restrict_an_split(int p, int n, const Partition& lam,
                                       const std::string& desc, std::uint64_t seed,
                                       bool spade_test) {
    GroupSpec spec = parse_descriptor(desc, n);
    GeneratorSet gs = build_group(spec, n);
    GeneratorSet alt = young_gens({n}, n, true);
    ModuleRep rep = rep_D(lam, p);
    auto an_mats = restrict_to(rep, alt, seed);
    auto g_mats = restrict_to(rep, gs, seed);
    auto pair = split_components(an_mats, g_mats, seed);
    OracleOutcome out;
    out.split = true;
    out.irreducible_plus = meataxe_irreducible(pair.plus_extra, seed);
    out.irreducible_minus = meataxe_irreducible(pair.minus_extra, seed);
    if (spade_test) {
        auto word = find_element_of_order(gs, 9, seed);
        if (!word) throw consistency_error("no order-9 element found");
        auto matof = [&](const std::vector<Mat>& comp) {
            Mat acc = Mat::identity(comp[0].q(), comp[0].rows());
            // the search composes functions left applied last; matrices reverse
        for (int gi : *word) acc = acc * comp[std::size_t(gi)];
            return acc;
        };
        out.spade_plus = brauer_value_order9(matof(pair.plus_extra));
        out.spade_minus = brauer_value_order9(matof(pair.minus_extra));
    }
    return out;
}

} // namespace

SuiteResult suite_classification(const VerifyOptions& opt) {
    Suite s("classification", opt);
    const auto seed = opt.seed;

    struct SnInstance {
        const char* name;
        int p, n;
        const char* lam;
        const char* group;
        Answer expected;
    };
    const SnInstance sn_instances[] = {
        {"S12-frobenius", 2, 5, "3,2", "frob:5,4", Answer::Irreducible},
        {"S13-projective", 2, 6, "4,2", "pgl2:5", Answer::Irreducible},
        {"S1-fano", 5, 7, "5,2", "psl3:2", Answer::Irreducible},
        {"S1-gamma8", 3, 9, "7,2", "pgammal2:8", Answer::Irreducible},
        {"m11-heart2", 2, 11, "9,2", "m11", Answer::Irreducible},
        {"m11-ext2", 3, 11, "9,1,1", "m11", Answer::Irreducible},
        {"m12-heart2", 2, 12, "10,2", "m12", Answer::Irreducible},
        {"agl32-ext2", 3, 8, "6,1,1", "agl:3,2", Answer::Irreducible},
        {"neg-nonjs-point", 2, 5, "4,1", "sn-1", Answer::Reducible},
        {"neg-nonjs-point-3", 3, 6, "4,2", "sn-1", Answer::Reducible},
        {"neg-m11-p3", 3, 11, "9,2", "m11", Answer::Reducible},
    };
    for (const auto& inst : sn_instances) {
        s.guarded(inst.name, [&] {
            const Partition lam = Partition::parse(inst.lam);
            GroupSpec spec = parse_descriptor(inst.group, inst.n);
            Verdict v = classify_sn(inst.p, inst.n, lam, spec);
            auto oracle = oracle_restrict_sn(inst.p, inst.n, lam, inst.group, seed);
            const bool match = v.answer == inst.expected &&
                               oracle.irreducible_plus == (inst.expected == Answer::Irreducible);
            s.check(inst.name, match,
                    "engine " + answer_name(v.answer) + " (" + v.rule +
                        (v.table_row.empty() ? "" : " " + v.table_row) + "), meataxe " +
                        (oracle.irreducible_plus ? "irreducible" : "reducible"));
        });
    }

    struct AnInstance {
        const char* name;
        int p, n;
        const char* lam;
        const char* group;
        bool expect_both; // both halves irreducible
    };
    const AnInstance an_instances[] = {
        {"A7-dihedral", 2, 5, "3,2", "frob:5,2", true},
        {"A8-asl", 2, 9, "5,4", "asl:2,3", true},
        {"A8-quaternion", 2, 9, "5,4", "aq8", true},
        {"A1-m12", 2, 12, "6,5,1", "m12", true},
    };
    for (const auto& inst : an_instances) {
        s.guarded(inst.name, [&] {
            const Partition lam = Partition::parse(inst.lam);
            GroupSpec spec = parse_descriptor(inst.group, inst.n);
            Verdict v = classify_an(inst.p, inst.n, lam, spec);
            auto oracle =
                oracle_restrict_an_split(inst.p, inst.n, lam, inst.group, seed, false);
            const bool both = oracle.irreducible_plus && oracle.irreducible_minus;
            const bool match = (v.answer == Answer::Irreducible) == inst.expect_both &&
                               both == inst.expect_both;
            s.check(inst.name, match,
                    "engine " + answer_name(v.answer) + " (" + v.rule +
                        (v.table_row.empty() ? "" : " " + v.table_row) + "), halves " +
                        (oracle.irreducible_plus ? "irr" : "red") + "/" +
                        (oracle.irreducible_minus ? "irr" : "red"));
        });
    }

    s.guarded("A9-spade", [&] {
        const Partition lam = Partition::parse("5,4");
        GroupSpec spec = parse_descriptor("psl2:8", 9);
        Verdict v = classify_an(2, 9, lam, spec);
        auto oracle = oracle_restrict_an_split(2, 9, lam, "psl2:8", seed, true);
        // exactly one component is irreducible, and it is the one whose
        // order-9 trace value is -1
        const bool one = oracle.irreducible_plus != oracle.irreducible_minus;
        bool trace_ok = false;
        if (one && oracle.spade_plus && oracle.spade_minus) {
            const long vplus = *oracle.spade_plus, vminus = *oracle.spade_minus;
            trace_ok = oracle.irreducible_plus ? (vplus == -1 && vminus != -1)
                                               : (vminus == -1 && vplus != -1);
        }
        s.check("A9-spade",
                v.answer == Answer::ConditionallyIrreducible && v.condition_id == "spade" &&
                    one && trace_ok,
                "engine " + answer_name(v.answer) + ", halves " +
                    (oracle.irreducible_plus ? "irr" : "red") + "/" +
                    (oracle.irreducible_minus ? "irr" : "red"));
    });

    s.guarded("m12-split-651", [&] {
        // the split pair has halves of dimension 144
        const Partition lam = Partition::parse("6,5,1");
        GeneratorSet alt = young_gens({12}, 12, true);
        ModuleRep rep = rep_D(lam, 2);
        auto an_mats = restrict_to(rep, alt, seed);
        auto pair = split_components(an_mats, {}, seed);
        s.check("m12-split-651",
                rep.dim == 288 && pair.plus[0].rows() == 144 && pair.minus[0].rows() == 144,
                "dim " + std::to_string(rep.dim));
    });

    s.guarded("m11@11-heart-dim44", [&] {
        s.check("m11@11-heart-dim44", dim_D(Partition::parse("9,2"), 2) == 44);
    });
    s.guarded("m11@11-ext-dim45", [&] {
        s.check("m11@11-ext-dim45", dim_D(Partition::parse("9,1,1"), 3) == 45);
    });
    return s.finish();
}

SuiteResult suite_basic_spin(const VerifyOptions& opt) {
    Suite s("basic-spin", opt);
    const int nmax = s.cap(12);
    bool all = true;
    std::string bad;
    for (int n = 5; n <= nmax; ++n) {
        const Partition bn = beta(n);
        for (const auto& lam : p_regular_partitions(n, 2)) {
            if (lam == Partition({n})) continue;
            ModuleRep rep = rep_D(lam, 2, {}, {0, 1});
            const int deg = minpoly_degree_of_3cycle(rep);
            const bool quadratic = deg <= 2;
            if (quadratic != (lam == bn)) {
                all = false;
                bad = pstr(lam) + " degree " + std::to_string(deg);
            }
        }
    }
    s.check("three-cycle-quadratic", all, bad);
    (void)opt;
    return s.finish();
}

SuiteResult suite_groups(const VerifyOptions& opt) {
    Suite s("groups", opt);
    struct Row {
        const char* desc;
        int ambient;
        long order;
        int transitivity; // -1 to skip
    };
    const Row rows[] = {
        {"young:5", 6, 120, -1},
        {"young:3,2,alt", 5, 6, -1},
        {"young:13", 13, 6227020800L, -1},
        {"an", 6, 360, -1},
        {"wreath:3x2", 6, 72, -1},
        {"wreath:5x2", 10, 28800, -1},
        {"wreath:3x2,alt", 6, 36, -1},
        {"agl:3,2", 8, 1344, 3},
        {"agl:4,2", 16, 322560, 3},
        {"agl:2,3", 9, 432, 2},
        {"asl:2,3", 9, 216, 2},
        {"aq8", 9, 72, 2},
        {"vsub:3,2", 8, 8, -1},
        {"vsub:2,3", 9, 9, -1},
        {"frob:5,4", 5, 20, 2},
        {"frob:5,2", 5, 10, 1},
        {"psl2:4", 5, 60, 3},
        {"psl2:5", 6, 60, 2},
        {"psl2:7", 8, 168, 2},
        {"psl2:8", 9, 504, 3},
        {"psl2:9", 10, 360, 2},
        {"psl2:11", 12, 660, 2},
        {"psl2:13", 14, 1092, 2},
        {"pgl2:5", 6, 120, 3},
        {"pgl2:9", 10, 720, 3},
        {"psigmal2:9", 10, 720, 2},
        {"pgammal2:9", 10, 1440, 3},
        {"pgammal2:8", 9, 1512, 3},
        {"m10", 10, 720, 3},
        {"psl3:2", 7, 168, 2},
        {"m11", 11, 7920, 4},
        {"m11@12", 12, 7920, 3},
        {"m12", 12, 95040, 5},
    };
    for (const auto& row : rows) {
        s.guarded(row.desc, [&] {
            GroupSpec spec = parse_descriptor(row.desc, row.ambient);
            GeneratorSet gs = build_group(spec, row.ambient);
            const Int ord = group_order(gs, opt.seed);
            bool ok = ord == Int(row.order);
            std::string detail = "order " + ord.str();
            if (row.transitivity >= 0) {
                const int t = transitivity_degree(gs, row.transitivity + 1);
                ok = ok && t == row.transitivity;
                detail += " transitivity " + std::to_string(t);
            }
            s.check(row.desc, ok, detail);
        });
    }
    s.guarded("young-alt-order", [&] {
        // the even part of a young group has half its order whenever some
        // block admits an odd element
        GeneratorSet g = build_group(parse_descriptor("young:4,3,alt", 9), 9);
        s.check("young-alt-order", group_order(g, opt.seed) == Int(72));
    });
    s.guarded("translations-regular", [&] {
        GeneratorSet v = build_group(parse_descriptor("vsub:2,3", 9), 9);
        s.check("translations-regular",
                is_transitive(v) && group_order(v, opt.seed) == Int(9));
    });
    s.guarded("parity", [&] {
        bool ok = true;
        ok = ok && all_gens_even(build_group(parse_descriptor("an", 7), 7));
        ok = ok && all_gens_even(build_group(parse_descriptor("young:4,3,alt", 9), 9));
        ok = ok && all_gens_even(build_group(parse_descriptor("m12", 12), 12));
        ok = ok && all_gens_even(build_group(parse_descriptor("frob:5,2", 5), 5));
        ok = ok && !all_gens_even(build_group(parse_descriptor("frob:5,4", 5), 5));
        s.check("parity", ok);
    });
    return s.finish();
}

std::vector<std::string> suite_names() {
    return {"mullineux", "dimensions",       "bounds",        "splitting",
            "js-branching", "invariant-spaces", "classification", "basic-spin",
            "groups"};
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    for (const auto& name : names) {
        if (name == "mullineux")
            out.push_back(suite_mullineux(opt));
        else if (name == "dimensions")
            out.push_back(suite_dimensions(opt));
        else if (name == "bounds")
            out.push_back(suite_bounds(opt));
        else if (name == "splitting")
            out.push_back(suite_splitting(opt));
        else if (name == "js-branching")
            out.push_back(suite_js_branching(opt));
        else if (name == "invariant-spaces")
            out.push_back(suite_invariant_spaces(opt));
        else if (name == "classification")
            out.push_back(suite_classification(opt));
        else if (name == "basic-spin")
            out.push_back(suite_basic_spin(opt));
        else if (name == "groups")
            out.push_back(suite_groups(opt));
        else
            throw invalid_parameter("unknown suite '" + name + "'");
    }
    return out;
}

} // namespace symrep
