// Command line front end. Every command prints a single JSON document on
// stdout. Exit codes: 0 success, 2 invalid input, 3 resource gate,
// 4 inconclusive chop.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symrep/bounds.hpp"
#include "symrep/classify.hpp"
#include "symrep/meataxe.hpp"
#include "symrep/specht.hpp"
#include "symrep/tables.hpp"
#include "symrep/verify.hpp"

using json = nlohmann::ordered_json;
using namespace symrep;

namespace {

constexpr int kSchemaVersion = 1;

json base_doc(const std::string& command) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    return doc;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json verdict_json(const Verdict& v) {
    json out;
    out["answer"] = answer_name(v.answer);
    out["case"] = v.rule;
    out["table_row"] = v.table_row.empty() ? json(nullptr) : json(v.table_row);
    out["citations"] = v.citations;
    if (!v.condition_id.empty()) out["condition"] = v.condition_id;
    return out;
}

json rational_json(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

struct Common {
    int p = 2;
    std::string lambda;
    std::uint64_t seed = 0;
    std::string tables_path;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for restrictions of modular symmetric-group modules"};
    app.require_subcommand(1);

    std::string tables_path;
    std::uint64_t seed = 0;
    app.add_option("--tables", tables_path, "override the embedded tables file");
    app.add_option("--seed", seed, "master seed for all randomized internals");

    // ---- mullineux ----
    auto* cmd_mull = app.add_subcommand("mullineux", "the sign-twist involution");
    Common mull_args;
    cmd_mull->add_option("--p", mull_args.p, "characteristic")->required();
    cmd_mull->add_option("--lambda", mull_args.lambda, "partition")->required();

    // ---- normal-nodes ----
    auto* cmd_nn = app.add_subcommand("normal-nodes", "reduced-signature survivors");
    Common nn_args;
    int nn_i = -1;
    cmd_nn->add_option("--p", nn_args.p)->required();
    cmd_nn->add_option("--lambda", nn_args.lambda)->required();
    cmd_nn->add_option("--i", nn_i, "only this residue");

    // ---- js ----
    auto* cmd_js = app.add_subcommand("js", "single-normal-node test");
    Common js_args;
    cmd_js->add_option("--p", js_args.p)->required();
    cmd_js->add_option("--lambda", js_args.lambda)->required();

    // ---- benson ----
    auto* cmd_benson = app.add_subcommand("benson", "does the restriction split");
    Common benson_args;
    cmd_benson->add_option("--p", benson_args.p)->required();
    cmd_benson->add_option("--lambda", benson_args.lambda)->required();

    // ---- dim ----
    auto* cmd_dim = app.add_subcommand("dim", "dimension by formula, bounds, or the oracle");
    Common dim_args;
    bool dim_formula = false, dim_bound = false, dim_oracle = false, dim_no_twist = false;
    int dim_max_n = 13;
    long dim_m = -1;
    cmd_dim->add_flag("--formula", dim_formula, "closed form when one matches");
    cmd_dim->add_flag("--bound", dim_bound, "all applicable bounds");
    cmd_dim->add_flag("--oracle", dim_oracle, "Gram-radical rank");
    cmd_dim->add_flag("--no-twist", dim_no_twist, "forbid computing on the sign-twist image");
    cmd_dim->add_option("--max-n", dim_max_n, "resource gate for the oracle");
    cmd_dim->add_option("--m", dim_m, "linear-submodule depth for the refined bound");
    cmd_dim->add_option("--p", dim_args.p)->required();
    cmd_dim->add_option("--lambda", dim_args.lambda)->required();

    // ---- classify ----
    auto* cmd_cls = app.add_subcommand("classify", "the restriction verdict");
    Common cls_args;
    int cls_n = 0;
    std::string cls_mode = "sn", cls_group;
    bool rw_transitive = false, rw_blocks = false;
    int rw_noniso = -1;
    cmd_cls->add_option("--p", cls_args.p)->required();
    cmd_cls->add_option("--n", cls_n, "ambient degree")->required();
    cmd_cls->add_option("--lambda", cls_args.lambda)->required();
    cmd_cls->add_option("--group", cls_group, "subgroup descriptor")->required();
    cmd_cls->add_option("--mode", cls_mode, "sn | an | qs-sn | qs-an");
    cmd_cls->add_flag("--rw-transitive", rw_transitive, "wreath exception: transitive");
    cmd_cls->add_flag("--rw-blocks-irreducible", rw_blocks,
                      "wreath exception: block projections act irreducibly");
    cmd_cls->add_option("--rw-nonisomorphic", rw_noniso,
                        "wreath exception: half modules not isomorphic (0/1)");

    // ---- restrict ----
    auto* cmd_res = app.add_subcommand("restrict", "run the chop on a concrete restriction");
    Common res_args;
    int res_n = 0, res_component = -1;
    long res_max_dim = 600;
    int res_max_n = 13;
    std::string res_group;
    cmd_res->add_option("--p", res_args.p)->required();
    cmd_res->add_option("--n", res_n)->required();
    cmd_res->add_option("--lambda", res_args.lambda)->required();
    cmd_res->add_option("--group", res_group)->required();
    cmd_res->add_option("--component", res_component,
                        "restrict one half of a split pair (0 or 1)");
    cmd_res->add_option("--max-dim", res_max_dim, "chop dimension gate");
    cmd_res->add_option("--max-n", res_max_n, "oracle degree gate");
    bool res_order9 = false;
    cmd_res->add_flag("--order9-trace", res_order9,
                      "report the lifted trace at an order-9 element (characteristic two)");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "run named acceptance suites");
    std::vector<std::string> verify_names;
    int verify_max_n = 0;
    bool verify_quiet = false;
    cmd_verify->add_option("suites", verify_names, "suite names or 'all'");
    cmd_verify->add_option("--max-n", verify_max_n, "cap the exhaustive ranges");
    cmd_verify->add_flag("--quiet", verify_quiet, "suppress the per-check progress lines");

    // ---- dump-tables ----
    app.add_subcommand("dump-tables", "print the embedded data file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!tables_path.empty()) load_tables_from_file(tables_path);

        if (cmd_mull->parsed()) {
            Partition lam = Partition::parse(mull_args.lambda);
            json doc = base_doc("mullineux");
            doc["p"] = mull_args.p;
            doc["lambda"] = lam.str();
            doc["result"] = mullineux(lam, mull_args.p).str();
            emit(doc);
        } else if (cmd_nn->parsed()) {
            Partition lam = Partition::parse(nn_args.lambda);
            json doc = base_doc("normal-nodes");
            doc["p"] = nn_args.p;
            doc["lambda"] = lam.str();
            json per;
            for (int i = 0; i < nn_args.p; ++i) {
                if (nn_i >= 0 && i != nn_i) continue;
                json nodes = json::array();
                for (const auto& nd : normal_nodes(lam, i, nn_args.p))
                    nodes.push_back({{"row", nd.row}, {"col", nd.col}});
                per[std::to_string(i)] = {{"eps", nodes.size()}, {"nodes", nodes}};
            }
            doc["residues"] = per;
            emit(doc);
        } else if (cmd_js->parsed()) {
            Partition lam = Partition::parse(js_args.lambda);
            json doc = base_doc("js");
            doc["p"] = js_args.p;
            doc["lambda"] = lam.str();
            const bool res = is_JS(lam, js_args.p);
            doc["result"] = res;
            if (res) {
                auto nd = js_removal_target(lam, js_args.p);
                doc["removal_target"] = {{"row", nd.row}, {"col", nd.col}};
            }
            emit(doc);
        } else if (cmd_benson->parsed()) {
            Partition lam = Partition::parse(benson_args.lambda);
            json doc = base_doc("benson");
            doc["p"] = benson_args.p;
            doc["lambda"] = lam.str();
            doc["result"] = in_PA(lam, benson_args.p);
            emit(doc);
        } else if (cmd_dim->parsed()) {
            Partition lam = Partition::parse(dim_args.lambda);
            json doc = base_doc("dim");
            doc["p"] = dim_args.p;
            doc["lambda"] = lam.str();
            if (!dim_formula && !dim_bound && !dim_oracle) dim_formula = true;
            if (dim_formula) {
                auto v = dim_closed_form(lam, dim_args.p);
                doc["formula"] = v ? json(v->str()) : json(nullptr);
                auto sp = splits_closed_form(lam, dim_args.p);
                doc["splits"] = sp ? json(*sp) : json(nullptr);
            }
            if (dim_bound) {
                json arr = json::array();
                std::optional<long> m;
                if (dim_m >= 0) m = dim_m;
                for (const auto& b : lower_bounds(lam, dim_args.p, m)) {
                    json row;
                    row["source"] = b.source;
                    row["applicable"] = b.applicable;
                    row["via_twist"] = b.via_mullineux;
                    row["lower"] = b.lower ? rational_json(*b.lower) : json(nullptr);
                    row["upper"] = b.upper ? rational_json(*b.upper) : json(nullptr);
                    arr.push_back(row);
                }
                doc["bounds"] = arr;
            }
            if (dim_oracle) {
                OracleLimits lim;
                lim.max_n = dim_max_n;
                lim.allow_sign_twist = !dim_no_twist;
                doc["oracle"] = dim_D(lam, dim_args.p, lim);
            }
            emit(doc);
        } else if (cmd_cls->parsed()) {
            Partition lam = Partition::parse(cls_args.lambda);
            GroupSpec spec = parse_descriptor(cls_group, cls_n);
            WreathHeartFlags flags;
            flags.transitive = rw_transitive;
            flags.blocks_act_irreducibly = rw_blocks;
            if (rw_noniso >= 0) flags.halves_nonisomorphic = rw_noniso != 0;
            Verdict v;
            if (cls_mode == "sn")
                v = classify_sn(cls_args.p, cls_n, lam, spec, &flags);
            else if (cls_mode == "an")
                v = classify_an(cls_args.p, cls_n, lam, spec);
            else if (cls_mode == "qs-sn")
                v = classify_quasisimple_sn(cls_args.p, cls_n, lam, spec);
            else if (cls_mode == "qs-an")
                v = classify_quasisimple_an(cls_args.p, cls_n, lam, spec);
            else
                throw invalid_parameter("classify: unknown mode '" + cls_mode + "'");
            json doc = base_doc("classify");
            doc["p"] = cls_args.p;
            doc["n"] = cls_n;
            doc["lambda"] = lam.str();
            doc["group"] = spec.token;
            doc["mode"] = cls_mode;
            doc["verdict"] = verdict_json(v);
            emit(doc);
        } else if (cmd_res->parsed()) {
            Partition lam = Partition::parse(res_args.lambda);
            GroupSpec spec = parse_descriptor(res_group, res_n);
            GeneratorSet gs = build_group(spec, res_n);
            OracleLimits lim;
            lim.max_n = res_max_n;
            MeataxeOptions mopt;
            mopt.max_dim = res_max_dim;
            ModuleRep rep = rep_D(lam, res_args.p, lim);
            json doc = base_doc("restrict");
            doc["p"] = res_args.p;
            doc["n"] = res_n;
            doc["lambda"] = lam.str();
            doc["group"] = spec.token;
            doc["module_dim"] = rep.dim;
            std::vector<Mat> mats;
            if (res_component >= 0) {
                GeneratorSet alt = young_gens({res_n}, res_n, true);
                auto an_mats = restrict_to(rep, alt, seed);
                auto g_mats = restrict_to(rep, gs, seed);
                auto pair = split_components(an_mats, g_mats, seed);
                mats = res_component == 0 ? pair.plus_extra : pair.minus_extra;
                doc["component"] = res_component;
                doc["component_dim"] = mats[0].rows();
                doc["component_field"] = pair.q;
            } else {
                mats = restrict_to(rep, gs, seed);
            }
            auto dims = meataxe_chop(mats, seed, mopt);
            doc["factor_dims"] = dims;
            doc["irreducible"] = dims.size() == 1;
            if (res_order9) {
                auto word = find_element_of_order(gs, 9, seed);
                if (!word) throw invalid_parameter("restrict: no order-9 element found");
                Mat acc = Mat::identity(mats[0].q(), mats[0].rows());
                for (int gi : *word) acc = acc * mats[std::size_t(gi)];
                auto val = brauer_value_order9(acc);
                doc["order9_trace"] = val ? json(*val) : json(nullptr);
            }
            emit(doc);
        } else if (cmd_verify->parsed()) {
            if (verify_names.empty() ||
                (verify_names.size() == 1 && verify_names[0] == "all"))
                verify_names = suite_names();
            VerifyOptions vopt;
            vopt.seed = seed;
            vopt.max_n = verify_max_n;
            if (!verify_quiet)
                vopt.progress = [](const std::string& suite, const CheckLine& line) {
                    std::cerr << (line.pass ? "  ok   " : "  FAIL ") << suite << "/" << line.id
                              << (line.details.empty() ? "" : "  (" + line.details + ")")
                              << "\n";
                };
            auto results = run_suites(verify_names, vopt);
            json doc = base_doc("verify");
            json arr = json::array();
            bool all_ok = true;
            for (const auto& r : results) {
                json sr;
                sr["suite"] = r.name;
                sr["pass"] = r.ok();
                json checks = json::array();
                for (const auto& c : r.checks)
                    checks.push_back({{"id", c.id}, {"pass", c.pass}, {"details", c.details}});
                sr["checks"] = checks;
                arr.push_back(sr);
                all_ok = all_ok && r.ok();
            }
            doc["suites"] = arr;
            doc["pass"] = all_ok;
            emit(doc);
            return all_ok ? 0 : 1;
        } else { // dump-tables
            std::cout << dump_tables();
        }
    } catch (const invalid_parameter& e) {
        json doc = base_doc("error");
        doc["error"] = {{"kind", "invalid-parameter"}, {"message", e.what()}};
        emit(doc);
        return 2;
    } catch (const resource_limit& e) {
        json doc = base_doc("error");
        doc["error"] = {{"kind", "resource-limit"}, {"message", e.what()}};
        emit(doc);
        return 3;
    } catch (const inconclusive& e) {
        json doc = base_doc("error");
        doc["error"] = {{"kind", "inconclusive"}, {"message", e.what()}};
        emit(doc);
        return 4;
    } catch (const std::exception& e) {
        json doc = base_doc("error");
        doc["error"] = {{"kind", "internal"}, {"message", e.what()}};
        emit(doc);
        return 1;
    }
    return 0;
}
