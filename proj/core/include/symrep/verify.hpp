#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace symrep {

struct CheckLine {
    std::string id;
    bool pass = false;
    std::string details;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckLine> checks;
    double seconds = 0;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    // cap on the exhaustive ranges; 0 means the full published ranges
    int max_n = 0;
    // progress callback (suite, check id) invoked as checks complete
    std::function<void(const std::string&, const CheckLine&)> progress;
};

SuiteResult suite_mullineux(const VerifyOptions& opt);      // involution, agreement
SuiteResult suite_dimensions(const VerifyOptions& opt);     // closed forms vs the oracle
SuiteResult suite_bounds(const VerifyOptions& opt);         // sandwich and threshold bounds
SuiteResult suite_splitting(const VerifyOptions& opt);      // commutant vs the double test
SuiteResult suite_js_branching(const VerifyOptions& opt);   // point-stabilizer irreducibility
SuiteResult suite_invariant_spaces(const VerifyOptions& opt);
SuiteResult suite_classification(const VerifyOptions& opt); // engine vs meataxe instances
SuiteResult suite_basic_spin(const VerifyOptions& opt);     // quadratic-element recognition
SuiteResult suite_groups(const VerifyOptions& opt);         // constructor orders/transitivity

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opt);
std::vector<std::string> suite_names();

} // namespace symrep
