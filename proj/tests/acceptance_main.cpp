// Acceptance driver: runs every verification suite at its full published
// range and prints one pass/fail line per criterion.

#include <cstdio>
#include <cstring>

#include "symrep/verify.hpp"

int main(int argc, char** argv) {
    symrep::VerifyOptions opt;
    opt.seed = 0;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--verbose") == 0) verbose = true;
        if (std::strcmp(argv[i], "--max-n") == 0 && i + 1 < argc) opt.max_n = std::atoi(argv[i + 1]);
    }
    if (verbose)
        opt.progress = [](const std::string& suite, const symrep::CheckLine& line) {
            std::fprintf(stderr, "  %-4s %s/%s %s\n", line.pass ? "ok" : "FAIL", suite.c_str(),
                         line.id.c_str(), line.details.c_str());
        };

    const struct {
        const char* criterion;
        const char* suite;
    } plan[] = {
        {"1 mullineux involution and agreement", "mullineux"},
        {"2 dimension formulas vs oracle", "dimensions"},
        {"3 dimension bounds vs oracle", "bounds"},
        {"4 splitting vs combinatorial criterion", "splitting"},
        {"5 point-stabilizer branching", "js-branching"},
        {"6 invariant spaces", "invariant-spaces"},
        {"7 classification vs chop", "classification"},
        {"8 basic spin recognition", "basic-spin"},
        {"9 group constructors", "groups"},
    };

    int failures = 0;
    for (const auto& item : plan) {
        auto results = symrep::run_suites({item.suite}, opt);
        const auto& r = results.front();
        const bool pass = r.ok();
        if (!pass) ++failures;
        std::printf("%s criterion %s  [%.1fs]\n", pass ? "PASS" : "FAIL", item.criterion,
                    r.seconds);
        if (!pass)
            for (const auto& c : r.checks)
                if (!c.pass)
                    std::printf("       failed check %s %s\n", c.id.c_str(), c.details.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
