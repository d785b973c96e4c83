#pragma once

#include <stdexcept>
#include <string>

namespace symrep {

// Bad arguments, malformed descriptors, non-prime p, p-singular input, ...
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Work refused because it exceeds a configured gate (degree, n, dimension).
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The meataxe ran out of its iteration budget without a certificate.
// Distinct from "reducible": callers must not treat it as a verdict.
struct inconclusive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal dichotomy or cross-check failed; indicates a bug.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace symrep
