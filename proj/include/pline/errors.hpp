#pragma once

#include <stdexcept>

namespace pline {

// Error taxonomy shared by all modules. Messages carry the failing
// operation and the offending values; the CLI prints them verbatim.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed ring spec, bad modulus, unsupported dimension, ...
struct construction_error : error {
    using error::error;
};

// argument outside the operation's domain (non-unit inverse, inadmissible pair, ...)
struct domain_error : error {
    using error::error;
};

// operation not supported on this ring (enumeration of an infinite ring, ...)
struct capability_error : error {
    using error::error;
};

// configured resource budget exceeded; message names the budget
struct budget_error : error {
    using error::error;
};

// caller violated a stated precondition
struct precondition_error : error {
    using error::error;
};

// arithmetic self-check failed; indicates a bug, not bad input
struct internal_error : error {
    using error::error;
};

} // namespace pline
