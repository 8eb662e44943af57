#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pline/orbits.hpp"

namespace pline {

/// One verification check: a theorem-level statement evaluated exactly
/// on the bundled desk-scale rings.
struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double millis = 0.0;
};

/// Run the full verification suite (exact checks, no tolerances).
/// Deterministic for a fixed seed.
std::vector<CheckResult> run_verification(const Budget& budget = {}, std::uint64_t seed = 20260801,
                                          int threads = 1);

/// Render one line per check, "PASS"/"FAIL" first.
std::string format_check_line(const CheckResult& c);

} // namespace pline
