// Acceptance suite: runs every verification check and prints one
// PASS/FAIL line per check. Exits nonzero if anything fails. All checks
// are exact (no tolerances); randomized ones use a fixed seed.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "pline/verify.hpp"

int main(int argc, char** argv) {
    int threads = 2;
    std::uint64_t seed = 20260801;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) threads = std::atoi(argv[++i]);
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
    }

    auto results = pline::run_verification(pline::Budget{}, seed, threads);
    int failed = 0;
    double total_ms = 0;
    for (const auto& c : results) {
        std::printf("%s\n", pline::format_check_line(c).c_str());
        failed += c.pass ? 0 : 1;
        total_ms += c.millis;
    }
    std::printf("%d/%zu checks passed (%.0f ms total)\n", (int)results.size() - failed, results.size(),
                total_ms);
    return failed == 0 ? 0 : 1;
}
