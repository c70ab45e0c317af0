#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpad {

/// One property suite's outcome. `note` is empty on pass and carries a
/// diagnostic on failure, so reports for a fixed seed are reproducible.
struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string note;

    bool passed() const { return failures == 0; }
};

/// Runs every acceptance property suite at the given scale (1.0 = the
/// standard sizes; case counts scale proportionally, timing workloads stay
/// pinned). scale == 0 yields an empty report. Deterministic for a fixed
/// seed apart from the two wall-clock ratio suites.
std::vector<SuiteResult> run_selfcheck(std::uint64_t seed, double scale = 1.0);

}  // namespace qpad
