// Acceptance gate: runs every property suite at the standard sizes and
// prints one pass/fail line per criterion. Exits nonzero if any fail.

#include <cstdint>
#include <cstdio>
#include <cstdlib>

#include "qpad/selfcheck.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0x5eedULL;
    if (const char* env = std::getenv("QPAD_SEED")) {
        seed = std::strtoull(env, nullptr, 10);
    }
    if (argc > 1) {
        seed = std::strtoull(argv[1], nullptr, 10);
    }

    const auto results = qpad::run_selfcheck(seed, 1.0);
    bool all_passed = true;
    for (const auto& suite : results) {
        std::printf("[%s] %-28s %zu cases, %zu failures%s%s\n",
                    suite.passed() ? "PASS" : "FAIL", suite.name.c_str(), suite.cases,
                    suite.failures, suite.note.empty() ? "" : ": ", suite.note.c_str());
        all_passed = all_passed && suite.passed();
    }
    std::printf("%s\n", all_passed ? "acceptance: all criteria passed"
                                   : "acceptance: FAILURES PRESENT");
    return all_passed ? 0 : 1;
}
