// One line per acceptance criterion; exits nonzero if any criterion fails.

#include "hermsph/verify.hpp"

#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

using namespace hermsph;

int main()
{
    std::vector<std::pair<std::string, std::function<VerificationReport()>>> criteria = {
        {"A1", [] { return verify_cocycle({2, 3, 4}, 200); }},
        {"A2", [] { return verify_rho(4); }},
        {"A3", [] { return verify_spherical_fe({1, 2, 3}, 3); }},
        {"A4", [] { return verify_polynomial_invariance({1, 2, 3}, 3); }},
        {"A5", [] { return verify_n1_consistency(); }},
        {"A6", [] { return verify_oracle_omega({3, 5}, 2); }},
        {"A7", [] { return verify_siegel_n1(4); }},
        {"A8", [] { return verify_siegel_chain(4); }},
        {"A9", [] { return verify_zeta_k1(4); }},
        {"A10", [] { return verify_algebra(500); }},
    };
    int failed = 0;
    for (const auto& [id, run] : criteria) {
        VerificationReport r = run();
        std::printf("%s %s %s: %ld cases, %zu failures, %ld skipped, %.1f s\n", id.c_str(), r.pass() ? "PASS" : "FAIL",
                    r.suite.c_str(), r.cases, r.failures.size(), r.skipped, r.seconds);
        for (const auto& f : r.failures) std::printf("    failed: %s\n", f.params.c_str());
        std::fflush(stdout);
        if (!r.pass()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
