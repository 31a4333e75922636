#pragma once

// Property suites over the whole library.  Each suite reports every case it
// ran and the failing ones with both sides serialized.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace hermsph {

struct CaseFailure {
    std::string params;
    std::string detail;
};

struct VerificationReport {
    explicit VerificationReport(std::string name = {}) : suite(std::move(name)) {}

    std::string suite;
    long cases = 0;
    long skipped = 0; // cases left out for budget or pole reasons
    std::vector<CaseFailure> failures;
    double seconds = 0;

    bool pass() const { return failures.empty(); }
    void fail(std::string params, std::string detail);
    void merge(const VerificationReport& o);
    // Wall time is left out so the output stays deterministic.
    nlohmann::json to_json() const;
};

// Gamma_{s2 s1}(z) = Gamma_{s2}(s1 z) Gamma_{s1}(z); all pairs for n <= 3,
// `random_pairs` seeded pairs for larger n.
VerificationReport verify_cocycle(const std::vector<int>& ns, int random_pairs = 200, unsigned seed = 17);
VerificationReport verify_rho(int max_n = 4);
// omega(z) = Gamma_s(z) omega(s z) for simple s, lambda_1 <= top.
VerificationReport verify_spherical_fe(const std::vector<int>& ns, int top = 3);
// F omega is a W-invariant Laurent polynomial, plus the negative controls.
VerificationReport verify_polynomial_invariance(const std::vector<int>& ns, int top = 3);
VerificationReport verify_n1_consistency();
VerificationReport verify_oracle_omega(const std::vector<int>& primes = {3, 5}, int max_lambda = 2);
VerificationReport verify_siegel_n1(int max_lambda = 4);
VerificationReport verify_siegel_chain(int max_n = 4);
VerificationReport verify_zeta_k1(int max_lam = 4);
VerificationReport verify_algebra(int cases = 500, unsigned seed = 2024);

// Weakly decreasing lambda of length n with e0 <= lambda_n and lambda_1 <= top.
std::vector<std::vector<int>> dominant_weights(int n, int e0, int top);

} // namespace hermsph
