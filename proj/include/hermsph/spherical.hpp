#pragma once

#include "hermsph/gamma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hermsph {

struct SphericalInput {
    int n = 1;
    std::vector<int> lambda; // weakly decreasing, lambda_n >= e0
    int e0 = 0;

    // Throws InputError when the invariants fail.
    void validate() const;
};

struct SphericalValue {
    FactorizedRatFunc value; // in X_i = q^{z_i}
    SphericalInput input;
};

// Root-indexed product over positive roots:
// short: (1 - q^{-2} X^{2a}) / (1 - X^{2a}), long: (1 - q^{-1} X^a) / (1 - X^a).
FactorizedRatFunc gamma_z(int n);
// The same function assembled from the i < j and per-index products.
FactorizedRatFunc gamma_z_pairs(int n);
// gamma(sigma z) as an unexpanded product.
FactorProduct gamma_z_factors(const WeylElem& sigma);

// prod_{i=1}^{2n} (1 - (-1)^i q^{-i}) / (1 - q^{-2})^n
ExactScalar q_const(int n);

// Sign convention of the lambda pairing in the Weyl sum.
//   Calibrated: (-1)^{sum l_i (n-i+1)} q^{-sum l_i (n-i+1/2)} / Q
//               * sum_sigma gamma(sigma z) Gamma_sigma(z) q^{-<l, sigma z>}
//   Printed:    the same with both q-exponents of opposite sign.
// Calibrated agrees with the n = 1 closed form; Printed does not once l >= 2.
enum class PairingSign { Calibrated, Printed };

SphericalValue omega_explicit(const SphericalInput& in, PairingSign sign = PairingSign::Calibrated);

// prod over positive roots of g_a: long 2e_i -> X_i^{e0}, short -> (1 + X^a) / (1 - q^{-1} X^a).
FactorProduct f_factor_product(int n, int e0);
FactorizedRatFunc f_factor(int n, int e0);
// Only the e_i - e_j part of f_factor.
FactorProduct f1_factor(int n);

struct InvariantReport {
    bool pass = false;
    std::string detail;                // offending factor or Weyl element
    std::optional<LaurentPoly> poly;   // F * omega when it is a Laurent polynomial
};

// P = F * omega; passes when P has no denominator and is fixed by every
// element of `group` (all of W when empty).
InvariantReport check_polynomial_invariant(const SphericalValue& v, const FactorProduct& F,
                                           const std::vector<WeylElem>& group = {});
InvariantReport check_polynomial_invariant(const SphericalValue& v);

// S_n as a subgroup of W (all signs +1).
std::vector<WeylElem> symmetric_subgroup(int n);

// n = 1 closed form in one variable Y = q^s, with L = lambda - 2e - e0:
// (-1)^lambda q^{e - lambda/2} Y^{e0} / (1 + q^{-1})
//   * (Y^{L+1}(1 - q^{-1} Y^{-2}) - Y^{-L-1}(1 - q^{-1} Y^2)) / (Y - Y^{-1})
FactorizedRatFunc omega_n1_closed(int lambda, int e, int e0);

// q^{m/2} / (1 + q^{-1}) * Y^{e0 - fpow} * (same bracket with L = lam) / (Y - Y^{-1})
FactorizedRatFunc zeta_k1_closed(int m, int lam, int fpow, int e0);

// X_1 -> Y^{-1}: carries the n = 1 explicit formula to the closed form variable.
Substitution n1_identification();

} // namespace hermsph
