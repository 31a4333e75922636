#pragma once

#include "hermsph/weyl.hpp"

namespace hermsph {

/// Gamma factor of the functional equation for sigma, with the dyadic
/// exponent e0 (|2| = q^{-e0}) it was built for.
struct GammaFactor {
    FactorizedRatFunc value;
    WeylElem sigma;
    int e0 = 0;
};

// Short alpha: (1 - q^{-1} X^alpha) / (X^alpha - q^{-1}).
// Long alpha = 2e_i: X_i^{-2 e0}.
// alpha must be positive.
FactorizedRatFunc f_alpha(const Root& alpha, int e0);

// Unexpanded product of f_alpha over the inversion set of sigma.
FactorProduct gamma_factors(const WeylElem& sigma, int e0);

GammaFactor gamma_product(const WeylElem& sigma, int e0);

// Builds Gamma along a written word s_l ... s_1 (rightmost first) using
// Gamma_{s cur}(z) = Gamma_s(cur z) * Gamma_cur(z).  Works for any word,
// reduced or not.
GammaFactor gamma_cocycle(int n, const Word& word, int e0);

// Closed form for rho(z) = (-z_n, ..., -z_1):
// X^{-2 e0 (1,...,1)} * prod_{i<j} (1 - q^{-1} X_i X_j) / (X_i X_j - q^{-1}).
FactorizedRatFunc gamma_rho_closed(int n, int e0);

} // namespace hermsph
