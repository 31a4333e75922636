#pragma once

#include "hermsph/gamma.hpp"

#include <string>
#include <vector>

namespace hermsph {

// Functions of s are rational functions in the single variable V = q^{-s/2}
// (so q^{-s} = V^2) with coefficients in Q(u).
using SVarFunc = FactorizedRatFunc;

struct Verified {
    SVarFunc value;
    bool pass = true;
    std::string detail; // first failing identity, both sides serialized
};

// V^k
SVarFunc v_pow(int k);
// s -> a - s, i.e. V -> q^{-a/2} V^{-1}
Substitution reflect_s(int a);
// q^{z*_i} = (-1)^{n-i+1} q^{i-1/2} q^{-s/2}
Substitution z_star(int n);

enum class ZetaMode { AtS, AtHalfS, AtNMinusHalfS };

// prod_{i=1}^n (1 - q^{-2i}) / (1 - q^{-2(t-i+1)}) at t = s, s/2 or n - s/2.
SVarFunc zeta_matrix(int n, ZetaMode mode);

// zeta(n - s/2) / zeta(s/2), checked against both printed forms.
Verified zeta_ratio(int n);

// Gamma_rho(z*), checked against both printed closed forms.
Verified f_n_from_gamma_rho(int n, int e0);

// F_n(s) * zeta ratio = |2|^{-ns+n^2} prod_{i=0}^{n-1} (1 - (-1)^i q^{-s+i}) / (1 - (-1)^i q^{-(2n-s)+i})
Verified chain_identity(int n, int e0);

// b(pi^lambda; s) for n = 1: 1 + (1 - q^{-1}) sum_{e=1}^{lambda} q^{e(1-s)} - q^{lambda - (lambda+1)s}
SVarFunc siegel_b_n1(int lambda);

// b(s)/(1 - q^{-s}) = |T/2|^{s-1} b(2-s)/(1 - q^{-(2-s)}), |T/2| = q^{-(lambda - e0)}
Verified verify_siegel_fe_n1(int lambda, int e0);

// chi(det T)^{n-1} |det(T/2)|^{s-n} prod_i (1 - (-1)^i q^{-s+i}) / (1 - (-1)^i q^{-(2n-s)+i})
SVarFunc fe_factor(int n, const std::vector<int>& lambda, int e0);

// fe_factor(s) * fe_factor(2n - s) = 1
Verified fe_involution(int n, const std::vector<int>& lambda, int e0);

} // namespace hermsph
