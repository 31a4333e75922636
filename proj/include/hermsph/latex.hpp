#pragma once

#include "hermsph/ratfunc.hpp"

#include <string>

namespace hermsph {

// One-way LaTeX rendering with X_i = q^{z_i} and u = q^{1/2}.  A coefficient
// +-q^{k/2} is folded into the exponent, e.g. -u^{-2} X_1 X_2^{-1} gives
// "- q^{z_1-z_2-1}".  Denominator factors print as "q^{m.z} + c".
std::string emit_latex(const FactorizedRatFunc& f);
std::string emit_latex(const ExactScalar& c);

} // namespace hermsph
