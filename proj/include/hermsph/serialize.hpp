#pragma once

#include "hermsph/ratfunc.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace hermsph {

// Canonical JSON interchange format:
//   { "nvars": n,
//     "num": [ { "exps": [..], "coeff": { "num_u": [..], "den_u": [..] } }, .. ],
//     "den": [ { "exps": [..], "coeffA": {..}, "coeffB": {..}, "mult": m }, .. ] }
// Coefficient arrays are integers, little-endian by degree in u; numerator
// terms are sorted by exps in graded-lex order.  Integers that do not fit in
// 64 bits are written as decimal strings.
nlohmann::json to_json(const ExactScalar& s);
nlohmann::json to_json(const FactorizedRatFunc& f);

ExactScalar scalar_from_json(const nlohmann::json& j);
FactorizedRatFunc ratfunc_from_json(const nlohmann::json& j);

// dump() with two-space indentation; byte-deterministic.
std::string dump(const nlohmann::json& j);

} // namespace hermsph
