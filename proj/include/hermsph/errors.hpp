#pragma once

#include <stdexcept>
#include <string>

namespace hermsph {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed parameters: bad lambda, out-of-range n, wrong variable count.
class InputError : public Error {
public:
    using Error::Error;
};

// Division by zero, or a specialization / evaluation landing on a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

// Brute-force enumeration would exceed the configured cell budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

// A representability limit of the factor-tracked rational functions,
// e.g. dividing by a numerator that is not a product of binomials.
class AlgebraError : public Error {
public:
    using Error::Error;
};

} // namespace hermsph
