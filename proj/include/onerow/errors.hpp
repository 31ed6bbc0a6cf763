#pragma once

#include <stdexcept>
#include <string>

namespace onerow {

// Bad input: rank mismatch, malformed text, unsupported parameter.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Term-count cap exceeded; reported like a usage problem.
struct BudgetError : UsageError {
    using UsageError::UsageError;
};

// Division by zero or a vanishing Pochhammer denominator.
struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

// A rational expression that was expected to be a Laurent polynomial was not.
struct NonPolynomialResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace onerow
