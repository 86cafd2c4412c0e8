#pragma once

#include <stdexcept>
#include <string>

namespace ffp {

// Parameter/validation problems: bad primes, bad family parameters,
// malformed input files.  The CLI maps these to exit code 2.
struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidFamilyParams : ParameterError {
    using ParameterError::ParameterError;
};

struct InvalidPolynomial : ParameterError {
    using ParameterError::ParameterError;
};

struct OddQuotientViolation : ParameterError {
    using ParameterError::ParameterError;
};

struct PrecondViolation : ParameterError {
    using ParameterError::ParameterError;
};

struct ParseError : ParameterError {
    using ParameterError::ParameterError;
};

// A requested k-th root does not exist in the factored monomial form
// (an exponent is not divisible by k, or the unit has no k-th root).
struct DivisibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAResidue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resource vetoes.  The CLI maps these to exit 3 (inconclusive) when they
// interrupt a verification, and to exit 2 when they veto a search up front.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldTooLargeInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural refusals.
struct SumNotRepresentable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ffp
