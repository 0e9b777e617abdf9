#pragma once

#include <stdexcept>

namespace cohchan {

/// Bad argument value: probability or correlation strength out of range,
/// index out of range, malformed word, invalid configuration.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested dense matrix dimension exceeds the configured qubit budget.
class DimensionLimitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Pauli-string enumeration would exceed the configured string cap.
class EnumerationLimitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input fails a structural check: non-square, non-Hermitian, not a
/// density matrix within tolerance.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computed quantity violates a bound that only numerical breakage
/// (e.g. a broken eigensolve) can explain.
class NumericalConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Formula evaluated at a parameter value where it is singular.
class SingularParameterError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace cohchan
