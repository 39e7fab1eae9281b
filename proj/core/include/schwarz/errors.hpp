#pragma once

#include <stdexcept>
#include <string>

namespace schwarz {

/// Rejected model or call parameters (bad n, alpha <= -1/2, r outside [0,1), ...).
class InvalidParameter : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A series or iteration hit its budget before reaching tolerance.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A denominator that must not vanish did (e.g. a zero radial normalizer).
class DegeneracyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace schwarz
