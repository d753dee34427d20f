#pragma once

#include <stdexcept>
#include <string>

namespace interp {

/// Input lies outside the domain of an operation (e.g. a point outside the disk).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed arguments: dimension mismatches, duplicate points, bad sizes.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed or produced a value that breaks an invariant.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (element count, bisection bracket) was exceeded.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace interp
