#pragma once

#include <stdexcept>
#include <string>

namespace totient {

/// Argument outside the table or sieve a function was given.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Mathematically invalid argument, e.g. a composite where a prime is required.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested size exceeds the configured memory ceiling, or an exact
/// accumulator would overflow.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed request: unknown suite name, bad grid, unsorted input list.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace totient
