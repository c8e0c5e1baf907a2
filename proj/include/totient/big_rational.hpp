#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "totient/wide_int.hpp"

namespace totient {

/// Exact rational in lowest terms with a positive denominator, backed by
/// GMP. Division by zero throws DomainError.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t value);  // NOLINT: implicit from integers is intended
  BigRational(std::int64_t numerator, std::int64_t denominator);

  static BigRational from_u128(u128 value);

  /// Parses "a", "-a", "a/b" or "-a/b" with b != 0.
  static BigRational parse(std::string_view text);

  /// Decimal numerator and denominator as "a/b", or just "a" if b == 1.
  std::string to_string() const;
  std::string numerator_string() const;
  std::string denominator_string() const;

  bool is_integer() const;
  int sign() const { return sgn(value_); }

  /// Rounded separately then divided; relative error is a few long double ulps.
  long double to_long_double() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a);

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.value_ < b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
  }

 private:
  explicit BigRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

/// base^exponent by repeated squaring.
BigRational pow(const BigRational& base, std::uint64_t exponent);

}  // namespace totient
