#include "totient/big_rational.hpp"

#include <cstdlib>

#include "totient/errors.hpp"

namespace totient {

namespace {

mpz_class to_mpz(u128 value) {
  mpz_class out(static_cast<unsigned long>(value >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(value & 0xFFFF'FFFF'FFFF'FFFFULL);
  return out;
}

mpz_class parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw UsageError("malformed rational: '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw UsageError("malformed rational: '" + std::string(text) + "'");
  }
  return mpz_class(std::string(text), 10);
}

}  // namespace

BigRational::BigRational(std::int64_t value) : value_(mpz_class(static_cast<long>(value))) {}

BigRational::BigRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

BigRational BigRational::from_u128(u128 value) { return BigRational(mpq_class(to_mpz(value))); }

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(mpq_class(parse_integer(text)));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw UsageError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return BigRational(std::move(q));
}

std::string BigRational::to_string() const { return value_.get_str(10); }
std::string BigRational::numerator_string() const { return value_.get_num().get_str(10); }
std::string BigRational::denominator_string() const { return value_.get_den().get_str(10); }

bool BigRational::is_integer() const { return value_.get_den() == 1; }

long double BigRational::to_long_double() const {
  const long double num = std::strtold(numerator_string().c_str(), nullptr);
  const long double den = std::strtold(denominator_string().c_str(), nullptr);
  return num / den;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.value_ == 0) throw DomainError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.value_)); }

BigRational pow(const BigRational& base, std::uint64_t exponent) {
  BigRational result(1);
  BigRational square = base;
  while (exponent != 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace totient
