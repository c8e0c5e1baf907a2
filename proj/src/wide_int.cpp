#include "totient/wide_int.hpp"

#include <algorithm>
#include <cstdlib>

#include "totient/errors.hpp"

namespace totient {

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

u128 parse_u128(std::string_view text) {
  if (text.empty()) throw UsageError("empty integer literal");
  constexpr u128 kMax = ~u128{0};
  u128 value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw UsageError("not a decimal integer: '" + std::string(text) + "'");
    }
    const auto digit = static_cast<unsigned>(c - '0');
    if (value > (kMax - digit) / 10) {
      throw UsageError("integer does not fit in 128 bits: " + std::string(text));
    }
    value = value * 10 + digit;
  }
  return value;
}

long double to_long_double(u128 value) {
  // strtold rounds correctly; a direct cast may double-round via the halves.
  return std::strtold(to_string(value).c_str(), nullptr);
}

u128 checked_add(u128 a, u128 b) {
  u128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw CapacityError("128-bit accumulator overflow (add)");
  }
  return out;
}

u128 checked_mul(u128 a, u128 b) {
  u128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw CapacityError("128-bit accumulator overflow (mul)");
  }
  return out;
}

}  // namespace totient
