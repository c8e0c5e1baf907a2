#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace totient {

// Summatory values reach ~0.304 x^2; at the 10^12 desk ceiling that is ~81
// bits, so every accumulator of phi values is 128 bits wide.
using u128 = unsigned __int128;

std::string to_string(u128 value);

/// Parses a non-negative decimal integer that must fit in 128 bits.
/// Throws UsageError on malformed text or overflow.
u128 parse_u128(std::string_view text);

/// Round-to-nearest conversion with the full long double mantissa.
long double to_long_double(u128 value);

/// Adds with an overflow check; throws CapacityError instead of wrapping.
u128 checked_add(u128 a, u128 b);
u128 checked_mul(u128 a, u128 b);

}  // namespace totient
