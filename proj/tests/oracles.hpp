#pragma once

// Brute-force reference implementations for tests. Nothing here calls into
// the library; each function follows the textbook definition directly.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using u128 = unsigned __int128;

inline std::uint64_t phi_gcd_count(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++count;
  }
  return count;
}

/// Distinct prime factors by trial division, increasing.
inline std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// phi table 0..n built from the gcd count (phi[0] = 0).
inline std::vector<std::uint64_t> phi_table(std::uint64_t n) {
  std::vector<std::uint64_t> t(n + 1, 0);
  for (std::uint64_t k = 1; k <= n; ++k) t[k] = phi_gcd_count(k);
  return t;
}

/// phi table 0..n by the Eratosthenes product formula; fast enough for 10^6.
inline std::vector<std::uint64_t> phi_table_eratosthenes(std::uint64_t n) {
  std::vector<std::uint64_t> t(n + 1);
  std::iota(t.begin(), t.end(), std::uint64_t{0});
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (t[p] != p) continue;
    for (std::uint64_t m = p; m <= n; m += p) t[m] -= t[m] / p;
  }
  return t;
}

inline u128 psi(const std::vector<std::uint64_t>& phi, std::uint64_t x) {
  u128 s = 0;
  for (std::uint64_t k = 1; k <= x; ++k) s += phi[k];
  return s;
}

inline u128 delta(const std::vector<std::uint64_t>& phi, std::uint64_t x, std::uint64_t p) {
  u128 s = 0;
  for (std::uint64_t k = 1; k <= x; ++k) {
    if (k % p == 0) s += phi[k];
  }
  return s;
}

inline u128 upsilon(const std::vector<std::uint64_t>& phi, std::uint64_t x, std::uint64_t p) {
  u128 s = 0;
  for (std::uint64_t k = 1; k <= x; ++k) {
    if (std::gcd(k, p) == 1) s += phi[k];
  }
  return s;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (is_prime(k)) out.push_back(k);
  }
  return out;
}

// Frozen values of Psi(10^k), k = 1..7, and Psi(10^9). Computed with an
// independent Python script (numpy Eratosthenes phi table + prefix sums, and
// a memoized recursion over that table for 10^9); they match OEIS A064018.
inline constexpr std::uint64_t kPsiPowersOfTen[] = {
    32, 3044, 304192, 30397486, 3039650754, 303963552392, 30396356427242,
};
inline constexpr std::uint64_t kPsi1e9 = 303963551173008414ULL;

}  // namespace oracle
