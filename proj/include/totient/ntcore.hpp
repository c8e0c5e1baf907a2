#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace totient {

inline constexpr std::uint64_t kDefaultMemoryCeiling = 100'000'000;

struct PrimePower {
  std::uint32_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Smallest-prime-factor and totient tables for 1..limit, filled by a linear
/// (Euler) sieve: every composite is struck exactly once, by its smallest
/// prime factor.
///
/// Immutable after construction, so a single instance may be shared across
/// threads for reading.
class FactorSieve {
 public:
  std::uint64_t limit() const noexcept { return limit_; }

  /// Smallest prime factor of n, 2 <= n <= limit (unchecked).
  std::uint32_t spf(std::uint64_t n) const noexcept { return spf_[n]; }
  /// phi(n), 1 <= n <= limit (unchecked).
  std::uint32_t phi(std::uint64_t n) const noexcept { return phi_[n]; }

  /// phi table indexed 0..limit, with entry 0 unused (= 0).
  std::span<const std::uint32_t> phi_table() const noexcept { return phi_; }
  /// All primes <= limit in increasing order.
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

 private:
  friend FactorSieve build_sieve(std::uint64_t limit, std::uint64_t memory_ceiling);

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> phi_;
  std::vector<std::uint32_t> primes_;
};

/// Throws CapacityError when limit is 0 or above memory_ceiling.
FactorSieve build_sieve(std::uint64_t limit,
                        std::uint64_t memory_ceiling = kDefaultMemoryCeiling);

// The checked queries below throw RangeError for n == 0 or n > sieve.limit().

std::uint64_t phi(std::uint64_t n, const FactorSieve& sieve);

/// phi evaluated from the factorization as n * prod(p - 1) / prod(p), in
/// integer arithmetic. Independent of the sieve's phi table.
std::uint64_t phi_product_formula(std::uint64_t n, const FactorSieve& sieve);

/// Number of distinct primes dividing n; omega(1) == 0.
unsigned omega(std::uint64_t n, const FactorSieve& sieve);

/// Prime factorization in increasing prime order; empty for n == 1.
std::vector<PrimePower> factorize(std::uint64_t n, const FactorSieve& sieve);

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit, const FactorSieve& sieve);

/// Primality by table lookup when n <= sieve.limit(), trial division otherwise.
bool is_prime(std::uint64_t n, const FactorSieve& sieve);

/// Trial-division primality test, for callers that have no sieve.
bool is_prime(std::uint64_t n);

}  // namespace totient
