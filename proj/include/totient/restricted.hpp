#pragma once

#include <cstdint>

#include "totient/ntcore.hpp"
#include "totient/summatory.hpp"
#include "totient/wide_int.hpp"

// Sums of phi split by divisibility by a fixed prime p:
//
//   Delta(n, p)   = sum of phi(k) over k <= n with p | k
//   Upsilon(n, p) = sum of phi(k) over k <= n with gcd(k, p) = 1
//
// so that Psi(n) = Upsilon(n, p) + Delta(n, p). Every function here rejects a
// composite p with DomainError; Delta(0, p) is the empty sum 0.

namespace totient {

enum class RestrictedMethod { direct, via_psi };

struct RestrictedSumResult {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  u128 delta = 0;
  u128 upsilon = 0;
  RestrictedMethod method = RestrictedMethod::direct;
};

/// Sum of phi(p m) for 1 <= m <= floor(n / p). Requires n <= sieve.limit().
u128 delta_direct(std::uint64_t n, std::uint64_t p, const FactorSieve& sieve);

/// (p - 1) * sum over a >= 1 with p^a <= n of Psi(floor(n / p^a)).
/// The exponent range is walked with integer powers, never a floating log,
/// so exact powers n = p^k contribute exactly k terms.
u128 delta_via_psi(std::uint64_t n, std::uint64_t p, PsiCache& cache);

/// Psi(n) - Delta(n, p), both from the cache.
u128 upsilon(std::uint64_t n, std::uint64_t p, PsiCache& cache);

/// Sum of phi(k) over k <= n coprime to p, read straight off the sieve.
u128 upsilon_direct(std::uint64_t n, std::uint64_t p, const FactorSieve& sieve);

/// Delta(n + 1, p) - Delta(n, p): phi(n + 1) when p | n + 1, else 0.
/// Accepts n = 0. Requires n + 1 <= sieve.limit().
std::uint64_t delta_step(std::uint64_t n, std::uint64_t p, const FactorSieve& sieve);

/// Delta(n, p) mod (p - 1); 0 for p = 2.
std::uint64_t delta_residue(std::uint64_t n, std::uint64_t p, PsiCache& cache);

/// Both restricted sums at (n, p). The direct method needs n <= sieve.limit().
RestrictedSumResult restricted_sums(std::uint64_t n, std::uint64_t p, const FactorSieve& sieve);
RestrictedSumResult restricted_sums(std::uint64_t n, std::uint64_t p, PsiCache& cache);

}  // namespace totient
