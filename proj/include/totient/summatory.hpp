#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "totient/ntcore.hpp"
#include "totient/wide_int.hpp"

namespace totient {

/// pi^2 to 36 significant digits.
inline constexpr long double kPiSquared = 9.86960440108935861883449099987615114L;

/// Memo for the sublinear Psi recursion.
///
/// Arguments up to sieve_limit() are answered from a prefix-sum table of the
/// totient sieve; larger arguments are computed once and kept in entries().
/// All recursive arguments have the form floor(x / d), so a top-level call
/// adds O(sqrt x) keys.
///
/// Single writer: a psi_fast call mutates the cache, so concurrent callers
/// need separate caches or external serialization. A cache that is no longer
/// written to is safe to read from any thread.
class PsiCache {
 public:
  explicit PsiCache(const FactorSieve& sieve);
  /// Uses only the first min(prefix_limit, sieve.limit()) table entries, so
  /// larger arguments go through the recursion.
  PsiCache(const FactorSieve& sieve, std::uint64_t prefix_limit);

  /// Builds a private sieve of size ceil(x^(2/3)), capped at memory_ceiling.
  static PsiCache for_argument(std::uint64_t x,
                               std::uint64_t memory_ceiling = kDefaultMemoryCeiling);

  std::uint64_t sieve_limit() const noexcept { return prefix_.size() - 1; }

  /// Psi(n) from the prefix table, 0 <= n <= sieve_limit() (unchecked).
  std::uint64_t prefix(std::uint64_t n) const noexcept { return prefix_[n]; }

  /// Memoized value for an argument above sieve_limit(), if computed.
  std::optional<u128> lookup(std::uint64_t x) const;

  const std::unordered_map<std::uint64_t, u128>& entries() const noexcept { return entries_; }

 private:
  friend u128 psi_fast(std::uint64_t x, PsiCache& cache);

  std::vector<std::uint64_t> prefix_;
  std::unordered_map<std::uint64_t, u128> entries_;
};

/// Smallest L with L^3 >= x^2, i.e. ceil(x^(2/3)).
std::uint64_t ceil_two_thirds_power(std::uint64_t x);

/// Calls block(quotient, count) for each maximal run of d in [d_first, x]
/// on which floor(x / d) == quotient, in increasing d order.
template <class BlockFn>
void for_each_quotient_block(std::uint64_t x, std::uint64_t d_first, BlockFn&& block) {
  for (std::uint64_t d = d_first; d <= x;) {
    const std::uint64_t q = x / d;
    const std::uint64_t d_last = x / q;
    block(q, d_last - d + 1);
    d = d_last + 1;
  }
}

/// Psi(x) = sum_{n <= x} phi(n) by a running sum over the sieve's phi table.
/// Psi(0) = 0. Throws RangeError if x > sieve.limit().
u128 psi_naive(std::uint64_t x, const FactorSieve& sieve);

/// Psi(x) via Psi(x) = x(x+1)/2 - sum_{d=2}^{x} Psi(floor(x/d)), grouping equal
/// quotients. Every intermediate is bounded by x^2 < 2^128, so no input in
/// the uint64 range can overflow. Psi(0) = 0.
u128 psi_fast(std::uint64_t x, PsiCache& cache);

/// 3 x^2 / pi^2.
long double psi_main_term(std::uint64_t x);

}  // namespace totient
