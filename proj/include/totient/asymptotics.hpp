#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "totient/big_rational.hpp"
#include "totient/ntcore.hpp"
#include "totient/summatory.hpp"

namespace totient {

enum class Quantity { delta, cumulative, average };

std::string_view quantity_name(Quantity q);
/// Throws UsageError for anything but "delta", "cumulative", "average".
Quantity parse_quantity(std::string_view name);

/// One point of an error profile. `exact` stays exact (an integer for delta
/// and cumulative, a reduced fraction for average); only main, raw_error and
/// normalized_error are floating.
struct ErrorRecord {
  std::uint64_t x = 0;
  std::uint64_t p = 0;
  Quantity quantity = Quantity::delta;
  BigRational exact;
  long double main = 0;
  long double raw_error = 0;
  long double normalized_error = 0;

  /// exact / main; 0 when main == 0.
  long double ratio() const;
};

/// 3 / (pi^2 (p + 1)).
long double delta_main_constant(std::uint64_t p);
/// 3/pi^2 * (p - 1) / (p^2 - 1), the geometric series summed in closed form.
long double delta_main_constant_via_series_closed_form(std::uint64_t p);
/// 3/pi^2 * (p - 1) * sum_{j>=1} p^(-2j), summed term by term to convergence.
long double delta_main_constant_via_series(std::uint64_t p);

long double delta_main_term(std::uint64_t x, std::uint64_t p);       // 3x^2 / (pi^2 (p+1))
long double cumulative_main_term(std::uint64_t n, std::uint64_t p);  // n^3 / (pi^2 (p+1))
long double average_main_term(std::uint64_t n, std::uint64_t p);     // n^2 / (pi^2 (p+1))

// Each profile returns one record per input point, in input order. Points
// must be non-empty, positive and strictly ascending (UsageError otherwise);
// p must be prime (DomainError). Normalizers use the natural log and are
// clamped below at 1 so x = 1 is well defined.

/// exact = Delta(x, p) via the Psi recursion; normalized by x ln x.
std::vector<ErrorRecord> delta_error_profile(std::uint64_t p, std::span<const std::uint64_t> xs,
                                             PsiCache& cache);

/// exact = sum_{k<=n} Delta(k, p) in closed form; normalized by n^2 ln n.
/// Requires max(ns) <= sieve.limit().
std::vector<ErrorRecord> cumulative_profile(std::uint64_t p, std::span<const std::uint64_t> ns,
                                            const FactorSieve& sieve);

/// exact = (1/n) sum_{k<=n} Delta(k, p) as a fraction; normalized by n ln n.
std::vector<ErrorRecord> average_profile(std::uint64_t p, std::span<const std::uint64_t> ns,
                                         const FactorSieve& sieve);

/// max |normalized_error| over the records divided by |normalized_error| of
/// the first record. Infinite if the first error is 0 and a later one is not.
long double normalized_error_growth(std::span<const ErrorRecord> records);

}  // namespace totient
