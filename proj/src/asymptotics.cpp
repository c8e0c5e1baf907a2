#include "totient/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "totient/errors.hpp"
#include "totient/identities.hpp"
#include "totient/restricted.hpp"

namespace totient {

namespace {

void require_grid(std::span<const std::uint64_t> xs) {
  if (xs.empty()) throw UsageError("profile grid is empty");
  if (xs.front() == 0) throw UsageError("profile grid points must be positive");
  if (std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) != xs.end()) {
    throw UsageError("profile grid must be strictly ascending");
  }
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw DomainError("restriction modulus p = " + std::to_string(p) + " must be prime");
  }
}

long double x_log_x(std::uint64_t x) {
  const auto xl = static_cast<long double>(x);
  return std::max(xl * std::log(xl), 1.0L);
}

long double x2_log_x(std::uint64_t x) {
  const auto xl = static_cast<long double>(x);
  return std::max(xl * xl * std::log(xl), 1.0L);
}

ErrorRecord make_record(std::uint64_t x, std::uint64_t p, Quantity q, BigRational exact,
                        long double main, long double scale) {
  ErrorRecord r{.x = x, .p = p, .quantity = q, .exact = std::move(exact), .main = main};
  r.raw_error = r.exact.to_long_double() - main;
  r.normalized_error = r.raw_error / scale;
  return r;
}

}  // namespace

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::delta: return "delta";
    case Quantity::cumulative: return "cumulative";
    case Quantity::average: return "average";
  }
  return "?";
}

Quantity parse_quantity(std::string_view name) {
  for (Quantity q : {Quantity::delta, Quantity::cumulative, Quantity::average}) {
    if (quantity_name(q) == name) return q;
  }
  throw UsageError("unknown quantity '" + std::string(name) + "'");
}

long double ErrorRecord::ratio() const {
  return main == 0 ? 0.0L : exact.to_long_double() / main;
}

long double delta_main_constant(std::uint64_t p) {
  return 3.0L / (kPiSquared * static_cast<long double>(p + 1));
}

long double delta_main_constant_via_series_closed_form(std::uint64_t p) {
  const auto pl = static_cast<long double>(p);
  return 3.0L / kPiSquared * (pl - 1) / (pl * pl - 1);
}

long double delta_main_constant_via_series(std::uint64_t p) {
  const long double ratio = 1.0L / (static_cast<long double>(p) * static_cast<long double>(p));
  long double sum = 0;
  for (long double term = ratio; term > std::numeric_limits<long double>::epsilon() * sum / 4;
       term *= ratio) {
    sum += term;
  }
  return 3.0L / kPiSquared * static_cast<long double>(p - 1) * sum;
}

long double delta_main_term(std::uint64_t x, std::uint64_t p) {
  const auto xl = static_cast<long double>(x);
  return 3.0L * xl * xl / (kPiSquared * static_cast<long double>(p + 1));
}

long double cumulative_main_term(std::uint64_t n, std::uint64_t p) {
  const auto nl = static_cast<long double>(n);
  return nl * nl * nl / (kPiSquared * static_cast<long double>(p + 1));
}

long double average_main_term(std::uint64_t n, std::uint64_t p) {
  const auto nl = static_cast<long double>(n);
  return nl * nl / (kPiSquared * static_cast<long double>(p + 1));
}

std::vector<ErrorRecord> delta_error_profile(std::uint64_t p, std::span<const std::uint64_t> xs,
                                             PsiCache& cache) {
  require_grid(xs);
  require_prime(p);
  std::vector<ErrorRecord> out;
  out.reserve(xs.size());
  for (std::uint64_t x : xs) {
    out.push_back(make_record(x, p, Quantity::delta,
                              BigRational::from_u128(delta_via_psi(x, p, cache)),
                              delta_main_term(x, p), x_log_x(x)));
  }
  return out;
}

std::vector<ErrorRecord> cumulative_profile(std::uint64_t p, std::span<const std::uint64_t> ns,
                                            const FactorSieve& sieve) {
  require_grid(ns);
  require_prime(p);
  std::vector<ErrorRecord> out;
  out.reserve(ns.size());
  for (std::uint64_t n : ns) {
    out.push_back(make_record(n, p, Quantity::cumulative,
                              BigRational::from_u128(cumulative_delta_closed(n, p, sieve)),
                              cumulative_main_term(n, p), x2_log_x(n)));
  }
  return out;
}

std::vector<ErrorRecord> average_profile(std::uint64_t p, std::span<const std::uint64_t> ns,
                                         const FactorSieve& sieve) {
  require_grid(ns);
  require_prime(p);
  std::vector<ErrorRecord> out;
  out.reserve(ns.size());
  for (std::uint64_t n : ns) {
    BigRational mean = BigRational::from_u128(cumulative_delta_closed(n, p, sieve)) /
                       BigRational(static_cast<std::int64_t>(n));
    out.push_back(make_record(n, p, Quantity::average, std::move(mean), average_main_term(n, p),
                              x_log_x(n)));
  }
  return out;
}

long double normalized_error_growth(std::span<const ErrorRecord> records) {
  if (records.empty()) throw UsageError("no records");
  const long double first = std::fabs(records.front().normalized_error);
  long double largest = 0;
  for (const auto& r : records) largest = std::max(largest, std::fabs(r.normalized_error));
  if (first == 0) return largest == 0 ? 1.0L : std::numeric_limits<long double>::infinity();
  return largest / first;
}

}  // namespace totient
