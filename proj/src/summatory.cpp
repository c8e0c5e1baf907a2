#include "totient/summatory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "totient/errors.hpp"

namespace totient {

PsiCache::PsiCache(const FactorSieve& sieve) : PsiCache(sieve, sieve.limit()) {}

PsiCache::PsiCache(const FactorSieve& sieve, std::uint64_t prefix_limit)
    : prefix_(std::min(prefix_limit, sieve.limit()) + 1, 0) {
  const auto table = sieve.phi_table();
  std::uint64_t running = 0;
  for (std::uint64_t n = 1; n < prefix_.size(); ++n) {
    running += table[n];
    prefix_[n] = running;
  }
}

PsiCache PsiCache::for_argument(std::uint64_t x, std::uint64_t memory_ceiling) {
  const std::uint64_t limit =
      std::clamp<std::uint64_t>(ceil_two_thirds_power(x), 1, memory_ceiling);
  return PsiCache(build_sieve(limit, memory_ceiling));
}

std::optional<u128> PsiCache::lookup(std::uint64_t x) const {
  if (x <= sieve_limit()) return prefix_[x];
  if (const auto it = entries_.find(x); it != entries_.end()) return it->second;
  return std::nullopt;
}

std::uint64_t ceil_two_thirds_power(std::uint64_t x) {
  if (x <= 1) return x;
  const u128 target = static_cast<u128>(x) * x;
  auto cube = [](std::uint64_t v) { return static_cast<u128>(v) * v * v; };
  auto guess = static_cast<std::uint64_t>(std::pow(static_cast<long double>(x), 2.0L / 3.0L));
  while (guess > 0 && cube(guess) >= target) --guess;
  while (cube(guess) < target) ++guess;
  return guess;
}

u128 psi_naive(std::uint64_t x, const FactorSieve& sieve) {
  if (x > sieve.limit()) {
    throw RangeError("psi_naive(" + std::to_string(x) + ") exceeds sieve limit " +
                     std::to_string(sieve.limit()));
  }
  const auto table = sieve.phi_table();
  u128 sum = 0;
  for (std::uint64_t n = 1; n <= x; ++n) sum += table[n];
  return sum;
}

u128 psi_fast(std::uint64_t x, PsiCache& cache) {
  if (x <= cache.sieve_limit()) return cache.prefix_[x];
  if (const auto it = cache.entries_.find(x); it != cache.entries_.end()) return it->second;

  const u128 wide = x;
  u128 value = wide * (wide + 1) / 2;
  for_each_quotient_block(x, 2, [&](std::uint64_t q, std::uint64_t count) {
    value -= static_cast<u128>(count) * psi_fast(q, cache);
  });
  cache.entries_.emplace(x, value);
  return value;
}

long double psi_main_term(std::uint64_t x) {
  const auto xl = static_cast<long double>(x);
  return 3.0L * xl * xl / kPiSquared;
}

}  // namespace totient
