#include "totient/ntcore.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "totient/errors.hpp"

namespace totient {

namespace {

void require_in_table(std::uint64_t n, const FactorSieve& sieve) {
  if (n == 0 || n > sieve.limit()) {
    throw RangeError("argument " + std::to_string(n) + " outside sieve range [1, " +
                     std::to_string(sieve.limit()) + "]");
  }
}

}  // namespace

FactorSieve build_sieve(std::uint64_t limit, std::uint64_t memory_ceiling) {
  if (limit == 0) throw CapacityError("sieve limit must be positive");
  if (limit > memory_ceiling) {
    throw CapacityError("sieve limit " + std::to_string(limit) + " exceeds memory ceiling " +
                        std::to_string(memory_ceiling));
  }
  if (limit >= std::numeric_limits<std::uint32_t>::max()) {
    throw CapacityError("sieve limit must fit in 32 bits");
  }

  FactorSieve s;
  s.limit_ = limit;
  s.spf_.assign(limit + 1, 0);
  s.phi_.assign(limit + 1, 0);
  s.phi_[1] = 1;
  if (limit >= 1) s.spf_[1] = 1;

  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (s.spf_[i] == 0) {
      s.spf_[i] = static_cast<std::uint32_t>(i);
      s.phi_[i] = static_cast<std::uint32_t>(i - 1);
      s.primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : s.primes_) {
      const std::uint64_t m = i * p;
      if (p > s.spf_[i] || m > limit) break;
      s.spf_[m] = p;
      // p == spf(i): p already divides i, so phi gains a bare factor p.
      s.phi_[m] = p == s.spf_[i] ? s.phi_[i] * p : s.phi_[i] * (p - 1);
    }
  }
  return s;
}

std::uint64_t phi(std::uint64_t n, const FactorSieve& sieve) {
  require_in_table(n, sieve);
  return sieve.phi(n);
}

std::uint64_t phi_product_formula(std::uint64_t n, const FactorSieve& sieve) {
  require_in_table(n, sieve);
  std::uint64_t primes_product = 1;
  std::uint64_t reduced_product = 1;
  for (const auto& [p, e] : factorize(n, sieve)) {
    primes_product *= p;
    reduced_product *= p - 1;
  }
  // primes_product divides n, so n / primes_product is exact.
  return n / primes_product * reduced_product;
}

unsigned omega(std::uint64_t n, const FactorSieve& sieve) {
  require_in_table(n, sieve);
  unsigned count = 0;
  while (n > 1) {
    const std::uint32_t p = sieve.spf(n);
    ++count;
    while (n % p == 0) n /= p;
  }
  return count;
}

std::vector<PrimePower> factorize(std::uint64_t n, const FactorSieve& sieve) {
  require_in_table(n, sieve);
  std::vector<PrimePower> out;
  while (n > 1) {
    const std::uint32_t p = sieve.spf(n);
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit, const FactorSieve& sieve) {
  if (limit > sieve.limit()) {
    throw RangeError("primes_up_to(" + std::to_string(limit) + ") exceeds sieve limit " +
                     std::to_string(sieve.limit()));
  }
  const auto all = sieve.primes();
  const auto end = std::upper_bound(all.begin(), all.end(), limit);
  return {all.begin(), end};
}

bool is_prime(std::uint64_t n, const FactorSieve& sieve) {
  if (n < 2) return false;
  if (n <= sieve.limit()) return sieve.spf(n) == n;
  return is_prime(n);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace totient
