#include "totient/restricted.hpp"

#include <string>

#include "totient/errors.hpp"

namespace totient {

namespace {

void require_prime(std::uint64_t p, const FactorSieve* sieve) {
  const bool prime = sieve != nullptr ? is_prime(p, *sieve) : is_prime(p);
  if (!prime) {
    throw DomainError("restriction modulus p = " + std::to_string(p) + " must be prime");
  }
}

void require_in_sieve(std::uint64_t n, const FactorSieve& sieve) {
  if (n > sieve.limit()) {
    throw RangeError("argument " + std::to_string(n) + " exceeds sieve limit " +
                     std::to_string(sieve.limit()));
  }
}

}  // namespace

u128 delta_direct(std::uint64_t n, std::uint64_t p, const FactorSieve& sieve) {
  require_prime(p, &sieve);
  require_in_sieve(n, sieve);
  u128 sum = 0;
  for (std::uint64_t k = p; k <= n; k += p) sum += sieve.phi(k);
  return sum;
}

u128 delta_via_psi(std::uint64_t n, std::uint64_t p, PsiCache& cache) {
  require_prime(p, nullptr);
  u128 sum = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p) {
    // floor(floor(n / p^a) / p) == floor(n / p^(a+1)), so q walks the exponents.
    sum += psi_fast(q, cache);
  }
  return static_cast<u128>(p - 1) * sum;
}

u128 upsilon(std::uint64_t n, std::uint64_t p, PsiCache& cache) {
  return psi_fast(n, cache) - delta_via_psi(n, p, cache);
}

u128 upsilon_direct(std::uint64_t n, std::uint64_t p, const FactorSieve& sieve) {
  require_prime(p, &sieve);
  require_in_sieve(n, sieve);
  u128 sum = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (k % p != 0) sum += sieve.phi(k);
  }
  return sum;
}

std::uint64_t delta_step(std::uint64_t n, std::uint64_t p, const FactorSieve& sieve) {
  require_prime(p, &sieve);
  require_in_sieve(n + 1, sieve);
  return (n + 1) % p == 0 ? sieve.phi(n + 1) : 0;
}

std::uint64_t delta_residue(std::uint64_t n, std::uint64_t p, PsiCache& cache) {
  const u128 delta = delta_via_psi(n, p, cache);
  return static_cast<std::uint64_t>(delta % (p - 1));
}

RestrictedSumResult restricted_sums(std::uint64_t n, std::uint64_t p, const FactorSieve& sieve) {
  RestrictedSumResult r{.n = n, .p = p, .method = RestrictedMethod::direct};
  r.delta = delta_direct(n, p, sieve);
  r.upsilon = upsilon_direct(n, p, sieve);
  return r;
}

RestrictedSumResult restricted_sums(std::uint64_t n, std::uint64_t p, PsiCache& cache) {
  RestrictedSumResult r{.n = n, .p = p, .method = RestrictedMethod::via_psi};
  r.delta = delta_via_psi(n, p, cache);
  r.upsilon = psi_fast(n, cache) - r.delta;
  return r;
}

}  // namespace totient
