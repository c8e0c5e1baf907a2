#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "totient/big_rational.hpp"
#include "totient/ntcore.hpp"
#include "totient/wide_int.hpp"

// Two-sided checks of exact identities among phi, omega, Psi and the
// restricted sums. Each *_sides function evaluates the left and right side
// along separate paths that share no intermediate results.

namespace totient {

template <class T>
struct Sides {
  T lhs;
  T rhs;

  bool agree() const { return lhs == rhs; }
};

/// lhs: sum over primes p <= n of Delta(n, p); rhs: sum_{k<=n} phi(k) omega(k).
/// Primes above n divide no k <= n, so the prime range stops at n.
Sides<u128> omega_identity_sides(std::uint64_t n, const FactorSieve& sieve);

/// lhs: sum_{k<=n} gcd(k, p) phi(k), term by term;
/// rhs: Psi(n) + (p - 1) Delta(n, p).
Sides<u128> gcd_identity_sides(std::uint64_t n, std::uint64_t p, const FactorSieve& sieve);

/// sum_{n=1}^{N} Delta(n, p) x^n, by Horner's rule.
BigRational ogf_lhs(std::uint64_t N, std::uint64_t p, const BigRational& x,
                    const FactorSieve& sieve);

/// sum_{m=1}^{floor(N/p)} phi(pm) (x^{pm} - x^{N+1}) / (1 - x) for x != 1, and
/// sum phi(pm) (N - pm + 1) when x is exactly 1.
BigRational ogf_rhs(std::uint64_t N, std::uint64_t p, const BigRational& x,
                    const FactorSieve& sieve);

/// sum_{m=1}^{floor(N/p)} phi(pm) (N - pm + 1), which equals sum_{n<=N} Delta(n, p).
u128 cumulative_delta_closed(std::uint64_t N, std::uint64_t p, const FactorSieve& sieve);

enum class Identity {
  omega,
  gcd,
  ogf,
  cumulative,
  congruence,
  decomposition,
  lemma24,
  telescoping,
};

inline constexpr Identity kAllIdentities[] = {
    Identity::omega,      Identity::gcd,           Identity::ogf,     Identity::cumulative,
    Identity::congruence, Identity::decomposition, Identity::lemma24, Identity::telescoping,
};

std::string_view identity_name(Identity identity);

/// Throws UsageError for names outside the list above.
Identity parse_identity(std::string_view name);

/// Parameter grid for a sweep: n (or N) in [n_min, n_max], each prime in
/// `primes`, each x in `xs` (ogf only). Identities that take no prime or no
/// x ignore the corresponding list.
struct SweepRange {
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 1;
  std::vector<std::uint64_t> primes;
  std::vector<BigRational> xs;

  std::string describe(Identity identity) const;
};

struct Counterexample {
  std::string params;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  Identity identity = Identity::omega;
  std::string params;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::optional<Counterexample> first_counterexample;

  bool passed() const { return failures == 0; }
};

/// Sweeps `range` in ascending n, then p, then x (in declared order),
/// comparing both sides exactly at every point.
///
/// Throws UsageError for an empty or inverted range, a missing prime list
/// or x list where the identity needs one, and RangeError when n_max
/// exceeds the sieve.
VerifyReport verify_suite(Identity identity, const SweepRange& range, const FactorSieve& sieve);
VerifyReport verify_suite(std::string_view identity, const SweepRange& range,
                          const FactorSieve& sieve);

}  // namespace totient
