#include "totient/identities.hpp"

#include <sstream>

#include "totient/errors.hpp"
#include "totient/restricted.hpp"
#include "totient/summatory.hpp"

namespace totient {

namespace {

void require_prime(std::uint64_t p, const FactorSieve& sieve) {
  if (!is_prime(p, sieve)) {
    throw DomainError("restriction modulus p = " + std::to_string(p) + " must be prime");
  }
}

void require_in_sieve(std::uint64_t n, const FactorSieve& sieve) {
  if (n > sieve.limit()) {
    throw RangeError("argument " + std::to_string(n) + " exceeds sieve limit " +
                     std::to_string(sieve.limit()));
  }
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

std::string join(const std::vector<BigRational>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

bool uses_primes(Identity id) { return id != Identity::omega; }

class Sweep {
 public:
  Sweep(Identity id, const SweepRange& range) {
    report_.identity = id;
    report_.params = range.describe(id);
  }

  template <class T>
  void record(const Sides<T>& sides, const std::string& where) {
    ++report_.checked;
    if (sides.agree()) return;
    if (report_.failures++ == 0) {
      report_.first_counterexample = Counterexample{where, str(sides.lhs), str(sides.rhs)};
    }
  }

  VerifyReport finish() && { return std::move(report_); }

 private:
  static std::string str(u128 v) { return to_string(v); }
  static std::string str(const BigRational& v) { return v.to_string(); }

  VerifyReport report_;
};

std::string point(std::uint64_t n) { return "n=" + std::to_string(n); }
std::string point(std::uint64_t n, std::uint64_t p) {
  return "n=" + std::to_string(n) + " p=" + std::to_string(p);
}

}  // namespace

Sides<u128> omega_identity_sides(std::uint64_t n, const FactorSieve& sieve) {
  require_in_sieve(n, sieve);
  Sides<u128> sides{0, 0};
  for (std::uint32_t p : primes_up_to(n, sieve)) sides.lhs += delta_direct(n, p, sieve);
  for (std::uint64_t k = 1; k <= n; ++k) {
    sides.rhs += static_cast<u128>(phi(k, sieve)) * omega(k, sieve);
  }
  return sides;
}

Sides<u128> gcd_identity_sides(std::uint64_t n, std::uint64_t p, const FactorSieve& sieve) {
  require_prime(p, sieve);
  require_in_sieve(n, sieve);
  Sides<u128> sides{0, 0};
  for (std::uint64_t k = 1; k <= n; ++k) {
    const std::uint64_t g = k % p == 0 ? p : 1;
    sides.lhs += static_cast<u128>(g) * sieve.phi(k);
  }
  sides.rhs = psi_naive(n, sieve) + static_cast<u128>(p - 1) * delta_direct(n, p, sieve);
  return sides;
}

BigRational ogf_lhs(std::uint64_t N, std::uint64_t p, const BigRational& x,
                    const FactorSieve& sieve) {
  require_prime(p, sieve);
  require_in_sieve(N, sieve);
  // Delta(n, p) for n = 0..N by accumulating phi over multiples of p.
  std::vector<u128> delta(N + 1, 0);
  for (std::uint64_t n = 1; n <= N; ++n) {
    delta[n] = delta[n - 1] + (n % p == 0 ? sieve.phi(n) : 0);
  }
  BigRational acc;
  for (std::uint64_t n = N; n >= 1; --n) {
    acc += BigRational::from_u128(delta[n]);
    acc *= x;
  }
  return acc;
}

BigRational ogf_rhs(std::uint64_t N, std::uint64_t p, const BigRational& x,
                    const FactorSieve& sieve) {
  require_prime(p, sieve);
  require_in_sieve(N, sieve);
  const BigRational one(1);
  if (x == one) return BigRational::from_u128(cumulative_delta_closed(N, p, sieve));

  const BigRational x_to_p = pow(x, p);
  const BigRational x_tail = pow(x, N + 1);
  BigRational x_to_pm = x_to_p;
  BigRational numerator;
  for (std::uint64_t pm = p; pm <= N; pm += p) {
    numerator += BigRational(static_cast<std::int64_t>(sieve.phi(pm))) * (x_to_pm - x_tail);
    x_to_pm *= x_to_p;
  }
  return numerator / (one - x);
}

u128 cumulative_delta_closed(std::uint64_t N, std::uint64_t p, const FactorSieve& sieve) {
  require_prime(p, sieve);
  require_in_sieve(N, sieve);
  u128 sum = 0;
  for (std::uint64_t pm = p; pm <= N; pm += p) {
    sum += static_cast<u128>(sieve.phi(pm)) * (N - pm + 1);
  }
  return sum;
}

std::string_view identity_name(Identity identity) {
  switch (identity) {
    case Identity::omega: return "omega";
    case Identity::gcd: return "gcd";
    case Identity::ogf: return "ogf";
    case Identity::cumulative: return "cumulative";
    case Identity::congruence: return "congruence";
    case Identity::decomposition: return "decomposition";
    case Identity::lemma24: return "lemma24";
    case Identity::telescoping: return "telescoping";
  }
  return "?";
}

Identity parse_identity(std::string_view name) {
  for (Identity id : kAllIdentities) {
    if (identity_name(id) == name) return id;
  }
  throw UsageError("unknown identity suite '" + std::string(name) + "'");
}

std::string SweepRange::describe(Identity identity) const {
  std::ostringstream os;
  os << (identity == Identity::ogf || identity == Identity::cumulative ? "N" : "n") << "=" << n_min
     << ".." << n_max;
  if (uses_primes(identity)) os << " p={" << join(primes) << "}";
  if (identity == Identity::ogf) os << " x={" << join(xs) << "}";
  return os.str();
}

VerifyReport verify_suite(std::string_view identity, const SweepRange& range,
                          const FactorSieve& sieve) {
  return verify_suite(parse_identity(identity), range, sieve);
}

VerifyReport verify_suite(Identity id, const SweepRange& range, const FactorSieve& sieve) {
  if (range.n_min == 0 || range.n_min > range.n_max) {
    throw UsageError("sweep range must satisfy 1 <= n_min <= n_max");
  }
  if (uses_primes(id) && range.primes.empty()) {
    throw UsageError("suite '" + std::string(identity_name(id)) + "' needs at least one prime");
  }
  if (id == Identity::ogf && range.xs.empty()) {
    throw UsageError("suite 'ogf' needs at least one x value");
  }
  require_in_sieve(range.n_max, sieve);
  if (uses_primes(id)) {
    for (std::uint64_t p : range.primes) require_prime(p, sieve);
  }

  Sweep sweep(id, range);
  const std::uint64_t lo = range.n_min;
  const std::uint64_t hi = range.n_max;

  switch (id) {
    case Identity::omega:
      for (std::uint64_t n = lo; n <= hi; ++n) sweep.record(omega_identity_sides(n, sieve), point(n));
      break;

    case Identity::gcd:
      for (std::uint64_t n = lo; n <= hi; ++n) {
        for (std::uint64_t p : range.primes) {
          sweep.record(gcd_identity_sides(n, p, sieve), point(n, p));
        }
      }
      break;

    case Identity::ogf:
      for (std::uint64_t n = lo; n <= hi; ++n) {
        for (std::uint64_t p : range.primes) {
          for (const BigRational& x : range.xs) {
            const Sides<BigRational> sides{ogf_lhs(n, p, x, sieve), ogf_rhs(n, p, x, sieve)};
            sweep.record(sides, point(n, p) + " x=" + x.to_string());
          }
        }
      }
      break;

    case Identity::cumulative: {
      // Running sums of Delta(n, p) from the definition, one per prime.
      std::vector<u128> running(range.primes.size(), 0);
      for (std::size_t i = 0; i < range.primes.size(); ++i) {
        for (std::uint64_t n = 1; n < lo; ++n) running[i] += delta_direct(n, range.primes[i], sieve);
      }
      for (std::uint64_t n = lo; n <= hi; ++n) {
        for (std::size_t i = 0; i < range.primes.size(); ++i) {
          const std::uint64_t p = range.primes[i];
          running[i] += delta_direct(n, p, sieve);
          sweep.record(Sides<u128>{running[i], cumulative_delta_closed(n, p, sieve)}, point(n, p));
        }
      }
      break;
    }

    case Identity::congruence: {
      PsiCache cache(sieve);
      for (std::uint64_t n = lo; n <= hi; ++n) {
        for (std::uint64_t p : range.primes) {
          sweep.record(Sides<u128>{delta_residue(n, p, cache), 0}, point(n, p));
        }
      }
      break;
    }

    case Identity::decomposition:
      for (std::uint64_t n = lo; n <= hi; ++n) {
        for (std::uint64_t p : range.primes) {
          const u128 parts = delta_direct(n, p, sieve) + upsilon_direct(n, p, sieve);
          sweep.record(Sides<u128>{parts, psi_naive(n, sieve)}, point(n, p));
        }
      }
      break;

    case Identity::lemma24: {
      // Keep the prefix table small so large n exercise the recursion.
      PsiCache cache(sieve, ceil_two_thirds_power(hi));
      for (std::uint64_t n = lo; n <= hi; ++n) {
        for (std::uint64_t p : range.primes) {
          sweep.record(Sides<u128>{delta_via_psi(n, p, cache), delta_direct(n, p, sieve)},
                       point(n, p));
        }
      }
      break;
    }

    case Identity::telescoping: {
      std::vector<u128> running(range.primes.size(), 0);
      for (std::size_t i = 0; i < range.primes.size(); ++i) {
        for (std::uint64_t m = 0; m + 1 < lo; ++m) running[i] += delta_step(m, range.primes[i], sieve);
      }
      for (std::uint64_t n = lo; n <= hi; ++n) {
        for (std::size_t i = 0; i < range.primes.size(); ++i) {
          const std::uint64_t p = range.primes[i];
          running[i] += delta_step(n - 1, p, sieve);
          sweep.record(Sides<u128>{running[i], delta_direct(n, p, sieve)}, point(n, p));
        }
      }
      break;
    }
  }
  return std::move(sweep).finish();
}

}  // namespace totient
