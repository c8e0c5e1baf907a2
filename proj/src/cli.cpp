#include "totient/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>

#include "totient/asymptotics.hpp"
#include "totient/config.hpp"
#include "totient/errors.hpp"
#include "totient/identities.hpp"
#include "totient/ntcore.hpp"
#include "totient/report.hpp"
#include "totient/restricted.hpp"
#include "totient/summatory.hpp"

namespace totient::cli {

namespace {

struct GlobalFlags {
  std::string config_path;
  std::optional<std::uint64_t> sieve_limit;
  std::optional<std::uint64_t> memory_ceiling;
  std::optional<std::string> format;
  std::optional<int> precision;
};

Config resolve_config(const GlobalFlags& flags) {
  Config cfg;
  std::string path = flags.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar); env != nullptr) path = env;
  }
  if (!path.empty()) cfg = load_config_file(path, cfg);
  if (flags.sieve_limit) cfg.sieve_limit = *flags.sieve_limit;
  if (flags.memory_ceiling) cfg.memory_ceiling = *flags.memory_ceiling;
  if (flags.format) cfg.output_format = parse_output_format(*flags.format);
  if (flags.precision) cfg.precision_digits = *flags.precision;
  cfg.validate();
  return cfg;
}

std::uint64_t require_prime_flag(const std::optional<std::uint64_t>& p) {
  if (!p) throw UsageError("--p is required for this quantity");
  if (!is_prime(*p)) {
    throw UsageError("--p " + std::to_string(*p) + " is not prime; the restriction modulus must be prime");
  }
  return *p;
}

// Sieve for the Psi recursion at arguments up to x, within the config's limits.
PsiCache cache_for(std::uint64_t x, const Config& cfg) {
  const std::uint64_t limit = std::clamp<std::uint64_t>(ceil_two_thirds_power(x), 1, cfg.sieve_limit);
  return PsiCache(build_sieve(limit, cfg.memory_ceiling));
}

FactorSieve table_sieve(std::uint64_t n, const Config& cfg, const char* what) {
  if (n > cfg.sieve_limit) {
    throw UsageError(std::string(what) + " " + std::to_string(n) + " exceeds sieve_limit " +
                     std::to_string(cfg.sieve_limit));
  }
  return build_sieve(std::max<std::uint64_t>(n, 1), cfg.memory_ceiling);
}

// ---- compute ---------------------------------------------------------------

struct ComputeArgs {
  std::string quantity;
  std::uint64_t x = 0;
  std::optional<std::uint64_t> p;
};

int cmd_compute(const ComputeArgs& a, const Config& cfg, std::ostream& out) {
  if (a.x == 0) throw UsageError("--x must be >= 1");
  const std::uint64_t p = a.quantity == "psi" ? 0 : require_prime_flag(a.p);
  PsiCache cache = cache_for(a.x, cfg);
  u128 value = 0;
  if (a.quantity == "psi") {
    value = psi_fast(a.x, cache);
  } else if (a.quantity == "delta") {
    value = delta_via_psi(a.x, p, cache);
  } else {
    value = upsilon(a.x, p, cache);
  }
  out << to_string(value) << '\n';
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 1000;
  std::uint64_t p_max = 13;
  std::vector<std::uint64_t> primes;
  std::vector<std::string> xs{"1/2", "-1/3", "2", "1"};
};

int cmd_verify(const VerifyArgs& a, const Config& cfg, std::ostream& out) {
  std::vector<Identity> suites;
  if (a.suite == "all") {
    suites.assign(std::begin(kAllIdentities), std::end(kAllIdentities));
  } else {
    suites.push_back(parse_identity(a.suite));
  }

  SweepRange range;
  range.n_min = a.n_min;
  range.n_max = a.n_max;
  for (const auto& x : a.xs) range.xs.push_back(BigRational::parse(x));

  const FactorSieve sieve =
      table_sieve(std::max(a.n_max, a.primes.empty() ? a.p_max : 1), cfg, "--n-max/--p-max");
  if (a.primes.empty()) {
    const auto ps = primes_up_to(a.p_max, sieve);
    range.primes.assign(ps.begin(), ps.end());
    if (range.primes.empty()) throw UsageError("--p-max leaves no primes");
  } else {
    range.primes = a.primes;
  }

  std::vector<VerifyReport> reports;
  for (Identity id : suites) reports.push_back(verify_suite(id, range, sieve));

  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const VerifyReport& r) { return r.passed(); });
  if (cfg.output_format == OutputFormat::json) {
    write_reports_json(out, reports);
  } else {
    for (const auto& r : reports) write_report_plain(out, r);
    out << reports.size() << (reports.size() == 1 ? " suite, " : " suites, ")
        << (ok ? "all passed" : "FAILURES") << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

// ---- scan ------------------------------------------------------------------

struct ScanArgs {
  std::string quantity;
  std::optional<std::uint64_t> p;
  std::string grid;
  std::optional<std::uint64_t> max;
  std::string out_path;
};

int cmd_scan(const ScanArgs& a, const Config& cfg, std::ostream& out, std::ostream& err) {
  const Quantity quantity = parse_quantity(a.quantity);
  const std::uint64_t p = require_prime_flag(a.p);

  std::vector<std::uint64_t> xs;
  if (!a.grid.empty()) {
    xs = parse_grid(a.grid);
  } else {
    const std::uint64_t top = a.max.value_or(cfg.sieve_limit);
    if (top == 0) throw UsageError("--max must be >= 1");
    xs = parse_grid(std::to_string(std::min<std::uint64_t>(1000, top)) + ":" + std::to_string(top) +
                    ":x2");
  }

  std::vector<ErrorRecord> records;
  if (quantity == Quantity::delta) {
    PsiCache cache = cache_for(xs.back(), cfg);
    records = delta_error_profile(p, xs, cache);
  } else {
    const FactorSieve sieve = table_sieve(xs.back(), cfg, "grid maximum");
    records = quantity == Quantity::cumulative ? cumulative_profile(p, xs, sieve)
                                               : average_profile(p, xs, sieve);
  }

  if (a.out_path.empty() || a.out_path == "-") {
    write_records(out, records, cfg.output_format, cfg.precision_digits);
    return kExitOk;
  }
  std::ofstream file(a.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write " << a.out_path << '\n';
    return kExitFailure;
  }
  write_records(file, records, cfg.output_format, cfg.precision_digits);
  file.close();
  if (!file) {
    err << "error: failed writing " << a.out_path << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
  std::vector<std::uint64_t> xs;
};

template <class F>
auto timed(F&& f, double& seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  auto value = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return value;
}

int cmd_bench(const BenchArgs& a, const Config& cfg, std::ostream& out, std::ostream& err) {
  bool ok = true;
  out << std::left << std::setw(16) << "x" << std::setw(26) << "psi_naive" << std::setw(11)
      << "naive_s" << std::setw(26) << "psi_fast" << std::setw(11) << "fast_s"
      << "check\n";
  for (std::uint64_t x : a.xs) {
    if (x == 0) throw UsageError("--x values must be >= 1");
    double fast_s = 0;
    const std::uint64_t limit = std::clamp<std::uint64_t>(ceil_two_thirds_power(x), 1, cfg.sieve_limit);
    const u128 fast = timed(
        [&] {
          PsiCache cache(build_sieve(limit, cfg.memory_ceiling));
          return psi_fast(x, cache);
        },
        fast_s);

    std::string naive_text = "skipped";
    std::string naive_time = "-";
    std::string check;
    if (x <= cfg.sieve_limit) {
      double naive_s = 0;
      const u128 naive = timed([&] { return psi_naive(x, build_sieve(x, cfg.memory_ceiling)); }, naive_s);
      naive_text = to_string(naive);
      naive_time = format_real(naive_s, 4);
      check = naive == fast ? "ok" : "MISMATCH";
      if (naive != fast) ok = false;
    } else {
      // Naive scan infeasible: compare against the recursion on a smaller table.
      const std::uint64_t second_limit = std::max<std::uint64_t>(1, limit / 8);
      PsiCache other(build_sieve(second_limit, cfg.memory_ceiling));
      const bool same = psi_fast(x, other) == fast;
      check = same ? "ok (sieve " + std::to_string(limit) + " vs " + std::to_string(second_limit) + ")"
                   : "MISMATCH (sieve " + std::to_string(limit) + " vs " +
                         std::to_string(second_limit) + ")";
      if (!same) ok = false;
    }
    out << std::setw(16) << x << std::setw(26) << naive_text << std::setw(11) << naive_time
        << std::setw(26) << to_string(fast) << std::setw(11) << format_real(fast_s, 4) << check
        << '\n';
  }
  if (!ok) {
    err << "correctness alarm: psi_naive and psi_fast disagree\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler totient summatory functions: compute, verify identities, profile asymptotics"};
  app.name("totient");
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--config", flags.config_path,
                 std::string("JSON config file (default: $") + kConfigEnvVar + ")");
  app.add_option("--sieve-limit", flags.sieve_limit, "Largest sieve built (default 10000000)");
  app.add_option("--memory-ceiling", flags.memory_ceiling, "Hard cap on sieve size (default 100000000)");
  app.add_option("--format", flags.format, "Output format: csv, json, plain (default csv)");
  app.add_option("--precision", flags.precision, "Significant digits for real columns, 6..30 (default 15)");

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Print Psi(x), Delta(x,p) or Upsilon(x,p) exactly");
  compute_cmd->add_option("quantity", compute.quantity, "psi | delta | upsilon")
      ->required()
      ->check(CLI::IsMember({"psi", "delta", "upsilon"}));
  compute_cmd->add_option("--x", compute.x, "Argument x >= 1")->required();
  compute_cmd->add_option("--p", compute.p, "Prime modulus (delta, upsilon)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep exact identities over a parameter range");
  verify_cmd->add_option("suite", verify.suite,
                         "all | omega | gcd | ogf | cumulative | congruence | decomposition | "
                         "lemma24 | telescoping")
      ->required();
  verify_cmd->add_option("--n-min", verify.n_min, "Smallest n (default 1)");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n (default 1000)");
  verify_cmd->add_option("--p-max", verify.p_max, "Use every prime up to this (default 13)");
  verify_cmd->add_option("--primes", verify.primes, "Explicit prime list, overrides --p-max")
      ->delimiter(',');
  verify_cmd->add_option("--x", verify.xs, "Rational evaluation points for ogf (default 1/2,-1/3,2,1)")
      ->delimiter(',');

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Write an asymptotic error profile.\n"
              "Grid spec: start:stop:x<factor> (geometric) or start:stop:+<step> (arithmetic)");
  scan_cmd->add_option("quantity", scan.quantity, "delta | cumulative | average")
      ->required()
      ->check(CLI::IsMember({"delta", "cumulative", "average"}));
  scan_cmd->add_option("--p", scan.p, "Prime modulus")->required();
  scan_cmd->add_option("--grid", scan.grid, "Grid spec (default 1000:<max>:x2)");
  scan_cmd->add_option("--max", scan.max, "Top of the default grid (default sieve_limit)");
  scan_cmd->add_option("--out", scan.out_path, "Output file (default stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time psi_naive against psi_fast");
  bench_cmd->add_option("--x", bench.xs, "Arguments, comma separated")->required()->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Config cfg = resolve_config(flags);
    if (*compute_cmd) return cmd_compute(compute, cfg, out);
    if (*verify_cmd) return cmd_verify(verify, cfg, out);
    if (*scan_cmd) return cmd_scan(scan, cfg, out, err);
    if (*bench_cmd) return cmd_bench(bench, cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace totient::cli
