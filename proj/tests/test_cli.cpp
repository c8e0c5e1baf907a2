#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "totient/cli.hpp"
#include "totient/report.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = totient::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / name; }

// Exit status of the real binary, for the process-level contract.
int exit_status(const std::string& args) {
  const std::string cmd = std::string(TOTIENT_BIN) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_CASE("compute") {
  CHECK(run({"compute", "psi", "--x", "10"}).out == "32\n");
  CHECK(run({"compute", "delta", "--x", "10", "--p", "2"}).out == "13\n");
  CHECK(run({"compute", "upsilon", "--x", "10", "--p", "2"}).out == "19\n");
  CHECK(run({"compute", "delta", "--x", "4", "--p", "5"}).out == "0\n");
  CHECK(run({"compute", "psi", "--x", "1000000000"}).out == "303963551173008414\n");

  const auto composite = run({"compute", "delta", "--x", "10", "--p", "4"});
  CHECK(composite.code == 2);
  CHECK(composite.err.find("prime") != std::string::npos);
  CHECK(run({"compute", "delta", "--x", "10"}).code == 2);
  CHECK(run({"compute", "psi"}).code == 2);
  CHECK(run({"compute", "psi", "--x", "0"}).code == 2);
  CHECK(run({"compute", "phi", "--x", "3"}).code == 2);
  CHECK(run({"compute", "psi", "--x", "ten"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("verify") {
  const auto all = run({"verify", "all", "--n-max", "300"});
  CHECK(all.code == 0);
  CHECK(all.out.find("8 suites, all passed") != std::string::npos);
  for (const char* name : {"omega", "gcd", "ogf", "cumulative", "congruence", "decomposition",
                           "lemma24", "telescoping"}) {
    CHECK(all.out.find(name) != std::string::npos);
  }
  const auto congruence = run({"verify", "congruence", "--n-max", "100", "--p-max", "50"});
  CHECK(congruence.code == 0);
  CHECK(congruence.out.find("checked=1500") != std::string::npos);

  CHECK(run({"verify", "gcd", "--n-max", "50", "--primes", "2,3,5"}).out.find("checked=150") !=
        std::string::npos);
  const auto json = run({"--format", "json", "verify", "ogf", "--n-max", "20", "--primes", "2",
                         "--x", "1/2,1"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"checked\": 40") != std::string::npos);

  CHECK(run({"verify", "bogus"}).code == 2);
  CHECK(run({"verify", "gcd", "--primes", "4"}).code == 2);
  CHECK(run({"verify", "ogf", "--x", "1/0"}).code == 2);
  CHECK(run({"--sieve-limit", "100", "verify", "omega", "--n-max", "1000"}).code == 2);
}

TEST_CASE("scan writes the CSV contract") {
  const auto path = temp_file("totient_scan_delta.csv");
  const auto r = run({"scan", "delta", "--p", "2", "--grid", "10:10000:x10", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  const auto rows = totient::read_csv(in);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].x == 10);
  CHECK(rows[3].x == 10000);
  CHECK(rows[0].exact == totient::BigRational(13));
  CHECK(rows[3].exact == totient::BigRational(10134153));
  for (const auto& row : rows) CHECK(row.quantity == "delta");

  // Same invocation, same bytes.
  const auto path2 = temp_file("totient_scan_delta2.csv");
  run({"scan", "delta", "--p", "2", "--grid", "10:10000:x10", "--out", path2.string()});
  CHECK(slurp(path) == slurp(path2));
  fs::remove(path);
  fs::remove(path2);
}

TEST_CASE("scan variants and errors") {
  const auto avg = run({"scan", "average", "--p", "3", "--grid", "10:1000:x10"});
  CHECK(avg.code == 0);
  CHECK(avg.out.find(",3,average,") != std::string::npos);

  const auto cum = run({"--format", "plain", "scan", "cumulative", "--p", "2", "--max", "4000"});
  CHECK(cum.code == 0);
  // Default grid is 1000:<max>:x2.
  std::istringstream lines(cum.out);
  std::vector<std::string> xs;
  for (std::string line; std::getline(lines, line);) xs.push_back(line.substr(0, line.find(' ')));
  CHECK(xs == std::vector<std::string>{"x", "1000", "2000", "4000"});

  CHECK(run({"scan", "delta", "--p", "4", "--grid", "10:100:x10"}).code == 2);
  CHECK(run({"scan", "delta", "--p", "2", "--grid", "10:100:y10"}).code == 2);
  CHECK(run({"scan", "delta", "--grid", "10:100:x10"}).code == 2);
  CHECK(run({"scan", "delta", "--p", "2", "--grid", "10:100:x10", "--out",
             "/nonexistent_dir/x.csv"}).code == 1);
  CHECK(run({"--precision", "3", "scan", "delta", "--p", "2", "--grid", "10:100:x10"}).code == 2);
}

TEST_CASE("config file and environment") {
  const auto cfg = temp_file("totient_cli_config.json");
  std::ofstream(cfg) << R"({"output_format": "json", "precision_digits": 8})";
  const auto r = run({"--config", cfg.string(), "scan", "delta", "--p", "2", "--grid", "10:10:x10"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("{\"x\":10,", 0) == 0);

  // Flags win over the file.
  const auto csv = run({"--config", cfg.string(), "--format", "csv", "scan", "delta", "--p", "2",
                        "--grid", "10:10:x10"});
  CHECK(csv.out.rfind("x,p,quantity", 0) == 0);

  ::setenv("TOTIENT_CONFIG", cfg.string().c_str(), 1);
  CHECK(run({"scan", "delta", "--p", "2", "--grid", "10:10:x10"}).out.rfind("{", 0) == 0);
  ::unsetenv("TOTIENT_CONFIG");
  fs::remove(cfg);
  CHECK(run({"--config", cfg.string(), "compute", "psi", "--x", "5"}).code == 2);
}

TEST_CASE("bench") {
  const auto r = run({"bench", "--x", "1,1000000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("303963552392") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);

  const auto beyond = run({"--sieve-limit", "100000", "bench", "--x", "100000000"});
  CHECK(beyond.code == 0);
  CHECK(beyond.out.find("skipped") != std::string::npos);
  CHECK(beyond.out.find("3039635516365908") != std::string::npos);
  CHECK(run({"bench"}).code == 2);
}

TEST_CASE("process exit codes") {
  CHECK(exit_status("compute psi --x 10") == 0);
  CHECK(exit_status("compute delta --x 10 --p 4") == 2);
  CHECK(exit_status("verify bogus") == 2);
  CHECK(exit_status("verify congruence --n-max 100 --p-max 50") == 0);
  CHECK(exit_status("scan delta --p 2 --grid 10:100:x10 --out /nonexistent_dir/x.csv") == 1);
  CHECK(exit_status("--help") == 0);
}
