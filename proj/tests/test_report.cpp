#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "totient/config.hpp"
#include "totient/errors.hpp"
#include "totient/report.hpp"

using namespace totient;

TEST_CASE("grid specs") {
  CHECK(parse_grid("10:10000:x10") == std::vector<std::uint64_t>{10, 100, 1000, 10000});
  CHECK(parse_grid("10:9999:x10") == std::vector<std::uint64_t>{10, 100, 1000});
  CHECK(parse_grid("1000:16000:x2") == std::vector<std::uint64_t>{1000, 2000, 4000, 8000, 16000});
  CHECK(parse_grid("5:20:+5") == std::vector<std::uint64_t>{5, 10, 15, 20});
  CHECK(parse_grid("5:21:+5") == std::vector<std::uint64_t>{5, 10, 15, 20});
  CHECK(parse_grid("7:7:+1") == std::vector<std::uint64_t>{7});
  CHECK(parse_grid("1:18446744073709551615:x2").size() == 64);
  for (const char* bad : {"", "10", "10:100", "0:10:x2", "10:5:x2", "1:10:x1", "1:10:+0", "1:10:*2",
                          "a:10:x2", "1:10:x", "1:10:+-1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_grid(bad), UsageError);
  }
}

TEST_CASE("config validation") {
  Config cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.sieve_limit = cfg.memory_ceiling + 1;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = Config{};
  cfg.precision_digits = 5;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.precision_digits = 31;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.precision_digits = 30;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("config files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = dir / "totient_test_config.json";
  std::ofstream(good) << R"({"sieve_limit": 5000, "output_format": "json", "precision_digits": 20})";
  const Config cfg = load_config_file(good);
  CHECK(cfg.sieve_limit == 5000);
  CHECK(cfg.output_format == OutputFormat::json);
  CHECK(cfg.precision_digits == 20);
  CHECK(cfg.memory_ceiling == kDefaultMemoryCeiling);

  const auto bad = dir / "totient_test_config_bad.json";
  std::ofstream(bad) << R"({"sieve_limt": 5000})";
  CHECK_THROWS_AS(load_config_file(bad), UsageError);
  std::ofstream(bad) << R"({"sieve_limit": "many"})";
  CHECK_THROWS_AS(load_config_file(bad), UsageError);
  std::ofstream(bad) << "not json";
  CHECK_THROWS_AS(load_config_file(bad), UsageError);
  CHECK_THROWS_AS(load_config_file(dir / "does_not_exist.json"), UsageError);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("format_real") {
  CHECK(format_real(10.132118364233778L, 6) == "10.1321");
  CHECK(format_real(0.0L, 15) == "0");
  CHECK(format_real(-2.5L, 15) == "-2.5");
}

namespace {

std::vector<ErrorRecord> sample_records() {
  ErrorRecord big{.x = 10'000'000, .p = 2, .quantity = Quantity::delta,
                  .exact = BigRational::from_u128(static_cast<u128>(10'132'121'276'981ULL) * 1'000'000'000'000ULL),
                  .main = 1.0132e25L, .raw_error = 12.5L, .normalized_error = 0.018L};
  ErrorRecord frac{.x = 5, .p = 2, .quantity = Quantity::average, .exact = BigRational(8, 5),
                   .main = 0.8443431970194815L, .raw_error = 0.7556568029805185L,
                   .normalized_error = 0.0939L};
  return {big, frac};
}

}  // namespace

TEST_CASE("CSV header and exact columns survive a round trip") {
  const auto recs = sample_records();
  std::ostringstream os;
  write_csv(os, recs, 15);
  const std::string text = os.str();
  CHECK(text.rfind("x,p,quantity,exact,main,raw_error,normalized_error\n", 0) == 0);
  CHECK(text.find("10132121276981000000000000") != std::string::npos);

  std::istringstream is(text);
  const auto rows = read_csv(is);
  REQUIRE(rows.size() == recs.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].x == recs[i].x);
    CHECK(rows[i].p == recs[i].p);
    CHECK(rows[i].exact == recs[i].exact);
    CHECK(rows[i].quantity == quantity_name(recs[i].quantity));
  }
  std::istringstream wrong("x,p\n1,2\n");
  CHECK_THROWS_AS(read_csv(wrong), UsageError);
}

TEST_CASE("JSON records use the CSV keys") {
  std::ostringstream os;
  write_json(os, sample_records(), 15);
  std::istringstream lines(os.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto obj = nlohmann::json::parse(line);
    for (const char* key : {"x", "p", "quantity", "exact", "main", "raw_error", "normalized_error"}) {
      CHECK(obj.contains(key));
    }
    CHECK(obj["exact"].is_string());
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("verify report rendering") {
  VerifyReport ok{.identity = Identity::gcd, .params = "n=1..5 p={2}", .checked = 5};
  VerifyReport bad{.identity = Identity::ogf, .params = "N=1..5", .checked = 5, .failures = 1,
                   .first_counterexample = Counterexample{"n=3 p=2 x=1/2", "1/8", "1/4"}};
  std::ostringstream os;
  write_report_plain(os, ok);
  write_report_plain(os, bad);
  CHECK(os.str().find("gcd           PASS  checked=5 failures=0") != std::string::npos);
  CHECK(os.str().find("first counterexample at n=3 p=2 x=1/2: lhs=1/8 rhs=1/4") != std::string::npos);

  std::ostringstream js;
  const VerifyReport both[] = {ok, bad};
  write_reports_json(js, both);
  const auto arr = nlohmann::json::parse(js.str());
  CHECK(arr.size() == 2);
  CHECK(arr[0]["first_counterexample"].is_null());
  CHECK(arr[1]["first_counterexample"]["lhs"] == "1/8");
}
