#include "totient/config.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <string>

#include "totient/errors.hpp"

namespace totient {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(text) + "' in grid spec");
  }
  return value;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "plain") return OutputFormat::plain;
  throw UsageError("unknown output format '" + std::string(name) + "' (csv, json, plain)");
}

std::string_view output_format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::plain: return "plain";
  }
  return "?";
}

void Config::validate() const {
  if (sieve_limit == 0) throw UsageError("sieve_limit must be positive");
  if (sieve_limit > memory_ceiling) {
    throw UsageError("sieve_limit " + std::to_string(sieve_limit) + " exceeds memory_ceiling " +
                     std::to_string(memory_ceiling));
  }
  if (precision_digits < 6 || precision_digits > 30) {
    throw UsageError("precision_digits must be in [6, 30]");
  }
}

Config load_config_file(const std::filesystem::path& path, Config base) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");

  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "sieve_limit") {
        base.sieve_limit = value.get<std::uint64_t>();
      } else if (key == "memory_ceiling") {
        base.memory_ceiling = value.get<std::uint64_t>();
      } else if (key == "output_format") {
        base.output_format = parse_output_format(value.get<std::string>());
      } else if (key == "precision_digits") {
        base.precision_digits = value.get<int>();
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file " + path.string() + ": " + e.what());
  }
  return base;
}

std::vector<std::uint64_t> parse_grid(std::string_view spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string_view::npos ? first : spec.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw UsageError("grid spec must be start:stop:x<factor> or start:stop:+<step>");
  }
  const std::uint64_t start = parse_u64(spec.substr(0, first), "start");
  const std::uint64_t stop = parse_u64(spec.substr(first + 1, second - first - 1), "stop");
  const std::string_view rule = spec.substr(second + 1);
  if (start == 0 || start > stop) throw UsageError("grid needs 1 <= start <= stop");
  if (rule.size() < 2 || (rule[0] != 'x' && rule[0] != '+')) {
    throw UsageError("grid rule must be x<factor> or +<step>");
  }

  std::vector<std::uint64_t> points;
  if (rule[0] == 'x') {
    const std::uint64_t factor = parse_u64(rule.substr(1), "factor");
    if (factor < 2) throw UsageError("geometric grid factor must be >= 2");
    for (std::uint64_t v = start;; v *= factor) {
      points.push_back(v);
      if (v > stop / factor) break;
    }
  } else {
    const std::uint64_t step = parse_u64(rule.substr(1), "step");
    if (step == 0) throw UsageError("arithmetic grid step must be >= 1");
    for (std::uint64_t v = start;; v += step) {
      points.push_back(v);
      if (stop - v < step) break;
    }
  }
  return points;
}

}  // namespace totient
