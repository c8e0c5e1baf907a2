#include "totient/report.hpp"

#include <cstdio>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "totient/errors.hpp"

namespace totient {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::uint64_t to_u64(const std::string& text) {
  const u128 v = parse_u128(text);
  if (v > ~std::uint64_t{0}) throw UsageError("value out of range: " + text);
  return static_cast<std::uint64_t>(v);
}

// JSON numbers parsed back from the formatted text so the emitted digits
// match the CSV.
nlohmann::json json_real(long double value, int digits) {
  return std::stod(format_real(value, digits));
}

}  // namespace

std::string format_real(long double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, value);
  return buf;
}

void write_csv(std::ostream& os, std::span<const ErrorRecord> records, int digits) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.x << ',' << r.p << ',' << quantity_name(r.quantity) << ',' << r.exact.to_string() << ','
       << format_real(r.main, digits) << ',' << format_real(r.raw_error, digits) << ','
       << format_real(r.normalized_error, digits) << '\n';
  }
}

void write_json(std::ostream& os, std::span<const ErrorRecord> records, int digits) {
  for (const auto& r : records) {
    nlohmann::ordered_json obj;
    obj["x"] = r.x;
    obj["p"] = r.p;
    obj["quantity"] = std::string(quantity_name(r.quantity));
    obj["exact"] = r.exact.to_string();
    obj["main"] = json_real(r.main, digits);
    obj["raw_error"] = json_real(r.raw_error, digits);
    obj["normalized_error"] = json_real(r.normalized_error, digits);
    os << obj.dump() << '\n';
  }
}

void write_plain(std::ostream& os, std::span<const ErrorRecord> records, int digits) {
  const int w = digits + 8;
  os << std::left << std::setw(14) << "x" << std::setw(6) << "p" << std::setw(12) << "quantity"
     << std::setw(28) << "exact" << std::setw(w) << "main" << std::setw(w) << "raw_error"
     << "normalized_error\n";
  for (const auto& r : records) {
    os << std::setw(14) << r.x << std::setw(6) << r.p << std::setw(12) << quantity_name(r.quantity)
       << std::setw(28) << r.exact.to_string() << std::setw(w) << format_real(r.main, digits)
       << std::setw(w) << format_real(r.raw_error, digits)
       << format_real(r.normalized_error, digits) << '\n';
  }
}

void write_records(std::ostream& os, std::span<const ErrorRecord> records, OutputFormat format,
                   int digits) {
  switch (format) {
    case OutputFormat::csv: write_csv(os, records, digits); break;
    case OutputFormat::json: write_json(os, records, digits); break;
    case OutputFormat::plain: write_plain(os, records, digits); break;
  }
}

std::vector<CsvRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw UsageError("missing or wrong CSV header");
  std::vector<CsvRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw UsageError("CSV row must have 7 fields: " + line);
    CsvRow row;
    row.x = to_u64(f[0]);
    row.p = to_u64(f[1]);
    row.quantity = f[2];
    row.exact = BigRational::parse(f[3]);
    row.main = std::stold(f[4]);
    row.raw_error = std::stold(f[5]);
    row.normalized_error = std::stold(f[6]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_report_plain(std::ostream& os, const VerifyReport& report) {
  os << std::left << std::setw(14) << identity_name(report.identity)
     << (report.passed() ? "PASS  " : "FAIL  ") << "checked=" << report.checked
     << " failures=" << report.failures << "  " << report.params << '\n';
  if (report.first_counterexample) {
    const auto& c = *report.first_counterexample;
    os << "    first counterexample at " << c.params << ": lhs=" << c.lhs << " rhs=" << c.rhs
       << '\n';
  }
}

void write_reports_json(std::ostream& os, std::span<const VerifyReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json obj;
    obj["identity"] = std::string(identity_name(r.identity));
    obj["params"] = r.params;
    obj["checked"] = r.checked;
    obj["failures"] = r.failures;
    if (r.first_counterexample) {
      obj["first_counterexample"] = {{"params", r.first_counterexample->params},
                                     {"lhs", r.first_counterexample->lhs},
                                     {"rhs", r.first_counterexample->rhs}};
    } else {
      obj["first_counterexample"] = nullptr;
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

}  // namespace totient
