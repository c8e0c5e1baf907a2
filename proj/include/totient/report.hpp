#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "totient/asymptotics.hpp"
#include "totient/config.hpp"
#include "totient/identities.hpp"

namespace totient {

inline constexpr const char* kCsvHeader = "x,p,quantity,exact,main,raw_error,normalized_error";

/// `digits` significant digits, %g style. Deterministic for a given input.
std::string format_real(long double value, int digits);

/// CSV rows under kCsvHeader. `exact` is written as a full decimal integer,
/// or as a reduced fraction a/b for non-integer averages.
void write_csv(std::ostream& os, std::span<const ErrorRecord> records, int digits);

/// One JSON object per line with the CSV header's keys; `exact` is a string
/// so that it survives any JSON reader exactly.
void write_json(std::ostream& os, std::span<const ErrorRecord> records, int digits);

/// Whitespace-aligned table for terminals.
void write_plain(std::ostream& os, std::span<const ErrorRecord> records, int digits);

void write_records(std::ostream& os, std::span<const ErrorRecord> records, OutputFormat format,
                   int digits);

/// A CSV row as text fields, with the integer columns parsed back.
struct CsvRow {
  std::uint64_t x = 0;
  std::uint64_t p = 0;
  std::string quantity;
  BigRational exact;
  long double main = 0;
  long double raw_error = 0;
  long double normalized_error = 0;
};

/// Reads what write_csv writes. Throws UsageError on a wrong header or a
/// malformed row.
std::vector<CsvRow> read_csv(std::istream& is);

void write_report_plain(std::ostream& os, const VerifyReport& report);
void write_reports_json(std::ostream& os, std::span<const VerifyReport> reports);

}  // namespace totient
