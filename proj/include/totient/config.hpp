#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "totient/ntcore.hpp"

namespace totient {

enum class OutputFormat { csv, json, plain };

OutputFormat parse_output_format(std::string_view name);
std::string_view output_format_name(OutputFormat format);

struct Config {
  std::uint64_t sieve_limit = 10'000'000;
  std::uint64_t memory_ceiling = kDefaultMemoryCeiling;
  OutputFormat output_format = OutputFormat::csv;
  int precision_digits = 15;

  /// Throws UsageError unless sieve_limit <= memory_ceiling and
  /// precision_digits is in [6, 30].
  void validate() const;
};

/// Reads a JSON object with any of the keys sieve_limit, memory_ceiling,
/// output_format, precision_digits, layered over `base`. Unknown keys are
/// rejected. Throws UsageError on unreadable or malformed files.
Config load_config_file(const std::filesystem::path& path, Config base = {});

/// Environment variable naming the config file.
inline constexpr const char* kConfigEnvVar = "TOTIENT_CONFIG";

/// Expands a grid spec:
///   start:stop:x<factor>   start, start*factor, ... while <= stop
///   start:stop:+<step>     start, start+step, ... while <= stop
/// with 1 <= start <= stop, factor >= 2, step >= 1. Throws UsageError.
std::vector<std::uint64_t> parse_grid(std::string_view spec);

}  // namespace totient
