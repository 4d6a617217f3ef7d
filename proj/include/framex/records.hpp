#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "framex/experiments.hpp"

namespace framex {

inline constexpr const char* kCsvHeader =
    "function,n,m,gamma,epsilon,eta,error_inf,error_l2,cond_2,cond_inf,flag";

/// `# key=value` comment lines written above the header.
using CsvMetadata = std::vector<std::pair<std::string, std::string>>;

struct CsvDocument {
  CsvMetadata metadata;
  std::vector<SweepRecord> records;
};

/// Writes metadata comments, the header, and the records sorted by
/// (function, gamma, epsilon, n). Floats use 17 significant digits.
void write_csv(std::ostream& out, std::vector<SweepRecord> records, const CsvMetadata& metadata = {});

/// Same, to a file; throws std::runtime_error naming the path on I/O failure.
void emit_csv(const std::vector<SweepRecord>& records, const std::filesystem::path& path,
              const CsvMetadata& metadata = {});

/// Throws InvalidArgument on a malformed header or row.
CsvDocument parse_csv(std::istream& in);
CsvDocument read_csv(const std::filesystem::path& path);

/// %.17g.
std::string format_double(double value);

}  // namespace framex
