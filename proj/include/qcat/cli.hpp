#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qcat::cli {

enum class Format { Json, Latex, Plain };

// Unset sizes (-1) fall back to default_truncation().
struct RunConfig {
  std::string command;
  std::string ptilde = "0";
  std::string phi = "z";
  std::string suite = "all";
  int n = -1;
  int p = 2;
  int trunc = -1;
  int r1 = -1;
  int r2 = -1;
  int order = -1;
  Format format = Format::Json;
  std::uint64_t seed = 20240611;
};

enum ExitCode : int { kOk = 0, kOther = 1, kParse = 2, kTruncation = 3, kCheckFailed = 4 };

// QCAT_DEFAULT_TRUNC when set, else 12.
int default_truncation();

Format parse_format(const std::string& name);

// Writes the report to out and diagnostics to err; returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qcat::cli
