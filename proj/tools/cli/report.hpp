#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hbu::cli {

enum class Status { Pass, Fail, Inconclusive };

/// Exit code of a status: 0 pass, 1 fail, 2 inconclusive.
int exit_code(Status s);
const char* to_string(Status s);

/// Usage errors exit with 3.
inline constexpr int kUsageExit = 3;

struct Report {
  std::string experiment;
  /// Echo of the effective parameters.
  std::vector<std::pair<std::string, std::string>> input;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Printed to stdout as key=value lines.
  std::vector<std::pair<std::string, std::string>> summary;
  Status status = Status::Pass;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  /// Print the CSV to stdout when no output path is given.
  bool csv_to_stdout = false;
};

void write_csv(std::ostream& out, const Report& r);
/// Writes `path` and the `path.meta.json` sidecar (timestamps live only there).
void write_outputs(const Report& r, const std::string& path);
void print_summary(std::ostream& out, const Report& r);

std::string num(double v, int precision = 12);
/// Shortest text that reads back to the same double.
std::string exact(double v);

/// Minimal CSV reader (no quoting) used by `emit`.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Index of a column or -1.
  int find(const std::string& name) const;
};
Table read_csv(const std::string& path);

}  // namespace hbu::cli
