#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hkcli {

enum ExitCode : int { exit_pass = 0, exit_mismatch = 1, exit_invalid = 2, exit_resource = 3 };

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct Row {
  KeyValues point;
  std::optional<std::string> formula;
  std::optional<std::string> oracle;
  std::optional<std::string> golden;

  /// nullopt when the row carries a single value and nothing to compare.
  std::optional<bool> match() const;
};

struct RunReport {
  std::string mode;
  std::string target;
  KeyValues instance;
  std::vector<Row> rows;

  bool pass() const;
};

enum class Format { table, csv, json };

void emit(const RunReport& report, Format format, std::ostream& out);

/// Full command line (args[0] is the program name). Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkcli
