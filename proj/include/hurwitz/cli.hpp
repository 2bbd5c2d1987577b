#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace hurwitz::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 2,
  kUsage = 64,
  kDataError = 65,
};

enum class Method { kRecursion, kOracle, kBoth };
enum class Format { kJson, kCsv, kText };

struct RunConfig {
  int g_max = 1;
  int n_max = 4;
  /// 0 selects the engine default for the request.
  int trunc_order = 0;
  Method method = Method::kBoth;
  Format format = Format::kText;
  std::optional<std::string> cache;
  bool verbose = false;
};

/// Parses argv and runs the chosen subcommand. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_wkg(int g, int k, const RunConfig& config, std::ostream& out, std::ostream& err);
/// suite is one of bm, elsv, times, series.
int cmd_check(const std::string& suite, const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
