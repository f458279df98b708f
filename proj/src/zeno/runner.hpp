// runner.hpp — executes a validated run config into an ordered output table
#ifndef ZENO_RUNNER_HPP
#define ZENO_RUNNER_HPP

#include <string>
#include <vector>

#include "zeno/config.hpp"

namespace zeno {

// One table: column names, rows of JSON scalars (numbers, strings, booleans),
// and a metadata block carrying the fully resolved config.  Failed rows keep
// NaN cells and contribute a diagnostic plus a nonzero exit code
// (2 accuracy, 3 resource; resource wins when both occur).
struct RunResult {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  Json metadata;
  std::vector<std::string> diagnostics;
  int exit_code = 0;
};

// Computes the table for the config's mode.  Row order follows the tau grid
// (or the check battery); rows of sweep modes are computed in parallel but
// stored and emitted in deterministic order.
RunResult run(const RunConfig& config);

// The fixture battery without any config (the oracle-check subcommand).
RunResult run_oracle_battery();

// CSV rendering: one "# <metadata JSON>" comment line, a mandatory header row,
// then one comma-separated line per row with numbers at 17 significant digits.
std::string format_csv(const RunResult& result);

// JSON rendering: {"metadata": ..., "columns": [...], "rows": [[...], ...]}.
std::string format_json(const RunResult& result);

}  // namespace zeno

#endif
