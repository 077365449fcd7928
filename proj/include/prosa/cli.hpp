// Command implementations behind the prosa_sim binary: run, sweep and
// baseline. Argument parsing stays in the tool's main; these take already
// structured options so tests can call them directly.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prosa/workload.hpp"

namespace prosa::cli {

struct CommandOptions {
  std::string config_path;  // empty: built-in defaults
  std::string out_dir;
  // (key, value) pairs applied after the config file, in order.
  std::vector<std::pair<std::string, std::string>> overrides;
  std::vector<std::size_t> sizes;  // sweep only
};

// Defaults -> config file (if any) -> overrides. Throws on bad input.
ExperimentConfig resolve_config(const CommandOptions& options);

// Runs one experiment; writes metrics.csv, trace.csv, edges.txt and
// manifest.json into out_dir. Returns the process exit status.
int cmd_run(const CommandOptions& options);

// Runs one experiment per size; writes metrics_<size>.csv each, a combined
// summary.csv in ascending size order, and manifest.json.
int cmd_sweep(const CommandOptions& options);

// Prints the analytic random-graph baselines as two labeled lines.
// Nonzero when v < 2, or when e <= v (the APL line prints `undefined`).
int cmd_baseline(std::uint64_t v, std::uint64_t e);

}  // namespace prosa::cli
