// prosa_sim: overlay simulator CLI.
//
//   prosa_sim run      --out DIR [--config FILE] [overrides...]
//   prosa_sim sweep    --out DIR --sizes 100,200,400 [--config FILE] [overrides...]
//   prosa_sim baseline V E
//
// Every experiment config field has an override flag; the seed also falls
// back to the PROSA_SIM_SEED environment variable.

#include <cstdint>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prosa/cli.hpp"

namespace {

// Collects flag values as (config key, raw string) overrides so that the
// config-file parser stays the single source of field validation.
struct OverrideFlags {
  std::vector<std::pair<std::string, std::string>> values;

  void add(CLI::App* cmd, const std::string& flag, const std::string& key,
           const std::string& help, const std::string& envname = "") {
    auto* option = cmd->add_option_function<std::string>(
        flag, [this, key](const std::string& value) { values.emplace_back(key, value); },
        help);
    if (!envname.empty()) option->envname(envname);
  }
};

void add_override_flags(CLI::App* cmd, OverrideFlags& flags) {
  flags.add(cmd, "--seed", "seed", "RNG seed (fallback: PROSA_SIM_SEED)", "PROSA_SIM_SEED");
  flags.add(cmd, "--nodes", "nodes", "Number of peers");
  flags.add(cmd, "--queries-per-node", "queries_per_node", "Queries issued per peer");
  flags.add(cmd, "--required-results,--nr", "required_results",
            "Results requested per query");
  flags.add(cmd, "--topics", "topics", "Number of corpus topics");
  flags.add(cmd, "--topics-per-peer", "topics_per_peer", "Topics assigned to each peer");
  flags.add(cmd, "--docs-per-peer-min", "docs_per_peer_min", "Min documents per peer");
  flags.add(cmd, "--docs-per-peer-max", "docs_per_peer_max", "Max documents per peer");
  flags.add(cmd, "--terms-per-topic", "terms_per_topic", "Terms in each topic block");
  flags.add(cmd, "--join-fanout", "join_fanout", "Acquaintances made on join");
  flags.add(cmd, "--doc-threshold", "doc_threshold", "Document relevance threshold");
  flags.add(cmd, "--flood-threshold", "flood_threshold", "Semantic flooding threshold");
  flags.add(cmd, "--ttl", "ttl", "Hop limit per query");
  flags.add(cmd, "--query-locality", "query_locality",
            "Probability of querying an own topic");
  flags.add(cmd, "--noise-factor", "noise_factor", "Per-term multiplicative noise");
  flags.add(cmd, "--random-issuers", "random_issuers",
            "true/false: pick issuers uniformly instead of round-robin");
  flags.add(cmd, "--apl-window", "apl_window", "Trace window for running APL");
  flags.add(cmd, "--apl-step", "apl_step", "Step between APL windows");
  flags.add(cmd, "--checkpoint-interval", "checkpoint_interval",
            "Queries between clustering checkpoints (0 = off)");
  flags.add(cmd, "--cc-count-undefined-as-zero", "cc_count_undefined_as_zero",
            "true/false: count degree<2 nodes as CC 0");
  flags.add(cmd, "--apl-first-responder-only", "apl_first_responder_only",
            "true/false: measure APL to the first responder only");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prosa_sim: social-inspired P2P overlay simulator"};
  app.require_subcommand(1);

  prosa::cli::CommandOptions run_options;
  OverrideFlags run_flags;
  auto* run = app.add_subcommand("run", "Run one experiment and export its artifacts");
  run->add_option("--config", run_options.config_path, "Key-value config file");
  run->add_option("--out", run_options.out_dir, "Output directory")->required();
  add_override_flags(run, run_flags);

  prosa::cli::CommandOptions sweep_options;
  OverrideFlags sweep_flags;
  std::vector<std::uint64_t> sweep_sizes;
  auto* sweep = app.add_subcommand("sweep", "Run one experiment per network size");
  sweep->add_option("--config", sweep_options.config_path, "Key-value config file");
  sweep->add_option("--out", sweep_options.out_dir, "Output directory")->required();
  sweep->add_option("--sizes", sweep_sizes, "Comma-separated node counts")
      ->required()
      ->delimiter(',');
  add_override_flags(sweep, sweep_flags);

  std::uint64_t baseline_v = 0;
  std::uint64_t baseline_e = 0;
  auto* baseline =
      app.add_subcommand("baseline", "Print analytic random-graph APL and CC");
  baseline->add_option("v", baseline_v, "Node count")->required();
  baseline->add_option("e", baseline_e, "Edge count")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    run_options.overrides = std::move(run_flags.values);
    return prosa::cli::cmd_run(run_options);
  }
  if (sweep->parsed()) {
    sweep_options.overrides = std::move(sweep_flags.values);
    sweep_options.sizes.assign(sweep_sizes.begin(), sweep_sizes.end());
    return prosa::cli::cmd_sweep(sweep_options);
  }
  return prosa::cli::cmd_baseline(baseline_v, baseline_e);
}
