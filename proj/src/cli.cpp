#include "prosa/cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "prosa/io.hpp"

namespace prosa::cli {

namespace fs = std::filesystem;

namespace {

std::string iso8601_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::string hex64(std::uint64_t value) {
  char buffer[19];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(value));
  return buffer;
}

struct OutputRecord {
  std::string path;  // relative to out_dir
  std::size_t bytes = 0;
  std::uint64_t checksum = 0;
};

// Writes content and records size + checksum for the manifest.
OutputRecord write_output(const fs::path& out_dir, const std::string& name,
                          const std::string& content) {
  const fs::path path = out_dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path.string() + "'");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
  return {name, content.size(), io::fnv1a64(content)};
}

nlohmann::ordered_json config_json(const ExperimentConfig& config) {
  nlohmann::ordered_json j;
  j["nodes"] = config.node_count;
  j["queries_per_node"] = config.queries_per_node;
  j["required_results"] = config.required_results;
  j["topics"] = config.topic_count;
  j["topics_per_peer"] = config.topics_per_peer;
  j["docs_per_peer_min"] = config.docs_per_peer_min;
  j["docs_per_peer_max"] = config.docs_per_peer_max;
  j["terms_per_topic"] = config.terms_per_topic;
  j["join_fanout"] = config.join_fanout;
  j["doc_threshold"] = config.doc_threshold;
  j["flood_threshold"] = config.flood_threshold;
  j["ttl"] = config.ttl;
  j["seed"] = config.seed;
  j["query_locality"] = config.query_locality;
  j["noise_factor"] = config.noise_factor;
  j["random_issuers"] = config.random_issuers;
  j["apl_window"] = config.apl_window;
  j["apl_step"] = config.apl_step;
  j["checkpoint_interval"] = config.checkpoint_interval;
  j["cc_count_undefined_as_zero"] = config.cc_count_undefined_as_zero;
  j["apl_first_responder_only"] = config.apl_first_responder_only;
  return j;
}

void write_manifest(const fs::path& out_dir, const std::string& command,
                    const ExperimentConfig& config, const std::string& started_at,
                    const std::vector<OutputRecord>& outputs) {
  nlohmann::ordered_json manifest;
  manifest["command"] = command;
  manifest["config"] = config_json(config);
  manifest["seed"] = config.seed;
  manifest["started_at"] = started_at;
  manifest["finished_at"] = iso8601_utc_now();
  auto& list = manifest["outputs"] = nlohmann::ordered_json::array();
  for (const auto& record : outputs) {
    list.push_back({{"path", record.path},
                    {"bytes", record.bytes},
                    {"fnv1a64", hex64(record.checksum)}});
  }
  std::ofstream out(out_dir / "manifest.json");
  if (!out) throw std::runtime_error("cannot open manifest.json");
  out << manifest.dump(2) << '\n';
}

fs::path prepare_out_dir(const std::string& out_dir) {
  if (out_dir.empty()) throw std::runtime_error("an output directory is required");
  fs::path path(out_dir);
  fs::create_directories(path);
  return path;
}

}  // namespace

ExperimentConfig resolve_config(const CommandOptions& options) {
  ExperimentConfig config;
  if (!options.config_path.empty()) io::apply_config_file(config, options.config_path);
  for (const auto& [key, value] : options.overrides) {
    io::apply_config_entry(config, key, value);
  }
  config.validate();
  return config;
}

int cmd_run(const CommandOptions& options) {
  try {
    const std::string started_at = iso8601_utc_now();
    const ExperimentConfig config = resolve_config(options);
    const fs::path out_dir = prepare_out_dir(options.out_dir);

    const ExperimentResult result = run_experiment(config);

    std::vector<OutputRecord> outputs;
    outputs.push_back(write_output(out_dir, "metrics.csv", io::metrics_csv(result.report)));
    outputs.push_back(write_output(out_dir, "trace.csv", io::trace_csv(result.traces)));
    outputs.push_back(write_output(out_dir, "edges.txt", io::edge_list(result.net)));
    write_manifest(out_dir, "run", config, started_at, outputs);

    std::cout << "run: " << config.node_count << " nodes, " << result.traces.size()
              << " queries, apl " << io::format_double(result.report.apl) << ", cc "
              << io::format_double(result.report.cc) << "\n"
              << "outputs written to " << out_dir.string() << "\n";
    return 0;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
}

int cmd_sweep(const CommandOptions& options) {
  try {
    const std::string started_at = iso8601_utc_now();
    const ExperimentConfig config = resolve_config(options);
    if (options.sizes.empty()) throw std::runtime_error("sweep: no sizes given");
    const fs::path out_dir = prepare_out_dir(options.out_dir);

    const std::vector<MetricsReport> reports = sweep(config, options.sizes);

    std::vector<OutputRecord> outputs;
    std::vector<std::pair<std::size_t, MetricsReport>> rows;
    for (std::size_t i = 0; i < options.sizes.size(); ++i) {
      rows.emplace_back(options.sizes[i], reports[i]);
      outputs.push_back(write_output(out_dir,
                                     "metrics_" + std::to_string(options.sizes[i]) + ".csv",
                                     io::metrics_csv(reports[i])));
    }
    std::ostringstream summary;
    io::write_sweep_summary_csv(rows, summary);
    outputs.push_back(write_output(out_dir, "summary.csv", summary.str()));
    write_manifest(out_dir, "sweep", config, started_at, outputs);

    std::cout << "sweep: " << options.sizes.size() << " sizes, outputs written to "
              << out_dir.string() << "\n";
    return 0;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
}

int cmd_baseline(std::uint64_t v, std::uint64_t e) {
  if (v < 2) {
    std::cerr << "error: baseline needs at least 2 nodes\n";
    return 1;
  }
  int status = 0;
  if (e > v) {
    std::cout << "random_apl " << io::format_double(random_graph_apl(v, e)) << "\n";
  } else {
    std::cout << "random_apl undefined\n";
    status = 1;
  }
  std::cout << "random_cc " << io::format_double(random_graph_cc(v, e)) << "\n";
  return status;
}

}  // namespace prosa::cli
