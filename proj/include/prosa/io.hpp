// File formats: metrics CSV, trace CSV, edge-list snapshots and the
// key-value experiment config. Writers and the matching loaders live
// together so round-trips stay in one place.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "prosa/metrics.hpp"
#include "prosa/overlay.hpp"
#include "prosa/routing.hpp"
#include "prosa/workload.hpp"

namespace prosa::io {

// Shortest-ish deterministic decimal form, 12 significant digits.
std::string format_double(double value);

// --- metrics CSV ----------------------------------------------------------
// Uniform 7-field rows behind a generic header:
//   record,apl,cc,random_apl,random_cc,nodes,edges
//   summary,<apl>,<cc>,<random_apl>,<random_cc>,<nodes>,<edges>
//   window,<start>,<apl>,,,,
//   node,<peer>,<cc>,,,,
// random_apl is the literal `nan` when undefined.
void write_metrics_csv(const MetricsReport& report, std::ostream& out);
std::string metrics_csv(const MetricsReport& report);
MetricsReport load_metrics_csv(std::istream& in);

// --- trace CSV -------------------------------------------------------------
// One row per trace event: qid,event,from,to,depth,detail. The detail field
// holds the forward mode, the respond match count, or the label transition.
void write_trace_csv(const std::vector<QueryTrace>& traces, std::ostream& out);
std::string trace_csv(const std::vector<QueryTrace>& traces);

struct TraceCsvRow {
  std::uint64_t query_id = 0;
  std::string event;
  PeerId from = kNoPeer;
  PeerId to = kNoPeer;
  std::size_t depth = 0;
  std::string detail;
};
std::vector<TraceCsvRow> load_trace_csv(std::istream& in);

// --- edge list --------------------------------------------------------------
// One line per link: `source target label`, label in {AL, TSL, FSL},
// ascending (source, target).
void write_edge_list(const OverlayNetwork& net, std::ostream& out);
std::string edge_list(const OverlayNetwork& net);

struct EdgeListEntry {
  PeerId source = kNoPeer;
  PeerId target = kNoPeer;
  LinkType label = LinkType::AL;
};
std::vector<EdgeListEntry> load_edge_list(std::istream& in);

// --- sweep summary CSV -------------------------------------------------------
// size,apl,random_apl,cc,random_cc — rows in ascending size order.
void write_sweep_summary_csv(const std::vector<std::pair<std::size_t, MetricsReport>>& rows,
                             std::ostream& out);

// --- experiment config -------------------------------------------------------
// Plain `key = value` lines; `#` starts a comment. Unknown keys are errors.
void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value);
// Applies only the keys present in the stream, on top of `config`.
void apply_config_stream(ExperimentConfig& config, std::istream& in);
void apply_config_file(ExperimentConfig& config, const std::string& path);
ExperimentConfig load_config(std::istream& in);
ExperimentConfig load_config_file(const std::string& path);
void write_config(const ExperimentConfig& config, std::ostream& out);
std::string config_text(const ExperimentConfig& config);

// All fields as (key, value-string) pairs in file order.
std::vector<std::pair<std::string, std::string>> config_entries(
    const ExperimentConfig& config);

// FNV-1a, used for output checksums in the run manifest.
std::uint64_t fnv1a64(const std::string& data);

}  // namespace prosa::io
