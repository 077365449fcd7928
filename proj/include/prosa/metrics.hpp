// Small-world diagnostics: trace-based average path length, windowed
// running averages, the directed clustering coefficient, and the analytic
// random-graph baselines used for comparison.
//
// Everything here is a pure read-only computation over a network snapshot
// and immutable traces.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prosa/overlay.hpp"
#include "prosa/routing.hpp"

namespace prosa {

enum class AplMode : std::uint8_t {
  AllResponders,   // every respond event contributes its hop depth
  FirstResponder,  // only the first respond event per trace
};

enum class CcUndefinedPolicy : std::uint8_t {
  Exclude,      // nodes with out-degree < 2 do not enter the average
  CountAsZero,  // they enter as 0
};

struct MetricsReport {
  double apl = 0.0;
  std::vector<std::pair<std::size_t, double>> apl_windows;  // (start index, apl)
  double cc = 0.0;
  std::vector<std::pair<PeerId, double>> cc_per_node;  // ascending peer id
  std::optional<double> random_apl;  // absent when edges <= nodes
  double random_cc = 0.0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
};

// Mean hop depth over all responses in all traces; 0 with no responses.
double apl_from_traces(const std::vector<QueryTrace>& traces,
                       AplMode mode = AplMode::AllResponders);

// Running averages over windows of `window` traces starting every `step`
// traces, while a full window fits.
std::vector<std::pair<std::size_t, double>> windowed_apl(
    const std::vector<QueryTrace>& traces, std::size_t window = 300,
    std::size_t step = 50, AplMode mode = AplMode::AllResponders);

// Fraction of realized directed links among the out-neighbors of n.
// Empty when n has fewer than two out-neighbors.
std::optional<double> clustering_coefficient_node(const OverlayNetwork& net, PeerId n);

double clustering_coefficient_network(
    const OverlayNetwork& net,
    CcUndefinedPolicy policy = CcUndefinedPolicy::Exclude);

// log(v) / log(e/v): the standard random-graph path length estimate with
// mean degree e/v. Requires v >= 2 and e > v.
double random_graph_apl(std::size_t v, std::size_t e);

// e / (v * (v - 1)): directed link density of a random graph. Requires v >= 2.
double random_graph_cc(std::size_t v, std::size_t e);

struct MetricsOptions {
  std::size_t apl_window = 300;
  std::size_t apl_step = 50;
  AplMode apl_mode = AplMode::AllResponders;
  CcUndefinedPolicy cc_policy = CcUndefinedPolicy::Exclude;
};

MetricsReport compute_metrics(const OverlayNetwork& net,
                              const std::vector<QueryTrace>& traces,
                              const MetricsOptions& options = {});

}  // namespace prosa
