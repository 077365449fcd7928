#include "prosa/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace prosa {

namespace {

// Accumulates respond depths from one trace into (sum, count).
void accumulate_responses(const QueryTrace& trace, AplMode mode, double& sum,
                          std::size_t& count) {
  for (const auto& event : trace.events) {
    if (event.kind != TraceEventKind::Respond) continue;
    sum += static_cast<double>(event.depth);
    ++count;
    if (mode == AplMode::FirstResponder) return;
  }
}

}  // namespace

double apl_from_traces(const std::vector<QueryTrace>& traces, AplMode mode) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& trace : traces) accumulate_responses(trace, mode, sum, count);
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

std::vector<std::pair<std::size_t, double>> windowed_apl(
    const std::vector<QueryTrace>& traces, std::size_t window, std::size_t step,
    AplMode mode) {
  if (window == 0) throw std::invalid_argument("windowed_apl: window must be >= 1");
  if (step == 0 || step > window) {
    throw std::invalid_argument("windowed_apl: step must be in [1, window]");
  }
  std::vector<std::pair<std::size_t, double>> series;
  for (std::size_t start = 0; start + window <= traces.size(); start += step) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = start; i < start + window; ++i) {
      accumulate_responses(traces[i], mode, sum, count);
    }
    series.emplace_back(start, count == 0 ? 0.0 : sum / static_cast<double>(count));
  }
  return series;
}

std::optional<double> clustering_coefficient_node(const OverlayNetwork& net, PeerId n) {
  const auto& links = net.neighborhood(n);
  const std::size_t degree = links.size();
  if (degree < 2) return std::nullopt;

  std::vector<PeerId> neighbors;
  neighbors.reserve(degree);
  for (const auto& [target, label] : links) neighbors.push_back(target);

  std::size_t realized = 0;
  for (PeerId a : neighbors) {
    for (PeerId b : neighbors) {
      if (a != b && net.has_link(a, b)) ++realized;
    }
  }
  const std::size_t possible = degree * (degree - 1);
  return static_cast<double>(realized) / static_cast<double>(possible);
}

double clustering_coefficient_network(const OverlayNetwork& net,
                                      CcUndefinedPolicy policy) {
  double sum = 0.0;
  std::size_t count = 0;
  for (PeerId n = 0; n < net.peer_count(); ++n) {
    const auto cc = clustering_coefficient_node(net, n);
    if (cc) {
      sum += *cc;
      ++count;
    } else if (policy == CcUndefinedPolicy::CountAsZero) {
      ++count;
    }
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double random_graph_apl(std::size_t v, std::size_t e) {
  if (v < 2) throw std::domain_error("random_graph_apl: need at least 2 nodes");
  if (e <= v) {
    throw std::domain_error("random_graph_apl: undefined for mean degree <= 1");
  }
  return std::log(static_cast<double>(v)) /
         std::log(static_cast<double>(e) / static_cast<double>(v));
}

double random_graph_cc(std::size_t v, std::size_t e) {
  if (v < 2) throw std::domain_error("random_graph_cc: need at least 2 nodes");
  return static_cast<double>(e) / (static_cast<double>(v) * static_cast<double>(v - 1));
}

MetricsReport compute_metrics(const OverlayNetwork& net,
                              const std::vector<QueryTrace>& traces,
                              const MetricsOptions& options) {
  MetricsReport report;
  report.node_count = net.peer_count();
  report.edge_count = net.link_count();
  report.apl = apl_from_traces(traces, options.apl_mode);
  report.apl_windows =
      windowed_apl(traces, options.apl_window, options.apl_step, options.apl_mode);
  report.cc = clustering_coefficient_network(net, options.cc_policy);
  for (PeerId n = 0; n < net.peer_count(); ++n) {
    const auto cc = clustering_coefficient_node(net, n);
    if (cc) {
      report.cc_per_node.emplace_back(n, *cc);
    } else if (options.cc_policy == CcUndefinedPolicy::CountAsZero) {
      report.cc_per_node.emplace_back(n, 0.0);
    }
  }
  if (report.node_count >= 2 && report.edge_count > report.node_count) {
    report.random_apl = random_graph_apl(report.node_count, report.edge_count);
  }
  if (report.node_count >= 2) {
    report.random_cc = random_graph_cc(report.node_count, report.edge_count);
  }
  return report;
}

}  // namespace prosa
