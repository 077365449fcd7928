// Synthetic corpus and query generation plus experiment orchestration:
// grow a network, drive a query workload through it, and measure.

#pragma once

#include <cstdint>
#include <vector>

#include "prosa/metrics.hpp"
#include "prosa/overlay.hpp"
#include "prosa/routing.hpp"
#include "prosa/rng.hpp"

namespace prosa {

struct ExperimentConfig {
  std::size_t node_count = 200;
  std::size_t queries_per_node = 15;
  std::size_t required_results = 2;
  std::size_t topic_count = 14;
  std::size_t topics_per_peer = 5;
  std::size_t docs_per_peer_min = 4;
  std::size_t docs_per_peer_max = 7;
  std::size_t terms_per_topic = 12;
  std::size_t join_fanout = 3;
  double doc_threshold = 0.5;
  double flood_threshold = 0.5;
  std::size_t ttl = 64;
  std::uint64_t seed = 42;
  double query_locality = 0.8;   // probability a query comes from an own topic
  double noise_factor = 0.2;     // multiplicative per-term perturbation
  bool random_issuers = false;   // round-robin issuance by default
  std::size_t apl_window = 300;
  std::size_t apl_step = 50;
  std::size_t checkpoint_interval = 0;  // queries between CC checkpoints; 0 = off
  bool cc_count_undefined_as_zero = false;
  bool apl_first_responder_only = false;

  RoutingConfig routing() const;
  MetricsOptions metrics() const;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// One normalized prototype vector per topic, over disjoint term blocks.
struct TopicModel {
  std::vector<TermVector> topics;
  std::size_t terms_per_topic = 0;
};

TopicModel build_topic_model(const ExperimentConfig& config, Rng& rng);

// Prototype with every weight scaled by (1 + noise * u), u uniform in
// [-1, 1), then renormalized. noise = 0 returns the prototype unchanged.
TermVector perturb_vector(const TermVector& prototype, double noise, Rng& rng);

// What one peer slot will share and ask about.
struct PeerSeed {
  std::vector<std::size_t> topics;   // assigned topic indices
  std::vector<Document> documents;
};

// Per-slot topic assignments and noisy topic-sampled documents, with
// globally unique sequential document ids. Deterministic under the rng.
std::vector<PeerSeed> generate_corpus(const ExperimentConfig& config,
                                      const TopicModel& model, Rng& rng);

// Issues query messages with monotonically increasing query ids.
class QueryGenerator {
 public:
  QueryGenerator(const TopicModel& model, double locality, double noise);

  // With probability `locality` samples one of the peer's own topics,
  // otherwise a uniformly random topic.
  QueryMessage generate(const std::vector<std::size_t>& peer_topics, PeerId source,
                        std::size_t required_results, Rng& rng);

  std::uint64_t issued() const { return next_query_id_; }

 private:
  const TopicModel& model_;
  double locality_;
  double noise_;
  std::uint64_t next_query_id_ = 0;
};

// Network state sampled during the query phase.
struct Checkpoint {
  std::size_t queries_issued = 0;
  double cc = 0.0;
  std::size_t edge_count = 0;
  LinkTypeCounts link_types;
};

struct ExperimentResult {
  OverlayNetwork net;
  std::vector<QueryTrace> traces;
  MetricsReport report;
  std::vector<Checkpoint> checkpoints;
};

// Full pipeline: grow the network peer by peer, run the query workload
// round-robin (or uniform-random) over issuers, then measure.
ExperimentResult run_experiment(const ExperimentConfig& config);

// One run per size with a per-size derived seed; reports in input order.
// Sizes run in parallel, one network per worker.
std::vector<MetricsReport> sweep(const ExperimentConfig& base,
                                 const std::vector<std::size_t>& node_counts);

}  // namespace prosa
