#include "prosa/workload.hpp"

#include <future>
#include <stdexcept>
#include <string>

namespace prosa {

RoutingConfig ExperimentConfig::routing() const {
  return RoutingConfig{doc_threshold, flood_threshold, ttl};
}

MetricsOptions ExperimentConfig::metrics() const {
  MetricsOptions options;
  options.apl_window = apl_window;
  options.apl_step = apl_step;
  options.apl_mode =
      apl_first_responder_only ? AplMode::FirstResponder : AplMode::AllResponders;
  options.cc_policy = cc_count_undefined_as_zero ? CcUndefinedPolicy::CountAsZero
                                                 : CcUndefinedPolicy::Exclude;
  return options;
}

void ExperimentConfig::validate() const {
  auto positive = [](std::size_t value, const char* field) {
    if (value == 0) {
      throw std::invalid_argument(std::string("config: ") + field + " must be positive");
    }
  };
  positive(node_count, "node_count");
  positive(queries_per_node, "queries_per_node");
  positive(required_results, "required_results");
  positive(topic_count, "topic_count");
  positive(topics_per_peer, "topics_per_peer");
  positive(docs_per_peer_min, "docs_per_peer_min");
  positive(docs_per_peer_max, "docs_per_peer_max");
  positive(terms_per_topic, "terms_per_topic");
  positive(join_fanout, "join_fanout");
  positive(ttl, "ttl");
  positive(apl_window, "apl_window");
  if (docs_per_peer_min > docs_per_peer_max) {
    throw std::invalid_argument("config: docs_per_peer_min exceeds docs_per_peer_max");
  }
  if (topics_per_peer > topic_count) {
    throw std::invalid_argument("config: topics_per_peer exceeds topic_count");
  }
  auto unit_range = [](double value, const char* field) {
    if (value < 0.0 || value > 1.0) {
      throw std::invalid_argument(std::string("config: ") + field + " must be in [0, 1]");
    }
  };
  unit_range(doc_threshold, "doc_threshold");
  unit_range(flood_threshold, "flood_threshold");
  unit_range(query_locality, "query_locality");
  if (noise_factor < 0.0 || noise_factor >= 1.0) {
    throw std::invalid_argument("config: noise_factor must be in [0, 1)");
  }
  if (apl_step == 0 || apl_step > apl_window) {
    throw std::invalid_argument("config: apl_step must be in [1, apl_window]");
  }
}

TopicModel build_topic_model(const ExperimentConfig& config, Rng& rng) {
  TopicModel model;
  model.terms_per_topic = config.terms_per_topic;
  model.topics.reserve(config.topic_count);
  for (std::size_t topic = 0; topic < config.topic_count; ++topic) {
    std::vector<TermWeight> entries;
    entries.reserve(config.terms_per_topic);
    const TermId base = static_cast<TermId>(topic * config.terms_per_topic);
    for (std::size_t k = 0; k < config.terms_per_topic; ++k) {
      // Uneven prototype weights so that peers mixing topics differ.
      entries.push_back({base + static_cast<TermId>(k), 0.5 + rng.unit()});
    }
    model.topics.push_back(TermVector(std::move(entries)).normalized());
  }
  return model;
}

TermVector perturb_vector(const TermVector& prototype, double noise, Rng& rng) {
  if (noise == 0.0) return prototype;
  std::vector<TermWeight> entries;
  entries.reserve(prototype.size());
  for (const auto& e : prototype.entries()) {
    entries.push_back({e.term, e.weight * (1.0 + noise * rng.symmetric_unit())});
  }
  return TermVector(std::move(entries)).normalized();
}

std::vector<PeerSeed> generate_corpus(const ExperimentConfig& config,
                                      const TopicModel& model, Rng& rng) {
  std::vector<PeerSeed> seeds;
  seeds.reserve(config.node_count);
  DocId next_doc_id = 0;
  std::vector<std::size_t> all_topics(config.topic_count);
  for (std::size_t t = 0; t < config.topic_count; ++t) all_topics[t] = t;

  for (std::size_t slot = 0; slot < config.node_count; ++slot) {
    PeerSeed seed;
    std::vector<std::size_t> pool = all_topics;
    rng.partial_shuffle(pool, config.topics_per_peer);
    pool.resize(config.topics_per_peer);
    seed.topics = std::move(pool);

    const std::size_t span = config.docs_per_peer_max - config.docs_per_peer_min + 1;
    const std::size_t doc_count =
        config.docs_per_peer_min + static_cast<std::size_t>(rng.below(span));
    seed.documents.reserve(doc_count);
    for (std::size_t d = 0; d < doc_count; ++d) {
      const std::size_t topic =
          seed.topics[static_cast<std::size_t>(rng.below(seed.topics.size()))];
      seed.documents.emplace_back(
          next_doc_id++, perturb_vector(model.topics[topic], config.noise_factor, rng));
    }
    seeds.push_back(std::move(seed));
  }
  return seeds;
}

QueryGenerator::QueryGenerator(const TopicModel& model, double locality, double noise)
    : model_(model), locality_(locality), noise_(noise) {}

QueryMessage QueryGenerator::generate(const std::vector<std::size_t>& peer_topics,
                                      PeerId source, std::size_t required_results,
                                      Rng& rng) {
  if (peer_topics.empty()) {
    throw std::invalid_argument("QueryGenerator: peer has no topics");
  }
  std::size_t topic;
  if (rng.unit() < locality_) {
    topic = peer_topics[static_cast<std::size_t>(rng.below(peer_topics.size()))];
  } else {
    topic = static_cast<std::size_t>(rng.below(model_.topics.size()));
  }
  QueryMessage message;
  message.query_id = next_query_id_++;
  message.query = perturb_vector(model_.topics[topic], noise_, rng);
  message.source = source;
  message.required_results = required_results;
  return message;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();

  Rng rng(config.seed);
  const TopicModel model = build_topic_model(config, rng);
  const std::vector<PeerSeed> seeds = generate_corpus(config, model, rng);

  ExperimentResult result;
  for (std::size_t i = 0; i < config.node_count; ++i) {
    const PeerId id = result.net.add_peer(seeds[i].documents);
    if (i > 0) result.net.join(id, config.join_fanout, rng);
  }

  QueryGenerator generator(model, config.query_locality, config.noise_factor);
  const RoutingConfig routing = config.routing();
  const std::size_t total_queries = config.node_count * config.queries_per_node;
  result.traces.reserve(total_queries);

  auto take_checkpoint = [&](std::size_t issued) {
    Checkpoint cp;
    cp.queries_issued = issued;
    cp.cc = clustering_coefficient_network(result.net, config.metrics().cc_policy);
    cp.edge_count = result.net.link_count();
    cp.link_types = result.net.link_type_counts();
    result.checkpoints.push_back(cp);
  };

  for (std::size_t k = 0; k < total_queries; ++k) {
    const PeerId issuer =
        config.random_issuers
            ? static_cast<PeerId>(rng.below(config.node_count))
            : static_cast<PeerId>(k % config.node_count);
    const QueryMessage message = generator.generate(
        seeds[issuer].topics, issuer, config.required_results, rng);
    result.traces.push_back(exec_query(result.net, message, routing, rng));
    if (config.checkpoint_interval != 0 &&
        (k + 1) % config.checkpoint_interval == 0) {
      take_checkpoint(k + 1);
    }
  }
  if (config.checkpoint_interval != 0 &&
      total_queries % config.checkpoint_interval != 0) {
    take_checkpoint(total_queries);
  }

  result.report = compute_metrics(result.net, result.traces, config.metrics());
  return result;
}

std::vector<MetricsReport> sweep(const ExperimentConfig& base,
                                 const std::vector<std::size_t>& node_counts) {
  if (node_counts.empty()) {
    throw std::invalid_argument("sweep: node_counts must not be empty");
  }
  std::vector<std::future<MetricsReport>> futures;
  futures.reserve(node_counts.size());
  for (std::size_t size : node_counts) {
    ExperimentConfig config = base;
    config.node_count = size;
    config.seed = derive_seed(base.seed, size);
    futures.push_back(std::async(std::launch::async, [config] {
      return run_experiment(config).report;
    }));
  }
  std::vector<MetricsReport> reports;
  reports.reserve(node_counts.size());
  for (auto& future : futures) reports.push_back(future.get());
  return reports;
}

}  // namespace prosa
