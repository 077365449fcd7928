#include <doctest.h>

#include <set>
#include <stdexcept>

#include "prosa/workload.hpp"

using namespace prosa;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig config;
  config.node_count = 40;
  config.queries_per_node = 4;
  config.topic_count = 4;
  config.topics_per_peer = 2;
  config.seed = 4242;
  config.apl_window = 20;
  config.apl_step = 10;
  return config;
}

}  // namespace

TEST_SUITE_BEGIN("workload");

TEST_CASE("config validation names the offending field") {
  ExperimentConfig config;
  config.node_count = 0;
  CHECK_THROWS_WITH_AS(config.validate(), "config: node_count must be positive",
                       std::invalid_argument);

  config = ExperimentConfig{};
  config.docs_per_peer_min = 9;
  config.docs_per_peer_max = 3;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = ExperimentConfig{};
  config.topics_per_peer = 10;
  config.topic_count = 4;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = ExperimentConfig{};
  config.flood_threshold = 1.5;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  ExperimentConfig{}.validate();  // defaults are valid
}

TEST_CASE("topic model builds normalized prototypes over disjoint blocks") {
  ExperimentConfig config;
  config.topic_count = 5;
  config.terms_per_topic = 7;
  Rng rng(1);
  const TopicModel model = build_topic_model(config, rng);
  REQUIRE(model.topics.size() == 5);
  std::set<TermId> seen;
  for (std::size_t topic = 0; topic < model.topics.size(); ++topic) {
    const TermVector& proto = model.topics[topic];
    CHECK(proto.size() == 7);
    CHECK(proto.is_unit());
    for (const auto& e : proto.entries()) {
      CHECK(e.term / 7 == topic);       // block membership
      CHECK(seen.insert(e.term).second);  // disjoint
    }
  }
}

TEST_CASE("perturb_vector") {
  ExperimentConfig config;
  Rng rng(2);
  const TopicModel model = build_topic_model(config, rng);
  const TermVector& proto = model.topics[0];

  // zero noise: identical
  CHECK(perturb_vector(proto, 0.0, rng) == proto);

  // noisy samples stay on the same support, normalized
  const TermVector sample = perturb_vector(proto, 0.3, rng);
  CHECK(sample.size() == proto.size());
  CHECK(sample.is_unit());
  for (const auto& e : sample.entries()) CHECK(proto.weight(e.term) > 0.0);
}

TEST_CASE("generate_corpus is deterministic and respects ranges") {
  ExperimentConfig config = small_config();
  config.docs_per_peer_min = 5;
  config.docs_per_peer_max = 5;

  Rng rng_a(9);
  Rng rng_b(9);
  const TopicModel model_a = build_topic_model(config, rng_a);
  const TopicModel model_b = build_topic_model(config, rng_b);
  const auto corpus_a = generate_corpus(config, model_a, rng_a);
  const auto corpus_b = generate_corpus(config, model_b, rng_b);

  REQUIRE(corpus_a.size() == config.node_count);
  std::set<DocId> ids;
  for (std::size_t slot = 0; slot < corpus_a.size(); ++slot) {
    const PeerSeed& seed = corpus_a[slot];
    CHECK(seed.documents.size() == 5);
    CHECK(seed.topics.size() == config.topics_per_peer);
    for (const auto& doc : seed.documents) {
      CHECK(ids.insert(doc.id()).second);  // globally unique
    }
    // determinism
    CHECK(seed.topics == corpus_b[slot].topics);
    REQUIRE(seed.documents.size() == corpus_b[slot].documents.size());
    for (std::size_t d = 0; d < seed.documents.size(); ++d) {
      CHECK(seed.documents[d] == corpus_b[slot].documents[d]);
    }
  }
}

TEST_CASE("degenerate corpus: one topic, no noise") {
  ExperimentConfig config = small_config();
  config.topic_count = 1;
  config.topics_per_peer = 1;
  config.noise_factor = 0.0;
  Rng rng(3);
  const TopicModel model = build_topic_model(config, rng);
  const auto corpus = generate_corpus(config, model, rng);
  for (const auto& seed : corpus) {
    for (const auto& doc : seed.documents) CHECK(doc.vector() == model.topics[0]);
  }
}

TEST_CASE("query generator locality and ids") {
  ExperimentConfig config = small_config();
  Rng rng(11);
  const TopicModel model = build_topic_model(config, rng);

  QueryGenerator full_locality(model, 1.0, 0.0);
  const std::vector<std::size_t> own = {2};
  for (int i = 0; i < 20; ++i) {
    const QueryMessage m = full_locality.generate(own, 7, 6, rng);
    CHECK(m.query == model.topics[2]);  // always the peer's own topic
    CHECK(m.required_results == 6);
    CHECK(m.source == 7);
    CHECK(m.query_id == static_cast<std::uint64_t>(i));  // monotone counter
  }
  CHECK_THROWS_AS(full_locality.generate({}, 0, 1, rng), std::invalid_argument);

  // same seed, same sequence
  Rng rng_a(5);
  Rng rng_b(5);
  QueryGenerator gen_a(model, 0.5, 0.2);
  QueryGenerator gen_b(model, 0.5, 0.2);
  for (int i = 0; i < 10; ++i) {
    CHECK(gen_a.generate({0, 1}, 1, 3, rng_a).query ==
          gen_b.generate({0, 1}, 1, 3, rng_b).query);
  }
}

TEST_CASE("run_experiment counts and determinism") {
  ExperimentConfig config = small_config();
  config.node_count = 12;
  config.queries_per_node = 2;

  const ExperimentResult result = run_experiment(config);
  CHECK(result.traces.size() == 24);  // node_count * queries_per_node
  CHECK(result.net.peer_count() == 12);
  // joins alone give at least fanout * (n - 1) links, clamped by small nets
  CHECK(result.net.link_count() >= config.join_fanout * (config.node_count - 1));
  result.net.check_well_formed();

  // round-robin issuance: trace k issued by peer k mod n
  for (std::size_t k = 0; k < result.traces.size(); ++k) {
    CHECK(result.traces[k].source == static_cast<PeerId>(k % 12));
  }

  const ExperimentResult again = run_experiment(config);
  REQUIRE(again.traces.size() == result.traces.size());
  for (std::size_t i = 0; i < result.traces.size(); ++i) {
    CHECK(again.traces[i].events.size() == result.traces[i].events.size());
    CHECK(again.traces[i].total_results == result.traces[i].total_results);
  }
  CHECK(again.report.apl == result.report.apl);
  CHECK(again.report.cc == result.report.cc);
  CHECK(again.report.edge_count == result.report.edge_count);
}

TEST_CASE("full-size run produces the documented window layout") {
  ExperimentConfig config;  // 200 nodes, 15 queries per node
  const ExperimentResult result = run_experiment(config);
  CHECK(result.traces.size() == 3000);
  REQUIRE(result.report.apl_windows.size() == 55);  // starts 0, 50, ..., 2700
  CHECK(result.report.apl_windows.front().first == 0);
  CHECK(result.report.apl_windows.back().first == 2700);
}

TEST_CASE("checkpoints are taken on schedule and edges never disappear") {
  ExperimentConfig config = small_config();
  config.checkpoint_interval = 30;  // 160 queries -> 30,60,90,120,150,160

  const ExperimentResult result = run_experiment(config);
  REQUIRE(result.checkpoints.size() == 6);
  CHECK(result.checkpoints.back().queries_issued == 160);

  std::size_t last_edges = 0;
  std::size_t last_fsl = 0;
  for (const auto& checkpoint : result.checkpoints) {
    CHECK(checkpoint.edge_count >= last_edges);          // links only accumulate
    CHECK(checkpoint.link_types.fsl >= last_fsl);        // promotions are final
    CHECK(checkpoint.link_types.total() == checkpoint.edge_count);
    last_edges = checkpoint.edge_count;
    last_fsl = checkpoint.link_types.fsl;
  }
}

TEST_CASE("fsl fraction grows over the query phase") {
  ExperimentConfig config;
  config.node_count = 60;
  config.queries_per_node = 10;
  config.seed = 77;
  config.checkpoint_interval = 100;
  const ExperimentResult result = run_experiment(config);
  REQUIRE(result.checkpoints.size() >= 3);
  double last_fraction = 0.0;
  for (const auto& checkpoint : result.checkpoints) {
    const double fraction = static_cast<double>(checkpoint.link_types.fsl) /
                            static_cast<double>(checkpoint.link_types.total());
    CHECK(fraction >= last_fraction - 1e-12);
    last_fraction = fraction;
  }
}

TEST_CASE("random issuers flag") {
  ExperimentConfig config = small_config();
  config.random_issuers = true;
  const ExperimentResult result = run_experiment(config);
  CHECK(result.traces.size() == config.node_count * config.queries_per_node);
  // still deterministic
  const ExperimentResult again = run_experiment(config);
  for (std::size_t i = 0; i < result.traces.size(); ++i) {
    CHECK(result.traces[i].source == again.traces[i].source);
  }
}

TEST_CASE("sweep derives per-size seeds and keeps input order") {
  ExperimentConfig base = small_config();
  base.node_count = 10;  // overridden per size

  const auto reports = sweep(base, {20, 35});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].node_count == 20);
  CHECK(reports[1].node_count == 35);
  for (const auto& report : reports) {
    CHECK(report.edge_count > report.node_count);  // joins alone guarantee this
  }

  // same base twice: identical reports
  const auto again = sweep(base, {20, 35});
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].apl == again[i].apl);
    CHECK(reports[i].cc == again[i].cc);
    CHECK(reports[i].edge_count == again[i].edge_count);
  }

  CHECK_THROWS_AS(sweep(base, {}), std::invalid_argument);
}

TEST_SUITE_END();
