#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "prosa/io.hpp"

using namespace prosa;

namespace {

MetricsReport sample_report() {
  MetricsReport report;
  report.apl = 2.375;
  report.apl_windows = {{0, 3.25}, {50, 2.5}};
  report.cc = 0.4375;
  report.cc_per_node = {{0, 0.5}, {3, 0.375}};
  report.random_apl = 1.9075;
  report.random_cc = 0.125;
  report.node_count = 100;
  report.edge_count = 1200;
  return report;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("metrics csv round-trips through the loader") {
  const MetricsReport report = sample_report();
  std::istringstream in(io::metrics_csv(report));
  const MetricsReport loaded = io::load_metrics_csv(in);

  CHECK(loaded.apl == report.apl);
  CHECK(loaded.cc == report.cc);
  REQUIRE(loaded.random_apl.has_value());
  CHECK(*loaded.random_apl == *report.random_apl);
  CHECK(loaded.random_cc == report.random_cc);
  CHECK(loaded.node_count == report.node_count);
  CHECK(loaded.edge_count == report.edge_count);
  CHECK(loaded.apl_windows == report.apl_windows);
  CHECK(loaded.cc_per_node == report.cc_per_node);
}

TEST_CASE("metrics csv writes nan for an undefined baseline") {
  MetricsReport report = sample_report();
  report.random_apl.reset();
  const std::string text = io::metrics_csv(report);
  CHECK(text.find("nan") != std::string::npos);
  std::istringstream in(text);
  CHECK(!io::load_metrics_csv(in).random_apl.has_value());
}

TEST_CASE("metrics csv rows have a uniform field count") {
  const std::string text = io::metrics_csv(sample_report());
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
  }
}

TEST_CASE("trace csv") {
  QueryTrace trace;
  trace.query_id = 9;
  trace.source = 0;
  trace.events.push_back({.kind = TraceEventKind::Visit, .from = 0, .depth = 0});
  trace.events.push_back({.kind = TraceEventKind::Forward,
                          .from = 0,
                          .to = 2,
                          .depth = 1,
                          .mode = ForwardMode::RandomAcquaintance,
                          .budget = 3});
  trace.events.push_back({.kind = TraceEventKind::LinkUpdate,
                          .from = 2,
                          .to = 0,
                          .depth = 1,
                          .label_before = std::nullopt,
                          .label_after = LinkType::TSL});
  trace.events.push_back(
      {.kind = TraceEventKind::Respond, .from = 2, .depth = 1, .num_results = 3});

  const std::string text = io::trace_csv({trace});
  std::istringstream in(text);
  const auto rows = io::load_trace_csv(in);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].event == "visit");
  CHECK(rows[0].from == 0);
  CHECK(rows[0].to == kNoPeer);
  CHECK(rows[1].event == "forward");
  CHECK(rows[1].detail == "random_al");
  CHECK(rows[2].event == "link_update");
  CHECK(rows[2].detail == "none->TSL");
  CHECK(rows[3].event == "respond");
  CHECK(rows[3].detail == "3");
  for (const auto& row : rows) CHECK(row.query_id == 9);
}

TEST_CASE("edge list round-trip") {
  OverlayNetwork net;
  for (int i = 0; i < 4; ++i) net.add_peer({});
  Rng rng(3);
  net.join(1, 2, rng);
  net.update_link(2, 0, {{1, 1.0}});
  net.promote_to_fsl(3, 1);

  const std::string text = io::edge_list(net);
  std::istringstream in(text);
  const auto entries = io::load_edge_list(in);
  REQUIRE(entries.size() == net.link_count());
  for (const auto& entry : entries) {
    const LinkLabel* label = net.find_link(entry.source, entry.target);
    REQUIRE(label != nullptr);
    CHECK(label->type == entry.label);
  }
  // ascending (source, target)
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const auto a = std::make_pair(entries[i - 1].source, entries[i - 1].target);
    const auto b = std::make_pair(entries[i].source, entries[i].target);
    CHECK(a < b);
  }
}

TEST_CASE("config file parsing") {
  std::istringstream in(
      "# comment\n"
      "nodes = 50\n"
      "queries_per_node = 7\n"
      "doc_threshold = 0.25\n"
      "random_issuers = true\n"
      "\n"
      "seed = 17   # trailing comment\n");
  const ExperimentConfig config = io::load_config(in);
  CHECK(config.node_count == 50);
  CHECK(config.queries_per_node == 7);
  CHECK(config.doc_threshold == 0.25);
  CHECK(config.random_issuers);
  CHECK(config.seed == 17);
  // untouched fields keep defaults
  CHECK(config.topic_count == ExperimentConfig{}.topic_count);

  std::istringstream unknown("no_such_key = 1\n");
  CHECK_THROWS_WITH_AS(io::load_config(unknown), "config: unknown key 'no_such_key'",
                       std::runtime_error);
  std::istringstream malformed("nodes 50\n");
  CHECK_THROWS_AS(io::load_config(malformed), std::runtime_error);
  std::istringstream bad_value("nodes = fifty\n");
  CHECK_THROWS_AS(io::load_config(bad_value), std::runtime_error);
}

TEST_CASE("config round-trips through its own writer") {
  ExperimentConfig config;
  config.node_count = 123;
  config.flood_threshold = 0.75;
  config.random_issuers = true;
  config.seed = 987654321;
  std::istringstream in(io::config_text(config));
  CHECK(io::load_config(in) == config);
}

TEST_CASE("format_double is stable and precise") {
  CHECK(io::format_double(2.0) == "2");
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(1.0 / 3.0) == io::format_double(1.0 / 3.0));
  const double value = 2.1582734519;
  CHECK(std::stod(io::format_double(value)) == doctest::Approx(value).epsilon(1e-11));
}

TEST_CASE("sweep summary sorts by size") {
  MetricsReport a = sample_report();
  a.node_count = 400;
  MetricsReport b = sample_report();
  b.node_count = 100;
  std::ostringstream out;
  io::write_sweep_summary_csv({{400, a}, {100, b}}, out);
  const std::string text = out.str();
  CHECK(text.find("size,apl,random_apl,cc,random_cc\n") == 0);
  CHECK(text.find("\n100,") < text.find("\n400,"));
}

TEST_CASE("fnv1a64 checksums") {
  CHECK(io::fnv1a64("") == 0xCBF29CE484222325ull);
  CHECK(io::fnv1a64("a") != io::fnv1a64("b"));
  CHECK(io::fnv1a64("prosa") == io::fnv1a64("prosa"));
}

TEST_SUITE_END();
