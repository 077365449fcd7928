// Python bindings for the simulator core. TermVectors cross the boundary
// as {term: weight} dicts; everything else maps 1:1 onto the C++ types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "prosa/cli.hpp"
#include "prosa/io.hpp"
#include "prosa/knowledge.hpp"
#include "prosa/metrics.hpp"
#include "prosa/overlay.hpp"
#include "prosa/rng.hpp"
#include "prosa/routing.hpp"
#include "prosa/term_vector.hpp"
#include "prosa/workload.hpp"

namespace py = pybind11;
using namespace prosa;

namespace {

TermVector vector_from_dict(const py::dict& entries) {
  std::vector<TermWeight> weights;
  weights.reserve(entries.size());
  for (const auto& item : entries) {
    weights.push_back({item.first.cast<TermId>(), item.second.cast<double>()});
  }
  return TermVector(std::move(weights));
}

py::dict vector_to_dict(const TermVector& vector) {
  py::dict out;
  for (const auto& e : vector.entries()) out[py::int_(e.term)] = e.weight;
  return out;
}

std::vector<bool> excluded_mask(const OverlayNetwork& net, const py::iterable& peers) {
  std::vector<bool> mask(net.peer_count(), false);
  for (const auto& item : peers) {
    const auto peer = item.cast<PeerId>();
    if (peer < mask.size()) mask[peer] = true;
  }
  return mask;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Social-inspired P2P overlay simulator core";

  // --- knowledge ---------------------------------------------------------
  py::class_<TermVector>(m, "TermVector")
      .def(py::init<>())
      .def(py::init(&vector_from_dict), py::arg("entries"))
      .def("__len__", &TermVector::size)
      .def("empty", &TermVector::empty)
      .def("weight", &TermVector::weight, py::arg("term"))
      .def("norm", &TermVector::norm)
      .def("dot", &TermVector::dot)
      .def("normalized", &TermVector::normalized)
      .def("to_dict", &vector_to_dict)
      .def("__eq__", [](const TermVector& a, const TermVector& b) { return a == b; })
      .def("__repr__", [](const TermVector& v) {
        std::ostringstream out;
        out << "TermVector(" << v.size() << " terms)";
        return out.str();
      });

  py::class_<Document>(m, "Document")
      .def(py::init([](DocId id, const py::dict& entries) {
             return Document(id, vector_from_dict(entries));
           }),
           py::arg("id"), py::arg("entries"))
      .def_property_readonly("id", &Document::id)
      .def_property_readonly("vector", &Document::vector);

  py::class_<KnowledgeSummary>(m, "KnowledgeSummary")
      .def_readonly("vector", &KnowledgeSummary::vector)
      .def_readonly("doc_count", &KnowledgeSummary::doc_count);

  m.def("cosine_relevance", &cosine_relevance, py::arg("a"), py::arg("b"));
  m.def("summarize_knowledge", &summarize_knowledge, py::arg("docs"));
  m.def("temporary_knowledge", &temporary_knowledge, py::arg("query"));
  m.def("merge_temporary_knowledge", &merge_temporary_knowledge, py::arg("current"),
        py::arg("query"), py::arg("seen_count"));
  m.def("resources_relevance", &resources_relevance, py::arg("docs"), py::arg("query"),
        py::arg("required_results"), py::arg("doc_threshold"));
  m.def("peer_relevance",
        py::overload_cast<const TermVector&, const TermVector&>(&peer_relevance),
        py::arg("link_weight"), py::arg("query"));

  // --- overlay -----------------------------------------------------------
  py::enum_<LinkType>(m, "LinkType")
      .value("AL", LinkType::AL)
      .value("TSL", LinkType::TSL)
      .value("FSL", LinkType::FSL);

  py::class_<LinkLabel>(m, "LinkLabel")
      .def_readonly("type", &LinkLabel::type)
      .def_readonly("weight", &LinkLabel::weight)
      .def_readonly("seen_count", &LinkLabel::seen_count);

  py::class_<LinkTransition>(m, "LinkTransition")
      .def_readonly("source", &LinkTransition::source)
      .def_readonly("target", &LinkTransition::target)
      .def_readonly("before", &LinkTransition::before)
      .def_readonly("after", &LinkTransition::after)
      .def_readonly("changed", &LinkTransition::changed);

  py::class_<LinkTypeCounts>(m, "LinkTypeCounts")
      .def_readonly("al", &LinkTypeCounts::al)
      .def_readonly("tsl", &LinkTypeCounts::tsl)
      .def_readonly("fsl", &LinkTypeCounts::fsl)
      .def("total", &LinkTypeCounts::total);

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next_u64", &Rng::next_u64)
      .def("below", &Rng::below, py::arg("bound"))
      .def("unit", &Rng::unit);

  py::class_<OverlayNetwork>(m, "OverlayNetwork")
      .def(py::init<>())
      .def("add_peer", &OverlayNetwork::add_peer, py::arg("docs"))
      .def("join", &OverlayNetwork::join, py::arg("peer"), py::arg("fanout"), py::arg("rng"))
      .def("update_link", &OverlayNetwork::update_link, py::arg("cur"), py::arg("prev"),
           py::arg("query"))
      .def("promote_to_fsl", &OverlayNetwork::promote_to_fsl, py::arg("source"),
           py::arg("target"))
      .def("neighborhood",
           [](const OverlayNetwork& net, PeerId peer) {
             std::vector<std::pair<PeerId, LinkLabel>> out;
             for (const auto& [target, label] : net.neighborhood(peer)) {
               out.emplace_back(target, label);
             }
             return out;
           },
           py::arg("peer"))
      .def("find_link",
           [](const OverlayNetwork& net, PeerId s, PeerId t) -> std::optional<LinkLabel> {
             const LinkLabel* label = net.find_link(s, t);
             if (!label) return std::nullopt;
             return *label;
           },
           py::arg("source"), py::arg("target"))
      .def("has_link", &OverlayNetwork::has_link, py::arg("source"), py::arg("target"))
      .def("peer_count", &OverlayNetwork::peer_count)
      .def("link_count", &OverlayNetwork::link_count)
      .def("link_type_counts", &OverlayNetwork::link_type_counts)
      .def("documents", &OverlayNetwork::documents, py::arg("peer"))
      .def("knowledge", &OverlayNetwork::knowledge, py::arg("peer"))
      .def("check_well_formed", &OverlayNetwork::check_well_formed,
           py::arg("include_knowledge") = true)
      .def("edge_list", [](const OverlayNetwork& net) { return io::edge_list(net); });

  // --- routing -----------------------------------------------------------
  py::class_<RoutingConfig>(m, "RoutingConfig")
      .def(py::init<>())
      .def_readwrite("doc_threshold", &RoutingConfig::doc_threshold)
      .def_readwrite("flood_threshold", &RoutingConfig::flood_threshold)
      .def_readwrite("ttl", &RoutingConfig::ttl);

  py::class_<QueryMessage>(m, "QueryMessage")
      .def(py::init([](std::uint64_t query_id, const py::dict& query, PeerId source,
                       std::size_t required_results) {
             QueryMessage message;
             message.query_id = query_id;
             message.query = vector_from_dict(query);
             message.source = source;
             message.required_results = required_results;
             return message;
           }),
           py::arg("query_id"), py::arg("query"), py::arg("source"),
           py::arg("required_results"))
      .def_readonly("query_id", &QueryMessage::query_id)
      .def_readonly("query", &QueryMessage::query)
      .def_readonly("source", &QueryMessage::source)
      .def_readonly("required_results", &QueryMessage::required_results);

  py::enum_<TraceEventKind>(m, "TraceEventKind")
      .value("Forward", TraceEventKind::Forward)
      .value("Visit", TraceEventKind::Visit)
      .value("Respond", TraceEventKind::Respond)
      .value("LinkUpdate", TraceEventKind::LinkUpdate)
      .value("DeadEnd", TraceEventKind::DeadEnd)
      .value("TtlExhausted", TraceEventKind::TtlExhausted);

  py::enum_<ForwardMode>(m, "ForwardMode")
      .value("BestForwarder", ForwardMode::BestForwarder)
      .value("RandomAcquaintance", ForwardMode::RandomAcquaintance)
      .value("Flood", ForwardMode::Flood);

  py::class_<TraceEvent>(m, "TraceEvent")
      .def_readonly("kind", &TraceEvent::kind)
      .def_readonly("from_peer", &TraceEvent::from)
      .def_readonly("to_peer", &TraceEvent::to)
      .def_readonly("depth", &TraceEvent::depth)
      .def_readonly("mode", &TraceEvent::mode)
      .def_readonly("num_results", &TraceEvent::num_results)
      .def_readonly("budget", &TraceEvent::budget)
      .def_readonly("label_before", &TraceEvent::label_before)
      .def_readonly("label_after", &TraceEvent::label_after);

  py::class_<QueryTrace>(m, "QueryTrace")
      .def_readonly("query_id", &QueryTrace::query_id)
      .def_readonly("source", &QueryTrace::source)
      .def_readonly("events", &QueryTrace::events)
      .def_readonly("total_results", &QueryTrace::total_results)
      .def("respond_depths", &QueryTrace::respond_depths)
      .def("visit_count", &QueryTrace::visit_count);

  m.def("exec_query", &exec_query, py::arg("net"), py::arg("message"), py::arg("config"),
        py::arg("rng"));
  m.def("select_forwarder",
        [](const OverlayNetwork& net, PeerId cur, const TermVector& query,
           const py::iterable& excluded, Rng& rng) -> std::optional<std::pair<PeerId, ForwardMode>> {
          const auto choice =
              select_forwarder(net, cur, query, excluded_mask(net, excluded), rng);
          if (!choice) return std::nullopt;
          return std::make_pair(choice->target, choice->mode);
        },
        py::arg("net"), py::arg("cur"), py::arg("query"), py::arg("excluded"), py::arg("rng"));
  m.def("flood_targets",
        [](const OverlayNetwork& net, PeerId cur, const TermVector& query, double threshold,
           const py::iterable& excluded) {
          return flood_targets(net, cur, query, threshold, excluded_mask(net, excluded));
        },
        py::arg("net"), py::arg("cur"), py::arg("query"), py::arg("threshold"),
        py::arg("excluded"));

  // --- metrics -----------------------------------------------------------
  py::enum_<AplMode>(m, "AplMode")
      .value("AllResponders", AplMode::AllResponders)
      .value("FirstResponder", AplMode::FirstResponder);

  py::enum_<CcUndefinedPolicy>(m, "CcUndefinedPolicy")
      .value("Exclude", CcUndefinedPolicy::Exclude)
      .value("CountAsZero", CcUndefinedPolicy::CountAsZero);

  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("apl", &MetricsReport::apl)
      .def_readonly("apl_windows", &MetricsReport::apl_windows)
      .def_readonly("cc", &MetricsReport::cc)
      .def_readonly("cc_per_node", &MetricsReport::cc_per_node)
      .def_readonly("random_apl", &MetricsReport::random_apl)
      .def_readonly("random_cc", &MetricsReport::random_cc)
      .def_readonly("node_count", &MetricsReport::node_count)
      .def_readonly("edge_count", &MetricsReport::edge_count)
      .def("to_csv", [](const MetricsReport& report) { return io::metrics_csv(report); });

  m.def("apl_from_traces", &apl_from_traces, py::arg("traces"),
        py::arg("mode") = AplMode::AllResponders);
  m.def("windowed_apl", &windowed_apl, py::arg("traces"), py::arg("window") = 300,
        py::arg("step") = 50, py::arg("mode") = AplMode::AllResponders);
  m.def("clustering_coefficient_node", &clustering_coefficient_node, py::arg("net"),
        py::arg("peer"));
  m.def("clustering_coefficient_network", &clustering_coefficient_network, py::arg("net"),
        py::arg("policy") = CcUndefinedPolicy::Exclude);
  m.def("random_graph_apl", &random_graph_apl, py::arg("v"), py::arg("e"));
  m.def("random_graph_cc", &random_graph_cc, py::arg("v"), py::arg("e"));

  // --- workload ----------------------------------------------------------
  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("node_count", &ExperimentConfig::node_count)
      .def_readwrite("queries_per_node", &ExperimentConfig::queries_per_node)
      .def_readwrite("required_results", &ExperimentConfig::required_results)
      .def_readwrite("topic_count", &ExperimentConfig::topic_count)
      .def_readwrite("topics_per_peer", &ExperimentConfig::topics_per_peer)
      .def_readwrite("docs_per_peer_min", &ExperimentConfig::docs_per_peer_min)
      .def_readwrite("docs_per_peer_max", &ExperimentConfig::docs_per_peer_max)
      .def_readwrite("terms_per_topic", &ExperimentConfig::terms_per_topic)
      .def_readwrite("join_fanout", &ExperimentConfig::join_fanout)
      .def_readwrite("doc_threshold", &ExperimentConfig::doc_threshold)
      .def_readwrite("flood_threshold", &ExperimentConfig::flood_threshold)
      .def_readwrite("ttl", &ExperimentConfig::ttl)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("query_locality", &ExperimentConfig::query_locality)
      .def_readwrite("noise_factor", &ExperimentConfig::noise_factor)
      .def_readwrite("random_issuers", &ExperimentConfig::random_issuers)
      .def_readwrite("apl_window", &ExperimentConfig::apl_window)
      .def_readwrite("apl_step", &ExperimentConfig::apl_step)
      .def_readwrite("checkpoint_interval", &ExperimentConfig::checkpoint_interval)
      .def_readwrite("cc_count_undefined_as_zero",
                     &ExperimentConfig::cc_count_undefined_as_zero)
      .def_readwrite("apl_first_responder_only",
                     &ExperimentConfig::apl_first_responder_only)
      .def("validate", &ExperimentConfig::validate);

  py::class_<Checkpoint>(m, "Checkpoint")
      .def_readonly("queries_issued", &Checkpoint::queries_issued)
      .def_readonly("cc", &Checkpoint::cc)
      .def_readonly("edge_count", &Checkpoint::edge_count)
      .def_readonly("link_types", &Checkpoint::link_types);

  py::class_<ExperimentResult>(m, "ExperimentResult")
      .def_readonly("traces", &ExperimentResult::traces)
      .def_readonly("report", &ExperimentResult::report)
      .def_readonly("checkpoints", &ExperimentResult::checkpoints)
      .def_property_readonly("net",
                             [](const ExperimentResult& r) -> const OverlayNetwork& {
                               return r.net;
                             },
                             py::return_value_policy::reference_internal)
      .def("trace_csv", [](const ExperimentResult& r) { return io::trace_csv(r.traces); });

  m.def("run_experiment", &run_experiment, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("sweep", &sweep, py::arg("base"), py::arg("node_counts"),
        py::call_guard<py::gil_scoped_release>());
}
