#include "prosa/routing.hpp"

#include <deque>
#include <stdexcept>

namespace prosa {

const char* trace_event_kind_name(TraceEventKind kind) {
  switch (kind) {
    case TraceEventKind::Forward: return "forward";
    case TraceEventKind::Visit: return "visit";
    case TraceEventKind::Respond: return "respond";
    case TraceEventKind::LinkUpdate: return "link_update";
    case TraceEventKind::DeadEnd: return "dead_end";
    case TraceEventKind::TtlExhausted: return "ttl_exhausted";
  }
  return "?";
}

const char* forward_mode_name(ForwardMode mode) {
  switch (mode) {
    case ForwardMode::BestForwarder: return "best_forwarder";
    case ForwardMode::RandomAcquaintance: return "random_al";
    case ForwardMode::Flood: return "flood";
  }
  return "?";
}

std::vector<std::size_t> QueryTrace::respond_depths() const {
  std::vector<std::size_t> depths;
  for (const auto& event : events) {
    if (event.kind == TraceEventKind::Respond) depths.push_back(event.depth);
  }
  return depths;
}

std::size_t QueryTrace::visit_count() const {
  std::size_t count = 0;
  for (const auto& event : events) {
    if (event.kind == TraceEventKind::Visit) ++count;
  }
  return count;
}

std::optional<ForwarderChoice> select_forwarder(const OverlayNetwork& net, PeerId cur,
                                                const TermVector& query,
                                                const std::vector<bool>& excluded,
                                                Rng& rng) {
  const auto& links = net.neighborhood(cur);

  PeerId best = kNoPeer;
  double best_relevance = -1.0;
  std::vector<PeerId> acquaintances;
  for (const auto& [target, label] : links) {
    if (target < excluded.size() && excluded[target]) continue;
    if (label.type == LinkType::AL) {
      acquaintances.push_back(target);
      continue;
    }
    const double relevance = peer_relevance(label.weight, query);
    // Ascending iteration keeps the lowest peer id on ties.
    if (relevance > best_relevance) {
      best_relevance = relevance;
      best = target;
    }
  }
  if (best != kNoPeer) {
    return ForwarderChoice{best, ForwardMode::BestForwarder};
  }
  if (!acquaintances.empty()) {
    const std::size_t pick = static_cast<std::size_t>(rng.below(acquaintances.size()));
    return ForwarderChoice{acquaintances[pick], ForwardMode::RandomAcquaintance};
  }
  return std::nullopt;
}

std::vector<PeerId> flood_targets(const OverlayNetwork& net, PeerId cur,
                                  const TermVector& query, double threshold,
                                  const std::vector<bool>& excluded) {
  if (threshold < 0.0 || threshold > 1.0) {
    throw std::invalid_argument("flood_targets: threshold must be in [0, 1]");
  }
  std::vector<PeerId> targets;
  for (const auto& [target, label] : net.neighborhood(cur)) {
    if (target < excluded.size() && excluded[target]) continue;
    if (peer_relevance(label.weight, query) > threshold) targets.push_back(target);
  }
  return targets;
}

namespace {

struct WorkItem {
  PeerId cur = kNoPeer;
  PeerId prev = kNoPeer;  // kNoPeer on the first hop
  std::size_t budget = 0;
  std::size_t depth = 0;
};

}  // namespace

QueryTrace exec_query(OverlayNetwork& net, const QueryMessage& message,
                      const RoutingConfig& config, Rng& rng) {
  if (message.source >= net.peer_count()) {
    throw std::out_of_range("exec_query: unknown source peer");
  }
  if (message.required_results == 0) {
    throw std::invalid_argument("exec_query: required_results must be positive");
  }
  if (message.query.empty()) {
    throw std::invalid_argument("exec_query: query must be non-empty");
  }

  QueryTrace trace;
  trace.query_id = message.query_id;
  trace.source = message.source;

  // Peers already reached under this query id; never enqueued twice.
  std::vector<bool> reached(net.peer_count(), false);
  reached[message.source] = true;

  std::deque<WorkItem> queue;
  queue.push_back({message.source, kNoPeer, message.required_results, 0});

  while (!queue.empty()) {
    const WorkItem item = queue.front();
    queue.pop_front();

    if (item.depth >= config.ttl) {
      trace.events.push_back(
          {.kind = TraceEventKind::TtlExhausted, .from = item.cur, .depth = item.depth});
      continue;
    }

    trace.events.push_back(
        {.kind = TraceEventKind::Visit, .from = item.cur, .depth = item.depth});

    if (item.prev != kNoPeer) {
      const LinkTransition change = net.update_link(item.cur, item.prev, message.query);
      trace.events.push_back({.kind = TraceEventKind::LinkUpdate,
                              .from = change.source,
                              .to = change.target,
                              .depth = item.depth,
                              .label_before = change.before,
                              .label_after = change.after});
    }

    const std::vector<DocId> matches = resources_relevance(
        net.documents(item.cur), message.query, item.budget, config.doc_threshold);
    const std::size_t num_results = matches.size();

    if (num_results == 0) {
      const auto choice = select_forwarder(net, item.cur, message.query, reached, rng);
      if (!choice) {
        trace.events.push_back(
            {.kind = TraceEventKind::DeadEnd, .from = item.cur, .depth = item.depth});
        continue;
      }
      reached[choice->target] = true;
      trace.events.push_back({.kind = TraceEventKind::Forward,
                              .from = item.cur,
                              .to = choice->target,
                              .depth = item.depth + 1,
                              .mode = choice->mode,
                              .budget = item.budget});
      queue.push_back({choice->target, item.cur, item.budget, item.depth + 1});
      continue;
    }

    trace.events.push_back({.kind = TraceEventKind::Respond,
                            .from = item.cur,
                            .depth = item.depth,
                            .num_results = num_results,
                            .budget = item.budget});
    trace.total_results += num_results;

    if (item.cur != message.source) {
      const LinkTransition promotion = net.promote_to_fsl(message.source, item.cur);
      trace.events.push_back({.kind = TraceEventKind::LinkUpdate,
                              .from = promotion.source,
                              .to = promotion.target,
                              .depth = item.depth,
                              .label_before = promotion.before,
                              .label_after = promotion.after});
    }

    if (num_results < item.budget) {
      const std::size_t remaining = item.budget - num_results;
      for (PeerId target : flood_targets(net, item.cur, message.query,
                                         config.flood_threshold, reached)) {
        reached[target] = true;
        trace.events.push_back({.kind = TraceEventKind::Forward,
                                .from = item.cur,
                                .to = target,
                                .depth = item.depth + 1,
                                .mode = ForwardMode::Flood,
                                .budget = remaining});
        queue.push_back({target, item.cur, remaining, item.depth + 1});
      }
    }
  }
  return trace;
}

}  // namespace prosa
