// Query execution: best-forwarder routing over semantic links, random
// walks over acquaintances, semantic flooding of partially satisfied
// queries, and full trace capture for path-length measurement.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prosa/overlay.hpp"
#include "prosa/rng.hpp"

namespace prosa {

struct RoutingConfig {
  // Minimum document relevance for a local match.
  double doc_threshold = 0.5;
  // Strict lower bound on link relevance for semantic flooding.
  double flood_threshold = 0.5;
  // Items at this hop depth are dropped with a TtlExhausted event.
  // Deduplication already bounds every query; this is a safety valve.
  std::size_t ttl = 64;
};

struct QueryMessage {
  std::uint64_t query_id = 0;
  TermVector query;
  PeerId source = kNoPeer;
  std::size_t required_results = 1;
};

enum class TraceEventKind : std::uint8_t {
  Forward,
  Visit,
  Respond,
  LinkUpdate,
  DeadEnd,
  TtlExhausted,
};

enum class ForwardMode : std::uint8_t {
  BestForwarder,        // best semantic link
  RandomAcquaintance,   // random AL pick, no semantic link available
  Flood,                // semantic flooding of a partially satisfied query
};

const char* trace_event_kind_name(TraceEventKind kind);
const char* forward_mode_name(ForwardMode mode);

struct TraceEvent {
  TraceEventKind kind = TraceEventKind::Visit;
  PeerId from = kNoPeer;  // acting peer; link source for LinkUpdate
  PeerId to = kNoPeer;    // recipient / link target, when applicable
  std::size_t depth = 0;
  ForwardMode mode = ForwardMode::BestForwarder;  // Forward only
  std::size_t num_results = 0;                    // Respond only
  std::size_t budget = 0;       // Forward: carried budget; Respond: budget on arrival
  std::optional<LinkType> label_before;           // LinkUpdate only
  LinkType label_after = LinkType::AL;            // LinkUpdate only
};

// Complete forwarding record of one query execution.
struct QueryTrace {
  std::uint64_t query_id = 0;
  PeerId source = kNoPeer;
  std::vector<TraceEvent> events;
  std::size_t total_results = 0;

  std::vector<std::size_t> respond_depths() const;
  std::size_t visit_count() const;
};

struct ForwarderChoice {
  PeerId target = kNoPeer;
  ForwardMode mode = ForwardMode::BestForwarder;
};

// Among non-excluded targets of semantic out-links, the one whose weight is
// most relevant to the query (ties to the lowest peer id). With no semantic
// candidate, a uniformly random non-excluded acquaintance. Empty when every
// candidate is excluded or absent.
std::optional<ForwarderChoice> select_forwarder(const OverlayNetwork& net, PeerId cur,
                                                const TermVector& query,
                                                const std::vector<bool>& excluded,
                                                Rng& rng);

// Non-excluded out-neighbors whose link relevance is strictly above the
// threshold, in ascending peer id order.
std::vector<PeerId> flood_targets(const OverlayNetwork& net, PeerId cur,
                                  const TermVector& query, double threshold,
                                  const std::vector<bool>& excluded);

// Runs one query to completion, mutating link state along the way, and
// returns the full trace. Deterministic for a fixed rng state.
QueryTrace exec_query(OverlayNetwork& net, const QueryMessage& message,
                      const RoutingConfig& config, Rng& rng);

}  // namespace prosa
