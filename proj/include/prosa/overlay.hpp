// The overlay graph: peers with document stores, directed labeled links
// and the monotone acquaintance -> semantic link upgrade rules.
//
// A network instance is single-writer; independent instances may run in
// parallel, one per experiment.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prosa/knowledge.hpp"
#include "prosa/rng.hpp"
#include "prosa/term_vector.hpp"

namespace prosa {

using PeerId = std::uint32_t;
inline constexpr PeerId kNoPeer = static_cast<PeerId>(-1);

enum class LinkType : std::uint8_t { AL, TSL, FSL };

const char* link_type_name(LinkType type);                 // "AL" / "TSL" / "FSL"
std::optional<LinkType> parse_link_type(const std::string& name);

// Relative strength for monotonicity checks: AL < TSL < FSL.
inline int link_strength(LinkType type) { return static_cast<int>(type); }

// Label on a directed link. AL carries no weight; TSL carries temporary
// knowledge plus the number of queries folded into it; FSL carries a
// snapshot of the target's knowledge summary taken at promotion time.
struct LinkLabel {
  LinkType type = LinkType::AL;
  TermVector weight;
  std::uint32_t seen_count = 0;

  static LinkLabel acquaintance();
  static LinkLabel temporary_semantic(TermVector weight, std::uint32_t seen_count);
  static LinkLabel full_semantic(TermVector weight);

  friend bool operator==(const LinkLabel&, const LinkLabel&) = default;
};

// Outcome of one link mutation; before is empty when no link existed.
struct LinkTransition {
  PeerId source = kNoPeer;
  PeerId target = kNoPeer;
  std::optional<LinkType> before;
  LinkType after = LinkType::AL;
  bool changed = false;
};

struct LinkTypeCounts {
  std::size_t al = 0;
  std::size_t tsl = 0;
  std::size_t fsl = 0;

  std::size_t total() const { return al + tsl + fsl; }
};

class OverlayNetwork {
 public:
  // New peer with the next sequential id; its knowledge summary is
  // computed from the documents once, here. No links yet.
  PeerId add_peer(std::vector<Document> docs);

  // Connects a newcomer to min(fanout, peer_count-1) distinct peers chosen
  // uniformly at random, excluding s, with AL labels. Pairs already linked
  // keep their existing label. Throws when s is the only peer.
  std::vector<PeerId> join(PeerId s, std::size_t fanout, Rng& rng);

  // The receiving peer cur learns about the forwarding peer prev: the link
  // mutated is (cur -> prev). Missing or AL links become TSL built from the
  // query; TSL weights absorb the query as a running mean; FSL links are
  // left untouched.
  LinkTransition update_link(PeerId cur, PeerId prev, const TermVector& query);

  // Creates or overwrites (s -> cur) as FSL with a snapshot of cur's
  // current knowledge vector. Re-promotion refreshes the snapshot.
  LinkTransition promote_to_fsl(PeerId s, PeerId cur);

  // Out-links of s in ascending target id order.
  const std::map<PeerId, LinkLabel>& neighborhood(PeerId s) const;

  const LinkLabel* find_link(PeerId source, PeerId target) const;
  bool has_link(PeerId source, PeerId target) const { return find_link(source, target) != nullptr; }

  std::size_t peer_count() const { return peers_.size(); }
  std::size_t link_count() const { return link_count_; }
  LinkTypeCounts link_type_counts() const { return type_counts_; }

  const std::vector<Document>& documents(PeerId peer) const;
  const KnowledgeSummary& knowledge(PeerId peer) const;

  // When enabled, every mutation is followed by a validity check of the
  // state it touched; violations throw std::logic_error.
  void set_validation(bool enabled) { validate_ = enabled; }

  // Full structural audit: endpoints exist, no self-links, label invariants
  // hold, counters agree. With include_knowledge, also recomputes every
  // peer's summary from its documents. Throws std::logic_error on failure.
  void check_well_formed(bool include_knowledge = true) const;

 private:
  struct PeerState {
    std::vector<Document> documents;
    KnowledgeSummary knowledge;
  };

  void require_peer(PeerId peer, const char* where) const;
  void validate_label(PeerId source, PeerId target, const LinkLabel& label) const;
  void count_type(LinkType type, int delta);
  // Inserts or replaces out_[source][target], keeping counters in step.
  void put_link(PeerId source, PeerId target, LinkLabel label);

  std::vector<PeerState> peers_;
  std::vector<std::map<PeerId, LinkLabel>> out_;
  std::size_t link_count_ = 0;
  LinkTypeCounts type_counts_;
  bool validate_ = false;
};

}  // namespace prosa
