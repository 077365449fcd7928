#include "prosa/overlay.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace prosa {

const char* link_type_name(LinkType type) {
  switch (type) {
    case LinkType::AL: return "AL";
    case LinkType::TSL: return "TSL";
    case LinkType::FSL: return "FSL";
  }
  return "?";
}

std::optional<LinkType> parse_link_type(const std::string& name) {
  if (name == "AL") return LinkType::AL;
  if (name == "TSL") return LinkType::TSL;
  if (name == "FSL") return LinkType::FSL;
  return std::nullopt;
}

LinkLabel LinkLabel::acquaintance() { return LinkLabel{LinkType::AL, {}, 0}; }

LinkLabel LinkLabel::temporary_semantic(TermVector weight, std::uint32_t seen_count) {
  if (weight.empty()) {
    throw std::invalid_argument("LinkLabel: TSL weight must be non-empty");
  }
  if (seen_count == 0) {
    throw std::invalid_argument("LinkLabel: TSL seen_count must be positive");
  }
  return LinkLabel{LinkType::TSL, std::move(weight), seen_count};
}

LinkLabel LinkLabel::full_semantic(TermVector weight) {
  return LinkLabel{LinkType::FSL, std::move(weight), 0};
}

PeerId OverlayNetwork::add_peer(std::vector<Document> docs) {
  PeerState state;
  state.knowledge = summarize_knowledge(docs);
  state.documents = std::move(docs);
  peers_.push_back(std::move(state));
  out_.emplace_back();
  return static_cast<PeerId>(peers_.size() - 1);
}

std::vector<PeerId> OverlayNetwork::join(PeerId s, std::size_t fanout, Rng& rng) {
  require_peer(s, "join");
  if (peers_.size() < 2) {
    throw std::logic_error("join: network has no peer other than the newcomer");
  }
  std::vector<PeerId> candidates;
  candidates.reserve(peers_.size() - 1);
  for (PeerId p = 0; p < peers_.size(); ++p) {
    if (p != s) candidates.push_back(p);
  }
  const std::size_t picks = std::min(fanout, candidates.size());
  rng.partial_shuffle(candidates, picks);
  candidates.resize(picks);

  for (PeerId target : candidates) {
    // An existing link is never downgraded back to AL.
    if (!has_link(s, target)) put_link(s, target, LinkLabel::acquaintance());
  }
  return candidates;
}

LinkTransition OverlayNetwork::update_link(PeerId cur, PeerId prev, const TermVector& query) {
  require_peer(cur, "update_link");
  require_peer(prev, "update_link");
  if (cur == prev) throw std::invalid_argument("update_link: cur and prev must differ");
  if (query.empty()) throw std::invalid_argument("update_link: query must be non-empty");

  LinkTransition transition;
  transition.source = cur;
  transition.target = prev;

  const LinkLabel* existing = find_link(cur, prev);
  if (existing != nullptr) transition.before = existing->type;

  if (existing == nullptr || existing->type == LinkType::AL) {
    put_link(cur, prev, LinkLabel::temporary_semantic(temporary_knowledge(query), 1));
    transition.after = LinkType::TSL;
    transition.changed = true;
  } else if (existing->type == LinkType::TSL) {
    TermVector merged =
        merge_temporary_knowledge(existing->weight, query, existing->seen_count);
    put_link(cur, prev,
             LinkLabel::temporary_semantic(std::move(merged), existing->seen_count + 1));
    transition.after = LinkType::TSL;
    transition.changed = true;
  } else {
    // Full semantic links already carry the target's whole summary.
    transition.after = LinkType::FSL;
    transition.changed = false;
  }
  return transition;
}

LinkTransition OverlayNetwork::promote_to_fsl(PeerId s, PeerId cur) {
  require_peer(s, "promote_to_fsl");
  require_peer(cur, "promote_to_fsl");
  if (s == cur) throw std::invalid_argument("promote_to_fsl: peers must differ");

  LinkTransition transition;
  transition.source = s;
  transition.target = cur;
  if (const LinkLabel* existing = find_link(s, cur)) transition.before = existing->type;
  put_link(s, cur, LinkLabel::full_semantic(peers_[cur].knowledge.vector));
  transition.after = LinkType::FSL;
  transition.changed = true;
  return transition;
}

const std::map<PeerId, LinkLabel>& OverlayNetwork::neighborhood(PeerId s) const {
  require_peer(s, "neighborhood");
  return out_[s];
}

const LinkLabel* OverlayNetwork::find_link(PeerId source, PeerId target) const {
  if (source >= out_.size()) return nullptr;
  auto it = out_[source].find(target);
  return it == out_[source].end() ? nullptr : &it->second;
}

const std::vector<Document>& OverlayNetwork::documents(PeerId peer) const {
  require_peer(peer, "documents");
  return peers_[peer].documents;
}

const KnowledgeSummary& OverlayNetwork::knowledge(PeerId peer) const {
  require_peer(peer, "knowledge");
  return peers_[peer].knowledge;
}

void OverlayNetwork::require_peer(PeerId peer, const char* where) const {
  if (peer >= peers_.size()) {
    throw std::out_of_range(std::string(where) + ": unknown peer " + std::to_string(peer));
  }
}

void OverlayNetwork::validate_label(PeerId source, PeerId target,
                                    const LinkLabel& label) const {
  if (source == target) throw std::logic_error("link invariant: self-link");
  if (source >= peers_.size() || target >= peers_.size()) {
    throw std::logic_error("link invariant: endpoint does not exist");
  }
  switch (label.type) {
    case LinkType::AL:
      if (!label.weight.empty() || label.seen_count != 0) {
        throw std::logic_error("link invariant: AL must carry no weight");
      }
      break;
    case LinkType::TSL:
      if (label.weight.empty() || !label.weight.is_unit() || label.seen_count == 0) {
        throw std::logic_error("link invariant: TSL weight must be normalized, seen_count >= 1");
      }
      break;
    case LinkType::FSL:
      if (!label.weight.empty() && !label.weight.is_unit()) {
        throw std::logic_error("link invariant: FSL weight must be normalized");
      }
      break;
  }
}

void OverlayNetwork::count_type(LinkType type, int delta) {
  switch (type) {
    case LinkType::AL: type_counts_.al += delta; break;
    case LinkType::TSL: type_counts_.tsl += delta; break;
    case LinkType::FSL: type_counts_.fsl += delta; break;
  }
}

void OverlayNetwork::put_link(PeerId source, PeerId target, LinkLabel label) {
  if (validate_) validate_label(source, target, label);
  const LinkType new_type = label.type;
  auto it = out_[source].find(target);
  if (it == out_[source].end()) {
    out_[source].emplace(target, std::move(label));
    ++link_count_;
  } else {
    count_type(it->second.type, -1);
    it->second = std::move(label);
  }
  count_type(new_type, +1);
}

void OverlayNetwork::check_well_formed(bool include_knowledge) const {
  if (out_.size() != peers_.size()) {
    throw std::logic_error("well-formed: adjacency/peer table size mismatch");
  }
  std::size_t links_seen = 0;
  LinkTypeCounts counts;
  for (PeerId source = 0; source < out_.size(); ++source) {
    for (const auto& [target, label] : out_[source]) {
      validate_label(source, target, label);
      ++links_seen;
      switch (label.type) {
        case LinkType::AL: ++counts.al; break;
        case LinkType::TSL: ++counts.tsl; break;
        case LinkType::FSL: ++counts.fsl; break;
      }
    }
  }
  if (links_seen != link_count_) {
    throw std::logic_error("well-formed: link count drifted");
  }
  if (counts.al != type_counts_.al || counts.tsl != type_counts_.tsl ||
      counts.fsl != type_counts_.fsl) {
    throw std::logic_error("well-formed: label type counters drifted");
  }
  if (include_knowledge) {
    for (const auto& peer : peers_) {
      const KnowledgeSummary recomputed = summarize_knowledge(peer.documents);
      if (recomputed.doc_count != peer.knowledge.doc_count ||
          !approx_equal(recomputed.vector, peer.knowledge.vector, 1e-12)) {
        throw std::logic_error("well-formed: knowledge summary out of date");
      }
    }
  }
}

}  // namespace prosa
