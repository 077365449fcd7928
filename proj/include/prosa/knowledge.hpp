// Vector-space knowledge model: documents, relevance scoring, peer
// knowledge summaries and temporary knowledge built from queries.
//
// All functions here are pure; none touches shared state.

#pragma once

#include <cstdint>
#include <vector>

#include "prosa/term_vector.hpp"

namespace prosa {

using DocId = std::uint64_t;

// A shared resource. The stored vector is always normalized and non-empty.
class Document {
 public:
  Document(DocId id, const TermVector& vector);

  DocId id() const { return id_; }
  const TermVector& vector() const { return vector_; }

  friend bool operator==(const Document&, const Document&) = default;

 private:
  DocId id_;
  TermVector vector_;
};

// Compact description of what a peer shares: the normalized aggregate of
// its document vectors. doc_count == 0 exactly when the vector is empty.
struct KnowledgeSummary {
  TermVector vector;
  std::size_t doc_count = 0;

  friend bool operator==(const KnowledgeSummary&, const KnowledgeSummary&) = default;
};

// Cosine similarity in [0, 1]; 0.0 when either vector is empty.
double cosine_relevance(const TermVector& a, const TermVector& b);

KnowledgeSummary summarize_knowledge(const std::vector<Document>& docs);

// Temporary knowledge inferred from a single query: its normalized copy.
// Rejects an empty query.
TermVector temporary_knowledge(const TermVector& query);

// Folds one more query into existing temporary knowledge as an incremental
// running mean in direction space: normalize(seen_count*current + query).
// seen_count is the number of queries already folded into current.
TermVector merge_temporary_knowledge(const TermVector& current,
                                     const TermVector& query,
                                     std::uint32_t seen_count);

// Up to required_results document ids whose relevance to the query is at
// least doc_threshold, best first, ties broken by ascending doc id.
std::vector<DocId> resources_relevance(const std::vector<Document>& docs,
                                       const TermVector& query,
                                       std::size_t required_results,
                                       double doc_threshold);

// Relevance of a link weight (or knowledge summary) to a query. An empty
// weight, i.e. an acquaintance link, scores 0.0.
double peer_relevance(const TermVector& link_weight, const TermVector& query);
double peer_relevance(const KnowledgeSummary& summary, const TermVector& query);

}  // namespace prosa
