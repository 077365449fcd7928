#include "prosa/knowledge.hpp"

#include <algorithm>
#include <stdexcept>

namespace prosa {

Document::Document(DocId id, const TermVector& vector)
    : id_(id), vector_(vector.normalized()) {
  if (vector_.empty()) {
    throw std::invalid_argument("Document: vector must be non-empty");
  }
}

double cosine_relevance(const TermVector& a, const TermVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  const double score = a.dot(b) / (a.norm() * b.norm());
  // Rounding can nudge the ratio just past 1.
  return std::clamp(score, 0.0, 1.0);
}

KnowledgeSummary summarize_knowledge(const std::vector<Document>& docs) {
  KnowledgeSummary summary;
  summary.doc_count = docs.size();
  if (docs.empty()) return summary;
  TermVector sum = docs.front().vector();
  for (std::size_t i = 1; i < docs.size(); ++i) {
    sum = TermVector::weighted_sum(1.0, sum, 1.0, docs[i].vector());
  }
  summary.vector = sum.normalized();
  return summary;
}

TermVector temporary_knowledge(const TermVector& query) {
  if (query.empty()) {
    throw std::invalid_argument("temporary_knowledge: query must be non-empty");
  }
  return query.normalized();
}

TermVector merge_temporary_knowledge(const TermVector& current,
                                     const TermVector& query,
                                     std::uint32_t seen_count) {
  if (current.empty() || query.empty()) {
    throw std::invalid_argument("merge_temporary_knowledge: inputs must be non-empty");
  }
  if (seen_count == 0) {
    throw std::invalid_argument("merge_temporary_knowledge: seen_count must be positive");
  }
  return TermVector::weighted_sum(static_cast<double>(seen_count), current, 1.0, query)
      .normalized();
}

std::vector<DocId> resources_relevance(const std::vector<Document>& docs,
                                       const TermVector& query,
                                       std::size_t required_results,
                                       double doc_threshold) {
  if (query.empty()) {
    throw std::invalid_argument("resources_relevance: query must be non-empty");
  }
  std::vector<std::pair<double, DocId>> scored;
  scored.reserve(docs.size());
  for (const auto& doc : docs) {
    const double rel = cosine_relevance(doc.vector(), query);
    if (rel >= doc_threshold) scored.emplace_back(rel, doc.id());
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  if (scored.size() > required_results) scored.resize(required_results);
  std::vector<DocId> result;
  result.reserve(scored.size());
  for (const auto& [rel, id] : scored) result.push_back(id);
  return result;
}

double peer_relevance(const TermVector& link_weight, const TermVector& query) {
  return cosine_relevance(link_weight, query);
}

double peer_relevance(const KnowledgeSummary& summary, const TermVector& query) {
  return cosine_relevance(summary.vector, query);
}

}  // namespace prosa
