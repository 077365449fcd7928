// Sparse non-negative term vector: the common currency for queries,
// peer knowledge summaries and link weights.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace prosa {

using TermId = std::uint32_t;

struct TermWeight {
  TermId term = 0;
  double weight = 0.0;

  friend bool operator==(const TermWeight&, const TermWeight&) = default;
};

// Entries are kept sorted by term id, unique, with strictly positive
// weights; zero-weight terms are simply absent.
class TermVector {
 public:
  TermVector() = default;

  // Sorts, merges duplicate terms and drops zero weights.
  // Negative weights are rejected.
  explicit TermVector(std::vector<TermWeight> entries);
  TermVector(std::initializer_list<TermWeight> entries);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<TermWeight>& entries() const { return entries_; }

  // 0.0 when the term is absent.
  double weight(TermId term) const;

  double norm() const;
  double dot(const TermVector& other) const;

  // Euclidean-normalized copy; an empty vector stays empty.
  TermVector normalized() const;
  bool is_unit(double eps = 1e-9) const;

  // Copy with every weight multiplied by factor (> 0).
  TermVector scaled(double factor) const;

  friend bool operator==(const TermVector&, const TermVector&) = default;

  // ca*a + cb*b over the union of terms. Coefficients must be positive.
  static TermVector weighted_sum(double ca, const TermVector& a, double cb,
                                 const TermVector& b);

 private:
  std::vector<TermWeight> entries_;
};

// Entry-wise comparison within eps.
bool approx_equal(const TermVector& a, const TermVector& b, double eps = 1e-9);

}  // namespace prosa
