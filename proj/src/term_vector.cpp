#include "prosa/term_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prosa {

namespace {

std::vector<TermWeight> canonicalize(std::vector<TermWeight> entries) {
  for (const auto& e : entries) {
    if (e.weight < 0.0) {
      throw std::invalid_argument("TermVector: negative weight for term " +
                                  std::to_string(e.term));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const TermWeight& a, const TermWeight& b) { return a.term < b.term; });
  std::vector<TermWeight> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.weight == 0.0) continue;
    if (!merged.empty() && merged.back().term == e.term) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

}  // namespace

TermVector::TermVector(std::vector<TermWeight> entries)
    : entries_(canonicalize(std::move(entries))) {}

TermVector::TermVector(std::initializer_list<TermWeight> entries)
    : entries_(canonicalize(std::vector<TermWeight>(entries))) {}

double TermVector::weight(TermId term) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), term,
      [](const TermWeight& e, TermId t) { return e.term < t; });
  if (it == entries_.end() || it->term != term) return 0.0;
  return it->weight;
}

double TermVector::norm() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.weight * e.weight;
  return std::sqrt(sum);
}

double TermVector::dot(const TermVector& other) const {
  double sum = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->term < b->term) {
      ++a;
    } else if (a->term > b->term) {
      ++b;
    } else {
      sum += a->weight * b->weight;
      ++a;
      ++b;
    }
  }
  return sum;
}

TermVector TermVector::normalized() const {
  if (entries_.empty()) return {};
  return scaled(1.0 / norm());
}

bool TermVector::is_unit(double eps) const {
  return !entries_.empty() && std::abs(norm() - 1.0) <= eps;
}

TermVector TermVector::scaled(double factor) const {
  if (factor <= 0.0) throw std::invalid_argument("TermVector::scaled: factor must be positive");
  TermVector out;
  out.entries_ = entries_;
  for (auto& e : out.entries_) e.weight *= factor;
  return out;
}

TermVector TermVector::weighted_sum(double ca, const TermVector& a, double cb,
                                    const TermVector& b) {
  if (ca <= 0.0 || cb <= 0.0) {
    throw std::invalid_argument("TermVector::weighted_sum: coefficients must be positive");
  }
  TermVector out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->term < ib->term)) {
      out.entries_.push_back({ia->term, ca * ia->weight});
      ++ia;
    } else if (ia == a.entries_.end() || ib->term < ia->term) {
      out.entries_.push_back({ib->term, cb * ib->weight});
      ++ib;
    } else {
      out.entries_.push_back({ia->term, ca * ia->weight + cb * ib->weight});
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool approx_equal(const TermVector& a, const TermVector& b, double eps) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ea = a.entries()[i];
    const auto& eb = b.entries()[i];
    if (ea.term != eb.term || std::abs(ea.weight - eb.weight) > eps) return false;
  }
  return true;
}

}  // namespace prosa
