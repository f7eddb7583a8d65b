#pragma once

#include <map>
#include <string>

#include "tgk/error.hpp"
#include "tgk/graphlets.hpp"

namespace tgk {

/// Sparse map from graphlet class to a nonnegative weight. Raw counts are
/// integral; normalized vectors sum to 1 unless empty.
class FeatureVector {
 public:
  using Map = std::map<GraphletCode, double>;

  void add(const GraphletCode& code, double weight) {
    if (weight < 0) throw InputError("feature weights must be nonnegative");
    if (weight == 0) return;
    entries_[code] += weight;
    total_ += weight;
  }

  double at(const GraphletCode& code) const {
    auto it = entries_.find(code);
    return it == entries_.end() ? 0.0 : it->second;
  }

  double total() const { return total_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }
  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  friend bool operator==(const FeatureVector& a, const FeatureVector& b) { return a.entries_ == b.entries_; }

 private:
  Map entries_;
  double total_ = 0;
};

inline FeatureVector filter_family(const FeatureVector& v, GraphletFamily family) {
  FeatureVector out;
  for (const auto& [code, w] : v)
    if (family_of(code) == family) out.add(code, w);
  return out;
}

/// Drops classes whose node count is not in `ks`.
inline FeatureVector filter_node_counts(const FeatureVector& v, NodeCountSet ks) {
  FeatureVector out;
  for (const auto& [code, w] : v)
    if (ks.contains(code.num_slots())) out.add(code, w);
  return out;
}

inline FeatureVector merge(const FeatureVector& a, const FeatureVector& b) {
  FeatureVector out = a;
  for (const auto& [code, w] : b) out.add(code, w);
  return out;
}

}  // namespace tgk
