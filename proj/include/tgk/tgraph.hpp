#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tgk/error.hpp"

namespace tgk {

using NodeId = std::uint32_t;
using Timestamp = std::int64_t;
using Label = std::uint32_t;

struct TemporalEdge {
  NodeId source = 0;
  NodeId target = 0;
  Timestamp time = 0;

  friend auto operator<=>(const TemporalEdge& a, const TemporalEdge& b) {
    if (auto c = a.time <=> b.time; c != 0) return c;
    if (auto c = a.source <=> b.source; c != 0) return c;
    return a.target <=> b.target;
  }
  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

/// Inclusive time window: a span `last - first` is admitted iff it is <= the bound.
class TimeWindow {
 public:
  constexpr TimeWindow() = default;

  static constexpr TimeWindow unbounded() { return TimeWindow{}; }
  static TimeWindow of(Timestamp delta) {
    if (delta < 1) throw InputError("time window must be >= 1, got " + std::to_string(delta));
    TimeWindow w;
    w.delta_ = delta;
    return w;
  }

  constexpr bool is_unbounded() const { return delta_ == kUnbounded; }
  constexpr Timestamp value() const { return delta_; }
  constexpr bool admits(Timestamp span) const { return is_unbounded() || span <= delta_; }

  std::string to_string() const { return is_unbounded() ? "inf" : std::to_string(delta_); }

  friend constexpr bool operator==(TimeWindow, TimeWindow) = default;

 private:
  static constexpr Timestamp kUnbounded = std::numeric_limits<Timestamp>::max();
  Timestamp delta_ = kUnbounded;
};

struct LabelEvent {
  Timestamp time = 0;
  Label label = 0;
  friend bool operator==(const LabelEvent&, const LabelEvent&) = default;
};

/// Piecewise-constant node label over time: the label of the latest event at or
/// before t, or the default label before the first event.
class LabelTimeline {
 public:
  LabelTimeline() = default;
  explicit LabelTimeline(Label default_label, std::vector<LabelEvent> events = {})
      : default_label_(default_label), events_(std::move(events)) {
    for (std::size_t i = 1; i < events_.size(); ++i) {
      if (events_[i].time <= events_[i - 1].time)
        throw InputError("label event times must be strictly increasing");
    }
  }

  Label at(Timestamp t) const {
    auto it = std::upper_bound(events_.begin(), events_.end(), t,
                               [](Timestamp x, const LabelEvent& e) { return x < e.time; });
    return it == events_.begin() ? default_label_ : std::prev(it)->label;
  }

  Label default_label() const { return default_label_; }
  std::span<const LabelEvent> events() const { return events_; }

  Label max_label() const {
    Label m = default_label_;
    for (const auto& e : events_) m = std::max(m, e.label);
    return m;
  }

  friend bool operator==(const LabelTimeline&, const LabelTimeline&) = default;

 private:
  Label default_label_ = 0;
  std::vector<LabelEvent> events_;
};

struct StaticGraph {
  std::size_t num_nodes = 0;
  std::vector<std::pair<NodeId, NodeId>> arcs;  // sorted, unique
};

/// Labeled temporal graph. Immutable once constructed; edges are kept sorted by
/// (time, source, target).
class TemporalGraph {
 public:
  TemporalGraph() = default;

  /// `timelines` may be empty, meaning every node keeps label 0 forever.
  TemporalGraph(std::size_t num_nodes, std::vector<TemporalEdge> edges,
                std::vector<LabelTimeline> timelines = {}, std::size_t alphabet_size = 1)
      : num_nodes_(num_nodes),
        alphabet_size_(alphabet_size),
        edges_(std::move(edges)),
        timelines_(std::move(timelines)) {
    if (alphabet_size_ == 0) throw InputError("alphabet size must be >= 1");
    if (timelines_.empty()) timelines_.resize(num_nodes_);
    if (timelines_.size() != num_nodes_)
      throw InputError("expected one label timeline per node");
    for (const auto& tl : timelines_) {
      if (tl.max_label() >= alphabet_size_) throw InputError("label id exceeds alphabet size");
    }
    degrees_.assign(num_nodes_, 0);
    for (const auto& e : edges_) {
      if (e.source >= num_nodes_ || e.target >= num_nodes_)
        throw InputError("edge endpoint out of range");
      if (e.source == e.target) throw InputError("self-loops are not allowed");
      if (e.time < 0) throw InputError("timestamps must be nonnegative");
      ++degrees_[e.source];
      ++degrees_[e.target];
    }
    std::sort(edges_.begin(), edges_.end());
  }

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t alphabet_size() const { return alphabet_size_; }
  std::span<const TemporalEdge> edges() const { return edges_; }

  const LabelTimeline& timeline(NodeId v) const {
    check_node(v);
    return timelines_[v];
  }
  std::span<const LabelTimeline> timelines() const { return timelines_; }

  Label label_at(NodeId v, Timestamp t) const {
    check_node(v);
    return timelines_[v].at(t);
  }

  /// Number of incident temporal edges, in and out, with multiplicity.
  std::size_t degree(NodeId v) const {
    check_node(v);
    return degrees_[v];
  }

  std::pair<Timestamp, Timestamp> time_span() const {
    if (edges_.empty()) return {0, 0};
    return {edges_.front().time, edges_.back().time};
  }

  /// Same structure with replaced labels.
  TemporalGraph relabeled(std::vector<LabelTimeline> timelines, std::size_t alphabet_size) const {
    return TemporalGraph(num_nodes_, edges_, std::move(timelines), alphabet_size);
  }

 private:
  void check_node(NodeId v) const {
    if (v >= num_nodes_)
      throw InputError("node " + std::to_string(v) + " out of range (num_nodes " +
                       std::to_string(num_nodes_) + ")");
  }

  std::size_t num_nodes_ = 0;
  std::size_t alphabet_size_ = 1;
  std::vector<TemporalEdge> edges_;
  std::vector<LabelTimeline> timelines_;
  std::vector<std::size_t> degrees_;
};

inline Label label_at(const TemporalGraph& g, NodeId v, Timestamp t) { return g.label_at(v, t); }
inline std::size_t degree(const TemporalGraph& g, NodeId v) { return g.degree(v); }

inline StaticGraph static_projection(const TemporalGraph& g) {
  StaticGraph s;
  s.num_nodes = g.num_nodes();
  s.arcs.reserve(g.num_edges());
  for (const auto& e : g.edges()) s.arcs.emplace_back(e.source, e.target);
  std::sort(s.arcs.begin(), s.arcs.end());
  s.arcs.erase(std::unique(s.arcs.begin(), s.arcs.end()), s.arcs.end());
  return s;
}

struct DatasetMeta {
  std::string task;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
};

struct LabeledGraph {
  std::string id;
  TemporalGraph graph;
  int class_label = 0;
};

/// Graphs with class labels; all graphs share one alphabet size.
struct Dataset {
  std::vector<LabeledGraph> graphs;
  DatasetMeta meta;

  std::size_t size() const { return graphs.size(); }
  bool empty() const { return graphs.empty(); }

  std::size_t alphabet_size() const {
    return graphs.empty() ? 1 : graphs.front().graph.alphabet_size();
  }

  void add(std::string id, TemporalGraph g, int class_label) {
    if (!graphs.empty() && g.alphabet_size() != alphabet_size())
      throw LoadError("graph '" + id + "' has alphabet size " + std::to_string(g.alphabet_size()) +
                      ", dataset uses " + std::to_string(alphabet_size()));
    graphs.push_back({std::move(id), std::move(g), class_label});
  }

  std::vector<int> class_labels() const {
    std::vector<int> out;
    out.reserve(graphs.size());
    for (const auto& g : graphs) out.push_back(g.class_label);
    return out;
  }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    out.reserve(graphs.size());
    for (const auto& g : graphs) out.push_back(g.id);
    return out;
  }
};

}  // namespace tgk
