#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tgk/error.hpp"
#include "tgk/feature_vector.hpp"
#include "tgk/graphlets.hpp"
#include "tgk/sequence_dp.hpp"
#include "tgk/tgraph.hpp"

namespace tgk {

struct CountConfig {
  TimeWindow delta = TimeWindow::unbounded();
  NodeCountSet node_counts = {3};
  std::size_t ell = 2;
  bool labeled = true;
};

namespace detail {

/// Time-sorted incident edge lists in CSR form.
struct Incidence {
  std::vector<std::size_t> offsets;  // num_nodes + 1
  std::vector<std::uint32_t> edges;  // edge indices into TemporalGraph::edges()

  explicit Incidence(const TemporalGraph& g) : offsets(g.num_nodes() + 1, 0) {
    const auto es = g.edges();
    for (const auto& e : es) {
      ++offsets[e.source + 1];
      ++offsets[e.target + 1];
    }
    for (std::size_t v = 0; v < g.num_nodes(); ++v) offsets[v + 1] += offsets[v];
    edges.resize(offsets.back());
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    // Edge indices are visited in time order, so every list comes out sorted.
    for (std::uint32_t i = 0; i < es.size(); ++i) {
      edges[fill[es[i].source]++] = i;
      edges[fill[es[i].target]++] = i;
    }
  }

  std::span<const std::uint32_t> of(NodeId v) const {
    return std::span<const std::uint32_t>(edges).subspan(offsets[v], offsets[v + 1] - offsets[v]);
  }
};

inline std::vector<std::uint32_t> edge_label_codes(const TemporalGraph& g, bool labeled) {
  std::vector<std::uint32_t> out(g.num_edges(), 0);
  if (!labeled) return out;
  const auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) out[i] = edge_label_code(es[i], g);
  return out;
}

/// Builds the code of a graphlet given as local (src, dst) node pairs plus
/// composite edge labels.
inline GraphletCode code_from_local(std::span<const std::pair<int, int>> arcs,
                                    std::span<const std::uint32_t> edge_labels, std::size_t alphabet,
                                    bool labeled) {
  GraphletCode c;
  c.pattern = canonical_pattern<int>(arcs);
  if (labeled) {
    const auto L = static_cast<std::uint32_t>(alphabet);
    for (auto lam : edge_labels) {
      c.labels.push_back(lam / L);
      c.labels.push_back(lam % L);
    }
  }
  return c;
}

/// Incident edges of one center as (time, neighbor, type) with
/// type = direction * L^2 + composite label (direction 0 = out of the center).
struct CenterEdge {
  Timestamp time;
  NodeId neighbor;
  std::uint32_t local;  // dense neighbor index within this center
  std::uint32_t type;
};

class CenterScan {
 public:
  CenterScan(const TemporalGraph& g, bool labeled)
      : g_(g), inc_(g), labels_(edge_label_codes(g, labeled)), local_of_(g.num_nodes(), kNone) {}

  /// Fills `out` with the center's incident edges; returns the neighbor count.
  std::size_t load(NodeId c, std::vector<CenterEdge>& out) {
    const auto L2 = static_cast<std::uint32_t>(g_.alphabet_size() * g_.alphabet_size());
    const auto es = g_.edges();
    out.clear();
    touched_.clear();
    for (auto idx : inc_.of(c)) {
      const auto& e = es[idx];
      const bool out_edge = e.source == c;
      const NodeId nbr = out_edge ? e.target : e.source;
      if (local_of_[nbr] == kNone) {
        local_of_[nbr] = static_cast<std::uint32_t>(touched_.size());
        touched_.push_back(nbr);
      }
      out.push_back({e.time, nbr, local_of_[nbr], (out_edge ? 0u : 1u) * L2 + labels_[idx]});
    }
    for (auto n : touched_) local_of_[n] = kNone;
    return touched_.size();
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};
  const TemporalGraph& g_;
  Incidence inc_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::uint32_t> local_of_;
  std::vector<NodeId> touched_;
};

inline std::pair<int, int> center_arc(std::uint32_t type, std::uint32_t L2, int nbr) {
  return type / L2 == 0 ? std::pair{0, nbr} : std::pair{nbr, 0};
}

/// Code of the wedge whose earlier and later edges at the center have the
/// given center types.
inline GraphletCode wedge_code(std::uint32_t first, std::uint32_t second, std::size_t alphabet, bool labeled) {
  const auto L2 = static_cast<std::uint32_t>(alphabet * alphabet);
  const std::pair<int, int> arcs[2] = {center_arc(first, L2, 1), center_arc(second, L2, 2)};
  const std::uint32_t lams[2] = {first % L2, second % L2};
  return code_from_local(arcs, lams, alphabet, labeled);
}

/// Undirected static adjacency plus, per unordered node pair, its temporal
/// edge indices in time order.
struct PairIndex {
  std::vector<std::vector<NodeId>> adj;  // sorted, unique
  std::vector<std::pair<std::uint64_t, std::uint32_t>> by_pair;

  explicit PairIndex(const TemporalGraph& g) : adj(g.num_nodes()) {
    const auto es = g.edges();
    by_pair.reserve(es.size());
    for (std::uint32_t i = 0; i < es.size(); ++i) {
      by_pair.emplace_back(key(es[i].source, es[i].target), i);
      adj[es[i].source].push_back(es[i].target);
      adj[es[i].target].push_back(es[i].source);
    }
    std::sort(by_pair.begin(), by_pair.end());
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  static std::uint64_t key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
  }

  bool adjacent(NodeId a, NodeId b) const { return std::binary_search(adj[a].begin(), adj[a].end(), b); }

  std::span<const std::pair<std::uint64_t, std::uint32_t>> edges_between(NodeId a, NodeId b) const {
    const auto k = key(a, b);
    auto lo = std::lower_bound(by_pair.begin(), by_pair.end(), std::pair{k, std::uint32_t{0}});
    auto hi = lo;
    while (hi != by_pair.end() && hi->first == k) ++hi;
    return {lo, hi};
  }
};

/// Runs the sequence DP over the induced edges of node sets, with symbols
/// local-arc * L^2 + composite label. Each completed sequence is accepted only
/// if it touches every node of its set, so each graphlet is attributed to
/// exactly its own node set.
class NodeSetCounter {
 public:
  NodeSetCounter(const TemporalGraph& g, std::size_t k, std::size_t ell, TimeWindow window, bool labeled,
                 bool require_triangle = false)
      : g_(g),
        k_(k),
        labeled_(labeled),
        L2_(static_cast<std::uint32_t>(g.alphabet_size() * g.alphabet_size())),
        labels_(edge_label_codes(g, labeled)),
        counter_(k * (k - 1) * L2_, ell, window) {
    std::vector<std::uint8_t> mask(counter_.results().size());
    for (std::uint64_t idx = 0; idx < mask.size(); ++idx) {
      auto seq = counter_.decode(idx);
      std::uint32_t touched = 0;
      std::vector<std::pair<int, int>> pairs;
      for (auto s : seq) {
        auto [a, b] = arc_nodes(s / L2_);
        touched |= (1u << a) | (1u << b);
        pairs.emplace_back(std::min(a, b), std::max(a, b));
      }
      bool ok = touched == (1u << k) - 1;
      if (require_triangle) {
        std::sort(pairs.begin(), pairs.end());
        ok = ok && std::unique(pairs.begin(), pairs.end()) - pairs.begin() == 3;
      }
      mask[idx] = ok ? 1 : 0;
    }
    counter_.set_accept_mask(std::move(mask));
  }

  /// `nodes` sorted ascending; `edge_lists` hold sorted edge indices.
  void count(std::span<const NodeId> nodes,
             std::span<const std::span<const std::pair<std::uint64_t, std::uint32_t>>> edge_lists) {
    merged_.clear();
    for (auto list : edge_lists)
      for (const auto& pe : list) merged_.push_back(pe.second);
    std::sort(merged_.begin(), merged_.end());
    sigma_.clear();
    const auto es = g_.edges();
    for (auto idx : merged_) {
      const auto& e = es[idx];
      const int a = static_cast<int>(std::find(nodes.begin(), nodes.end(), e.source) - nodes.begin());
      const int b = static_cast<int>(std::find(nodes.begin(), nodes.end(), e.target) - nodes.begin());
      sigma_.push_back({e.time, arc_id(a, b) * L2_ + labels_[idx]});
    }
    counter_.run(sigma_);
  }

  void add_to(FeatureVector& fv) const {
    auto res = counter_.results();
    for (std::uint64_t idx = 0; idx < res.size(); ++idx) {
      if (res[idx] == 0) continue;
      auto seq = counter_.decode(idx);
      std::vector<std::pair<int, int>> arcs;
      std::vector<std::uint32_t> lams;
      for (auto s : seq) {
        arcs.push_back(arc_nodes(s / L2_));
        lams.push_back(s % L2_);
      }
      fv.add(code_from_local(arcs, lams, g_.alphabet_size(), labeled_), static_cast<double>(res[idx]));
    }
  }

 private:
  std::uint32_t arc_id(int a, int b) const {
    return static_cast<std::uint32_t>(a * static_cast<int>(k_ - 1) + (b > a ? b - 1 : b));
  }
  std::pair<int, int> arc_nodes(std::uint32_t arc) const {
    const int a = static_cast<int>(arc / (k_ - 1));
    int b = static_cast<int>(arc % (k_ - 1));
    if (b >= a) ++b;
    return {a, b};
  }

  const TemporalGraph& g_;
  std::size_t k_;
  bool labeled_;
  std::uint32_t L2_;
  std::vector<std::uint32_t> labels_;
  SequenceCounter counter_;
  std::vector<std::uint32_t> merged_;
  std::vector<SequenceEvent> sigma_;
};

}  // namespace detail

/// Direct transcription of the graphlet definition; the reference oracle.
/// Refuses graphs with more than `max_edges` temporal edges.
inline FeatureVector count_brute_force(const TemporalGraph& g, const CountConfig& cfg,
                                       std::size_t max_edges = 64) {
  if (g.num_edges() > max_edges)
    throw SizeError("brute force limited to " + std::to_string(max_edges) + " edges, graph has " +
                    std::to_string(g.num_edges()));
  if (cfg.ell == 0) throw InputError("ell must be >= 1");
  const auto es = g.edges();
  std::map<GraphletCode, std::uint64_t> counts;
  std::vector<TemporalEdge> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == cfg.ell) {
      std::vector<std::pair<NodeId, NodeId>> arcs;
      for (const auto& e : chosen) arcs.emplace_back(e.source, e.target);
      auto pattern = canonical_pattern<NodeId>(arcs);
      GraphletCode probe{pattern, {}};
      const auto k = probe.num_slots();
      if (!cfg.node_counts.contains(k) || !detail::slots_connected(pattern, k)) return;
      ++counts[canonical_code(chosen, g, cfg.labeled)];
      return;
    }
    for (std::size_t i = start; i < es.size(); ++i) {
      if (!chosen.empty()) {
        if (es[i].time <= chosen.back().time) continue;
        if (!cfg.delta.admits(es[i].time - chosen.front().time)) break;
      }
      chosen.push_back(es[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  FeatureVector fv;
  for (const auto& [code, n] : counts) fv.add(code, static_cast<double>(n));
  return fv;
}

/// Exact counts of all 3-node, 2-edge classes.
///
/// Per center v, a sliding window over v's incident edges keeps counts per
/// edge type and per (neighbor, type); an entering edge pairs with every
/// strictly earlier window edge whose other endpoint differs from its own.
inline FeatureVector count_wedges(const TemporalGraph& g, TimeWindow delta, bool labeled) {
  const auto L2 = static_cast<std::uint32_t>(g.alphabet_size() * g.alphabet_size());
  const std::uint32_t T = 2 * L2;
  detail::CenterScan scan(g, labeled);
  std::vector<detail::CenterEdge> inc;
  std::vector<std::uint64_t> tally(std::size_t{T} * T, 0);
  std::vector<std::uint64_t> c1(T), c1n;

  for (NodeId c = 0; c < g.num_nodes(); ++c) {
    const auto k = scan.load(c, inc);
    if (inc.size() < 2) continue;
    std::fill(c1.begin(), c1.end(), 0);
    c1n.assign(k * T, 0);
    std::size_t lo = 0, i = 0;
    while (i < inc.size()) {
      const Timestamp t = inc[i].time;
      std::size_t hi = i;
      while (hi < inc.size() && inc[hi].time == t) ++hi;
      for (; lo < i && !delta.admits(t - inc[lo].time); ++lo) {
        --c1[inc[lo].type];
        --c1n[inc[lo].local * T + inc[lo].type];
      }
      for (std::size_t j = i; j < hi; ++j) {
        const auto* same = &c1n[inc[j].local * T];
        for (std::uint32_t t1 = 0; t1 < T; ++t1) tally[t1 * T + inc[j].type] += c1[t1] - same[t1];
      }
      for (std::size_t j = i; j < hi; ++j) {
        ++c1[inc[j].type];
        ++c1n[inc[j].local * T + inc[j].type];
      }
      i = hi;
    }
  }

  FeatureVector fv;
  for (std::uint32_t t1 = 0; t1 < T; ++t1) {
    for (std::uint32_t t2 = 0; t2 < T; ++t2) {
      const auto n = tally[t1 * T + t2];
      if (n != 0) fv.add(detail::wedge_code(t1, t2, g.alphabet_size(), labeled), static_cast<double>(n));
    }
  }
  return fv;
}

/// Exact counts of all 3-node, 3-edge star classes (every edge touches one
/// center, exactly two distinct neighbors).
///
/// For each center, a sliding window over its incident edges maintains ordered
/// pair counts so that an entering edge e3 with neighbor X can be matched to
/// earlier pairs (e1, e2) in the three neighbor patterns AAB, ABA and ABB
/// (A != B, X plays the last letter). Pair counts whose first or second edge
/// has neighbor X are derived from insertion-count snapshots taken per time
/// group, which keeps every update O(types) instead of O(neighbors * types).
/// All arithmetic is modulo 2^64; every reported value is a true count.
inline FeatureVector count_stars(const TemporalGraph& g, TimeWindow delta, bool labeled) {
  const auto L2 = static_cast<std::uint32_t>(g.alphabet_size() * g.alphabet_size());
  const std::uint32_t T = 2 * L2;
  const std::size_t T2 = std::size_t{T} * T;
  enum { kAAB = 0, kABA = 1, kABB = 2 };
  detail::CenterScan scan(g, labeled);
  std::vector<detail::CenterEdge> inc;
  std::vector<std::uint64_t> tally(3 * T2 * T, 0);

  std::vector<std::uint64_t> ins(T), rem(T), psame(T2);
  std::vector<std::uint64_t> c1n, psame_n, s1, s2, snaps;
  std::vector<std::size_t> group_start;

  for (NodeId c = 0; c < g.num_nodes(); ++c) {
    const auto k = scan.load(c, inc);
    if (inc.size() < 3 || k < 2) continue;
    std::fill(ins.begin(), ins.end(), 0);
    std::fill(rem.begin(), rem.end(), 0);
    std::fill(psame.begin(), psame.end(), 0);
    c1n.assign(k * T, 0);
    psame_n.assign(k * T2, 0);
    s1.assign(k * T2, 0);
    s2.assign(k * T2, 0);
    snaps.clear();  // snaps[g*T ..] = ins before group g
    group_start.clear();

    std::size_t lo_group = 0;  // oldest group still in the window
    std::size_t i = 0;
    while (i < inc.size()) {
      const Timestamp t = inc[i].time;
      std::size_t hi = i;
      while (hi < inc.size() && inc[hi].time == t) ++hi;
      const std::size_t gi = group_start.size();
      group_start.push_back(i);
      snaps.insert(snaps.end(), ins.begin(), ins.end());

      // Expire groups outside the window.
      while (lo_group < gi && !delta.admits(t - inc[group_start[lo_group]].time)) {
        const std::size_t b = group_start[lo_group];
        const std::size_t e = group_start[lo_group + 1];
        for (std::size_t j = b; j < e; ++j) {
          --c1n[inc[j].local * T + inc[j].type];
          ++rem[inc[j].type];
        }
        const auto* before = &snaps[lo_group * T];
        const auto* after = &snaps[(lo_group + 1) * T];
        for (std::size_t j = b; j < e; ++j) {
          const auto x = inc[j].local;
          const auto ty = inc[j].type;
          const auto* cx = &c1n[x * T];
          for (std::uint32_t t2 = 0; t2 < T; ++t2) {
            psame[ty * T + t2] -= cx[t2];
            psame_n[x * T2 + ty * T + t2] -= cx[t2];
            s1[x * T2 + ty * T + t2] -= after[t2];
            s2[x * T2 + t2 * T + ty] -= before[t2];
          }
        }
        ++lo_group;
      }

      // Complete triples ending in this group.
      for (std::size_t j = i; j < hi; ++j) {
        const auto x = inc[j].local;
        const auto t3 = inc[j].type;
        const auto* cx = &c1n[x * T];
        const auto* pn = &psame_n[x * T2];
        const auto* a1 = &s1[x * T2];
        const auto* a2 = &s2[x * T2];
        for (std::uint32_t t1 = 0; t1 < T; ++t1) {
          for (std::uint32_t t2 = 0; t2 < T; ++t2) {
            const std::size_t p = t1 * T + t2;
            const std::uint64_t first_x = cx[t1] * ins[t2] - a1[p];
            const std::uint64_t second_x = a2[p] - cx[t2] * rem[t1];
            tally[(kAAB * T2 + p) * T + t3] += psame[p] - pn[p];
            tally[(kABA * T2 + p) * T + t3] += first_x - pn[p];
            tally[(kABB * T2 + p) * T + t3] += second_x - pn[p];
          }
        }
      }

      // Insert the group.
      for (std::size_t j = i; j < hi; ++j) {
        const auto x = inc[j].local;
        const auto ty = inc[j].type;
        const auto* cx = &c1n[x * T];
        for (std::uint32_t t1 = 0; t1 < T; ++t1) {
          psame[t1 * T + ty] += cx[t1];
          psame_n[x * T2 + t1 * T + ty] += cx[t1];
        }
      }
      for (std::size_t j = i; j < hi; ++j) {
        const auto x = inc[j].local;
        const auto ty = inc[j].type;
        for (std::uint32_t t1 = 0; t1 < T; ++t1) s2[x * T2 + t1 * T + ty] += ins[t1];
      }
      for (std::size_t j = i; j < hi; ++j) {
        ++c1n[inc[j].local * T + inc[j].type];
        ++ins[inc[j].type];
      }
      for (std::size_t j = i; j < hi; ++j) {
        const auto x = inc[j].local;
        const auto ty = inc[j].type;
        for (std::uint32_t t2 = 0; t2 < T; ++t2) s1[x * T2 + ty * T + t2] += ins[t2];
      }
      i = hi;
    }
  }

  static constexpr int kNeighbors[3][3] = {{1, 1, 2}, {1, 2, 1}, {1, 2, 2}};
  FeatureVector fv;
  for (int pat = 0; pat < 3; ++pat) {
    for (std::uint32_t t1 = 0; t1 < T; ++t1) {
      for (std::uint32_t t2 = 0; t2 < T; ++t2) {
        for (std::uint32_t t3 = 0; t3 < T; ++t3) {
          const auto n = tally[(pat * T2 + t1 * T + t2) * T + t3];
          if (n == 0) continue;
          const std::pair<int, int> arcs[3] = {detail::center_arc(t1, L2, kNeighbors[pat][0]),
                                               detail::center_arc(t2, L2, kNeighbors[pat][1]),
                                               detail::center_arc(t3, L2, kNeighbors[pat][2])};
          const std::uint32_t lams[3] = {t1 % L2, t2 % L2, t3 % L2};
          fv.add(detail::code_from_local(arcs, lams, g.alphabet_size(), labeled), static_cast<double>(n));
        }
      }
    }
  }
  return fv;
}

/// Calls `fn(a, b, c)` once per undirected static triangle, a < b < c.
template <typename Fn>
void for_each_static_triangle(const detail::PairIndex& idx, Fn&& fn) {
  const auto n = idx.adj.size();
  for (NodeId a = 0; a < n; ++a) {
    const auto& na = idx.adj[a];
    for (auto itb = std::upper_bound(na.begin(), na.end(), a); itb != na.end(); ++itb) {
      const NodeId b = *itb;
      const auto& nb = idx.adj[b];
      // Common neighbors c > b of a and b.
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      while (ia != na.end() && ib != nb.end()) {
        if (*ia < *ib) {
          ++ia;
        } else if (*ib < *ia) {
          ++ib;
        } else {
          fn(a, b, *ia);
          ++ia;
          ++ib;
        }
      }
    }
  }
}

/// Exact counts of all 3-node, 3-edge triangle classes. Each static triangle's
/// temporal edges are merged chronologically and fed to the sequence DP, which
/// keeps only sequences covering all three node pairs.
inline FeatureVector count_triangles(const TemporalGraph& g, TimeWindow delta, bool labeled) {
  detail::PairIndex idx(g);
  detail::NodeSetCounter counter(g, 3, 3, delta, labeled, /*require_triangle=*/true);
  for_each_static_triangle(idx, [&](NodeId a, NodeId b, NodeId c) {
    const NodeId nodes[3] = {a, b, c};
    const std::span<const std::pair<std::uint64_t, std::uint32_t>> lists[3] = {
        idx.edges_between(a, b), idx.edges_between(a, c), idx.edges_between(b, c)};
    counter.count(nodes, lists);
  });
  FeatureVector fv;
  counter.add_to(fv);
  return fv;
}

/// General counter for node counts in {2, 3} and any ell >= 1 the DP table
/// allows: enumerate connected static node sets, collect their induced
/// temporal edges, and count sequences touching the whole set.
inline FeatureVector count_general(const TemporalGraph& g, const CountConfig& cfg) {
  if (cfg.node_counts.empty() || !cfg.node_counts.subset_of(NodeCountSet{2, 3}))
    throw UnsupportedError("general counter supports node counts {2,3}, got {" + cfg.node_counts.to_string() +
                           "}");
  if (cfg.ell < 1) throw InputError("ell must be >= 1");
  detail::PairIndex idx(g);
  FeatureVector fv;
  using EdgeList = std::span<const std::pair<std::uint64_t, std::uint32_t>>;

  if (cfg.node_counts.contains(2)) {
    detail::NodeSetCounter counter(g, 2, cfg.ell, cfg.delta, cfg.labeled);
    for (NodeId a = 0; a < g.num_nodes(); ++a) {
      for (auto b : idx.adj[a]) {
        if (b < a) continue;
        const NodeId nodes[2] = {a, b};
        const EdgeList lists[1] = {idx.edges_between(a, b)};
        counter.count(nodes, lists);
      }
    }
    counter.add_to(fv);
  }
  if (cfg.node_counts.contains(3) && cfg.ell >= 2) {
    detail::NodeSetCounter counter(g, 3, cfg.ell, cfg.delta, cfg.labeled);
    // Connected 3-node sets: open wedges once via their unique center,
    // triangles once via their smallest node.
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      const auto& nv = idx.adj[v];
      for (std::size_t i = 0; i < nv.size(); ++i) {
        for (std::size_t j = i + 1; j < nv.size(); ++j) {
          const NodeId u = nv[i], w = nv[j];
          const bool closed = idx.adjacent(u, w);
          if (closed && v > u) continue;
          NodeId nodes[3] = {u, v, w};
          std::sort(std::begin(nodes), std::end(nodes));
          if (closed) {
            const EdgeList lists[3] = {idx.edges_between(nodes[0], nodes[1]), idx.edges_between(nodes[0], nodes[2]),
                                       idx.edges_between(nodes[1], nodes[2])};
            counter.count(nodes, lists);
          } else {
            const EdgeList lists[2] = {idx.edges_between(v, u), idx.edges_between(v, w)};
            counter.count(nodes, lists);
          }
        }
      }
    }
    counter.add_to(fv);
  }
  return fv;
}

enum class CountFamily { Wedge, Star, Triangle, All };

inline std::string_view to_string(CountFamily f) {
  switch (f) {
    case CountFamily::Wedge: return "wedge";
    case CountFamily::Star: return "star";
    case CountFamily::Triangle: return "triangle";
    case CountFamily::All: return "all";
  }
  return "all";
}

/// Checks that a family selection agrees with the edge count.
inline void check_family_config(CountFamily family, const CountConfig& cfg) {
  if (family == CountFamily::Wedge && cfg.ell != 2)
    throw InputError("--family wedge requires --ell 2, got " + std::to_string(cfg.ell));
  if ((family == CountFamily::Star || family == CountFamily::Triangle) && cfg.ell != 3)
    throw InputError("--family " + std::string(to_string(family)) + " requires --ell 3, got " +
                     std::to_string(cfg.ell));
  if (family != CountFamily::All && !cfg.node_counts.contains(3))
    throw InputError("--family " + std::string(to_string(family)) + " needs k = 3");
}

/// Dispatches to the specialized counter of `family`, or the general one.
inline FeatureVector count_exact(const TemporalGraph& g, const CountConfig& cfg, CountFamily family) {
  check_family_config(family, cfg);
  switch (family) {
    case CountFamily::Wedge: return count_wedges(g, cfg.delta, cfg.labeled);
    case CountFamily::Star: return count_stars(g, cfg.delta, cfg.labeled);
    case CountFamily::Triangle: return count_triangles(g, cfg.delta, cfg.labeled);
    case CountFamily::All: return count_general(g, cfg);
  }
  return {};
}

/// Oracle counterpart of `count_exact`, restricted to the family.
inline FeatureVector count_exact_oracle(const TemporalGraph& g, const CountConfig& cfg, CountFamily family,
                                        std::size_t max_edges = 64) {
  check_family_config(family, cfg);
  auto fv = count_brute_force(g, cfg, max_edges);
  switch (family) {
    case CountFamily::Wedge: return filter_family(fv, GraphletFamily::Wedge);
    case CountFamily::Star: return filter_family(fv, GraphletFamily::Star3);
    case CountFamily::Triangle: return filter_family(fv, GraphletFamily::Triangle);
    case CountFamily::All: return fv;
  }
  return fv;
}

}  // namespace tgk
