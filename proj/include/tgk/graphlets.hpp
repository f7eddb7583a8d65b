#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tgk/error.hpp"
#include "tgk/tgraph.hpp"

namespace tgk {

/// Directed edge between two graphlet slots; slots are numbered by first
/// appearance in the chronological edge sequence.
struct SlotPair {
  std::uint8_t src = 0;
  std::uint8_t dst = 0;
  friend auto operator<=>(const SlotPair&, const SlotPair&) = default;
};

/// Canonical identity of an equivalence class of (labeled) temporal graphlets.
///
/// Two graphlets are equivalent iff they have the same edge count, the
/// position-wise node bijection exists and, when labeled, equal label
/// sequences. Renaming nodes by first appearance turns that bijection into
/// plain equality of the renamed sequences.
struct GraphletCode {
  std::vector<SlotPair> pattern;
  std::vector<Label> labels;  // 2 * length() entries, or empty when unlabeled

  std::size_t length() const { return pattern.size(); }
  bool labeled() const { return !labels.empty(); }

  std::size_t num_slots() const {
    std::size_t k = 0;
    for (auto p : pattern) k = std::max<std::size_t>(k, std::max(p.src, p.dst) + 1u);
    return k;
  }

  // Orders by length, then pattern, then labels; matches the packed-key order.
  friend std::strong_ordering operator<=>(const GraphletCode& a, const GraphletCode& b) {
    if (auto c = a.pattern.size() <=> b.pattern.size(); c != 0) return c;
    if (auto c = a.pattern <=> b.pattern; c != 0) return c;
    return a.labels <=> b.labels;
  }
  friend bool operator==(const GraphletCode&, const GraphletCode&) = default;
};

enum class GraphletFamily { Wedge, Star3, Triangle, TwoNode, General };

inline std::string_view to_string(GraphletFamily f) {
  switch (f) {
    case GraphletFamily::Wedge: return "wedge";
    case GraphletFamily::Star3: return "star";
    case GraphletFamily::Triangle: return "triangle";
    case GraphletFamily::TwoNode: return "two-node";
    case GraphletFamily::General: return "general";
  }
  return "general";
}

/// Small set of node counts k (bit k set means k is allowed).
class NodeCountSet {
 public:
  constexpr NodeCountSet() = default;
  NodeCountSet(std::initializer_list<int> ks) {
    for (int k : ks) insert(k);
  }

  void insert(int k) {
    if (k < 1 || k > 31) throw InputError("node count out of range: " + std::to_string(k));
    mask_ |= 1u << k;
  }
  constexpr bool contains(std::size_t k) const { return k < 32 && ((mask_ >> k) & 1u); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool subset_of(NodeCountSet other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> values() const {
    std::vector<int> out;
    for (int k = 1; k < 32; ++k)
      if (contains(k)) out.push_back(k);
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (int k : values()) s += (s.empty() ? "" : ",") + std::to_string(k);
    return s;
  }

  friend constexpr bool operator==(NodeCountSet, NodeCountSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Renames arbitrary endpoint ids by first appearance.
template <typename Id>
std::vector<SlotPair> canonical_pattern(std::span<const std::pair<Id, Id>> arcs) {
  std::vector<Id> seen;
  auto slot = [&](Id x) -> std::uint8_t {
    auto it = std::find(seen.begin(), seen.end(), x);
    if (it != seen.end()) return static_cast<std::uint8_t>(it - seen.begin());
    if (seen.size() >= 255) throw UnsupportedError("graphlet has too many nodes");
    seen.push_back(x);
    return static_cast<std::uint8_t>(seen.size() - 1);
  };
  std::vector<SlotPair> out;
  out.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    auto s = slot(u);
    auto d = slot(v);
    out.push_back({s, d});
  }
  return out;
}

namespace detail {

inline bool slots_connected(std::span<const SlotPair> pattern, std::size_t k) {
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto p : pattern) parent[find(p.src)] = find(p.dst);
  for (std::size_t i = 1; i < k; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

}  // namespace detail

/// True iff `code` is in first-appearance canonical form with well-formed labels.
inline bool is_valid_code(const GraphletCode& code) {
  std::size_t next = 0;
  for (auto p : code.pattern) {
    if (p.src == p.dst) return false;
    for (auto s : {p.src, p.dst}) {
      if (s > next) return false;
      if (s == next) ++next;
    }
  }
  return code.labels.empty() || code.labels.size() == 2 * code.pattern.size();
}

/// Composite edge label l(u,t) * L + l(v,t+1); injective over all L^2 pairs.
inline std::uint32_t edge_label_code(const TemporalEdge& e, const TemporalGraph& g) {
  const auto L = static_cast<std::uint32_t>(g.alphabet_size());
  return g.label_at(e.source, e.time) * L + g.label_at(e.target, e.time + 1);
}

/// Canonical code of a chronologically ordered edge sequence of `g`.
inline GraphletCode canonical_code(std::span<const TemporalEdge> edges, const TemporalGraph& g,
                                   bool labeled) {
  if (edges.empty()) throw InputError("graphlet must have at least one edge");
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].time <= edges[i - 1].time)
      throw InputError("graphlet edges must have strictly increasing times");
  }
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(edges.size());
  for (const auto& e : edges) arcs.emplace_back(e.source, e.target);
  GraphletCode code;
  code.pattern = canonical_pattern<NodeId>(arcs);
  if (!detail::slots_connected(code.pattern, code.num_slots()))
    throw InputError("induced static graph of the graphlet is disconnected");
  if (labeled) {
    code.labels.reserve(2 * edges.size());
    for (const auto& e : edges) {
      code.labels.push_back(g.label_at(e.source, e.time));
      code.labels.push_back(g.label_at(e.target, e.time + 1));
    }
  }
  return code;
}

inline GraphletFamily family_of(const GraphletCode& code) {
  const auto k = code.num_slots();
  const auto ell = code.length();
  if (k == 2) return GraphletFamily::TwoNode;
  if (ell == 2 && k == 3) return GraphletFamily::Wedge;
  if (ell == 3 && k == 3) {
    std::vector<std::pair<int, int>> undirected;
    for (auto p : code.pattern) undirected.emplace_back(std::min(p.src, p.dst), std::max(p.src, p.dst));
    std::sort(undirected.begin(), undirected.end());
    if (std::unique(undirected.begin(), undirected.end()) == undirected.end())
      return GraphletFamily::Triangle;
    for (std::uint8_t s = 0; s < 3; ++s) {
      bool all = std::all_of(code.pattern.begin(), code.pattern.end(),
                             [s](SlotPair p) { return p.src == s || p.dst == s; });
      if (all) return GraphletFamily::Star3;
    }
  }
  return GraphletFamily::General;
}

/// L^(2 ell): the number of distinct label sequences of an ell-edge graphlet.
inline std::uint64_t num_label_sequences(std::uint64_t alphabet, std::uint64_t ell) {
  if (alphabet < 1 || ell < 1) throw InputError("need L >= 1 and ell >= 1");
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < 2 * ell; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / alphabet)
      throw std::overflow_error("L^(2 ell) overflows 64 bits");
    r *= alphabet;
  }
  return r;
}

/// All canonical patterns with `ell` edges and at most `max_slots` nodes, in
/// lexicographic order. Patterns built this way are always connected.
inline std::vector<std::vector<SlotPair>> enumerate_patterns(std::size_t ell, std::size_t max_slots = 3) {
  std::vector<std::vector<SlotPair>> out;
  std::vector<SlotPair> cur;
  auto rec = [&](auto&& self, std::size_t used) -> void {
    if (cur.size() == ell) {
      out.push_back(cur);
      return;
    }
    for (std::size_t s = 0; s <= used; ++s) {
      const bool s_new = s == used;
      const std::size_t first_free = used + (s_new ? 1 : 0);
      for (std::size_t d = 0; d <= first_free; ++d) {
        if (s == d) continue;
        const bool d_new = d == first_free;
        // Two new slots at once would disconnect everything after the first edge.
        if (s_new && d_new && !cur.empty()) continue;
        const std::size_t next_used = first_free + (d_new ? 1 : 0);
        if (next_used > max_slots) continue;
        cur.push_back({static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(d)});
        self(self, next_used);
        cur.pop_back();
      }
    }
  };
  if (ell > 0) rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Exhaustive, duplicate-free codebook of classes with `ell` edges and a node
/// count in `ks`. With an alphabet, every pattern is crossed with all L^(2 ell)
/// label sequences; without one, codes are unlabeled.
inline std::vector<GraphletCode> enumerate_classes(NodeCountSet ks, std::size_t ell,
                                                   std::optional<std::size_t> alphabet) {
  if (ks.empty() || !ks.subset_of(NodeCountSet{2, 3}))
    throw UnsupportedError("codebook supports node counts {2,3} only, got {" + ks.to_string() + "}");
  if (ell != 2 && ell != 3) throw UnsupportedError("codebook supports ell in {2,3} only");
  std::vector<GraphletCode> out;
  const std::uint64_t L = alphabet.value_or(1);
  const std::uint64_t nseq = alphabet ? num_label_sequences(L, ell) : 1;
  for (auto& p : enumerate_patterns(ell, 3)) {
    GraphletCode base;
    base.pattern = p;
    if (!ks.contains(base.num_slots())) continue;
    for (std::uint64_t idx = 0; idx < nseq; ++idx) {
      GraphletCode c = base;
      if (alphabet) {
        c.labels.assign(2 * ell, 0);
        std::uint64_t x = idx;
        for (std::size_t i = 2 * ell; i-- > 0;) {
          c.labels[i] = static_cast<Label>(x % L);
          x /= L;
        }
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

/// Single-integer key `pattern_index * L^(2 ell) + label_index` for codes with
/// ell <= 3, at most 3 slots and L <= 4; nullopt otherwise.
inline std::optional<std::uint64_t> packed_key(const GraphletCode& code, std::size_t alphabet) {
  const auto ell = code.length();
  if (ell < 1 || ell > 3 || code.num_slots() > 3 || alphabet > 4 || alphabet < 1) return std::nullopt;
  static const std::vector<std::vector<SlotPair>> patterns[4] = {
      {}, enumerate_patterns(1), enumerate_patterns(2), enumerate_patterns(3)};
  const auto& ps = patterns[ell];
  auto it = std::lower_bound(ps.begin(), ps.end(), code.pattern);
  if (it == ps.end() || *it != code.pattern) return std::nullopt;
  std::uint64_t label_index = 0;
  for (auto l : code.labels) {
    if (l >= alphabet) return std::nullopt;
    label_index = label_index * alphabet + l;
  }
  const auto nseq = code.labeled() ? num_label_sequences(alphabet, ell) : 1;
  return static_cast<std::uint64_t>(it - ps.begin()) * nseq + label_index;
}

inline std::string pattern_string(const GraphletCode& code) {
  std::string s;
  for (auto p : code.pattern) {
    if (!s.empty()) s += ',';
    s += std::to_string(p.src) + '>' + std::to_string(p.dst);
  }
  return s;
}

inline std::string labels_string(const GraphletCode& code) {
  if (code.labels.empty()) return "-";
  std::string s;
  for (auto l : code.labels) {
    if (!s.empty()) s += ',';
    s += std::to_string(l);
  }
  return s;
}

inline std::string to_string(const GraphletCode& code) {
  return pattern_string(code) + " " + labels_string(code);
}

/// Enumerated classes with a stable index per class.
class Codebook {
 public:
  Codebook(NodeCountSet ks, std::size_t ell, std::optional<std::size_t> alphabet)
      : ks_(ks), ell_(ell), alphabet_(alphabet), codes_(enumerate_classes(ks, ell, alphabet)) {}

  std::size_t size() const { return codes_.size(); }
  const GraphletCode& operator[](std::size_t i) const { return codes_[i]; }
  std::span<const GraphletCode> codes() const { return codes_; }

  std::optional<std::size_t> index_of(const GraphletCode& code) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return std::nullopt;
    return static_cast<std::size_t>(it - codes_.begin());
  }

  NodeCountSet node_counts() const { return ks_; }
  std::size_t ell() const { return ell_; }
  std::optional<std::size_t> alphabet() const { return alphabet_; }

 private:
  NodeCountSet ks_;
  std::size_t ell_;
  std::optional<std::size_t> alphabet_;
  std::vector<GraphletCode> codes_;
};

}  // namespace tgk
