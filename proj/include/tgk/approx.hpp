#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "tgk/error.hpp"
#include "tgk/exact_count.hpp"
#include "tgk/feature_vector.hpp"
#include "tgk/random.hpp"
#include "tgk/tgraph.hpp"

namespace tgk {

/// How a drawn δ-respecting pair is accepted.
///   Corrected: probability 2 / ((d-1) (1/c_e + 1/c_f)), which makes every
///              wedge equally likely; c_e and c_f are the window candidate
///              counts of the two edges at the center of degree d.
///   Literal:   min(1, P_min / P_tau) with P_tau = p_v / (d c_e) for the
///              ordered draw only; not uniform.
enum class AcceptanceRule { Corrected, Literal };

struct SampleConfig {
  std::size_t samples = 1000;
  TimeWindow delta = TimeWindow::unbounded();
  bool rejection = true;
  bool strict_paper = false;
  AcceptanceRule acceptance = AcceptanceRule::Corrected;
  std::uint64_t seed = 0;
  std::uint64_t attempt_factor = 1000;
  bool labeled = true;
};

struct SampleResult {
  FeatureVector features;
  std::uint64_t drawn = 0;     // vertex draws
  std::uint64_t accepted = 0;  // samples that reached the feature vector
  std::uint64_t overflow = 0;  // draws that are not 3-node, strictly ordered wedges
};

/// One sampled pair of incident edges at `center`; positions index the
/// center's time-sorted incidence list, `first` is not later than `second`.
struct WedgeDraw {
  NodeId center = 0;
  std::uint32_t first = 0;
  std::uint32_t second = 0;
};

class WedgeSampler {
 public:
  WedgeSampler(const TemporalGraph& g, bool labeled)
      : g_(g), labeled_(labeled), offsets_(g.num_nodes() + 1, 0), cdf_(g.num_nodes(), 0) {
    const auto es = g.edges();
    const auto lams = detail::edge_label_codes(g, labeled);
    const auto L2 = static_cast<std::uint32_t>(g.alphabet_size() * g.alphabet_size());
    for (const auto& e : es) {
      ++offsets_[e.source + 1];
      ++offsets_[e.target + 1];
    }
    for (std::size_t v = 0; v < g.num_nodes(); ++v) offsets_[v + 1] += offsets_[v];
    const auto m2 = offsets_.back();
    times_.resize(m2);
    nbrs_.resize(m2);
    types_.resize(m2);
    edge_.resize(m2);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::uint32_t i = 0; i < es.size(); ++i) {
      const auto& e = es[i];
      auto put = [&](NodeId c, NodeId other, std::uint32_t dir) {
        const auto p = fill[c]++;
        times_[p] = e.time;
        nbrs_[p] = other;
        types_[p] = dir * L2 + lams[i];
        edge_[p] = i;
      };
      put(e.source, e.target, 0);
      put(e.target, e.source, 1);
    }
    std::uint64_t acc = 0;
    for (std::size_t v = 0; v < g.num_nodes(); ++v) {
      const std::uint64_t d = offsets_[v + 1] - offsets_[v];
      acc += d * (d - (d > 0)) / 2;
      cdf_[v] = acc;
    }
    total_ = acc;
  }

  /// w = sum over v of C(d(v), 2).
  std::uint64_t total_wedges() const { return total_; }

  double vertex_probability(NodeId v) const {
    if (total_ == 0) return 0.0;
    const auto prev = v == 0 ? 0 : cdf_[v - 1];
    return static_cast<double>(cdf_[v] - prev) / static_cast<double>(total_);
  }

  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  NodeId draw_vertex(Rng& rng) const {
    const auto r = uniform_below(rng, total_);
    return static_cast<NodeId>(std::upper_bound(cdf_.begin(), cdf_.end(), r) - cdf_.begin());
  }

  /// Algorithm 1 draw: a vertex by weight, then a uniform pair of its incident edges.
  WedgeDraw draw_pair(Rng& rng) const {
    const NodeId v = draw_vertex(rng);
    const auto d = degree(v);
    auto i = static_cast<std::uint32_t>(uniform_below(rng, d));
    auto j = static_cast<std::uint32_t>(uniform_below(rng, d - 1));
    if (j >= i) ++j;
    return {v, std::min(i, j), std::max(i, j)};
  }

  /// δ-respecting draw; nullopt when the first edge has no window partner or
  /// the rejection step declines.
  std::optional<WedgeDraw> draw_delta(Rng& rng, TimeWindow delta, bool rejection, AcceptanceRule rule) const {
    const NodeId v = draw_vertex(rng);
    const auto d = degree(v);
    const auto e = static_cast<std::uint32_t>(uniform_below(rng, d));
    const auto ce = window_partners(v, e, delta);
    if (ce.count() == 0) return std::nullopt;
    const auto r = uniform_below(rng, ce.count());
    const auto f = static_cast<std::uint32_t>(r < ce.before_count() ? ce.before_lo + r
                                                                     : ce.after_lo + (r - ce.before_count()));
    if (rejection) {
      double a;
      const double c_e = static_cast<double>(ce.count());
      if (rule == AcceptanceRule::Corrected) {
        const double c_f = static_cast<double>(window_partners(v, f, delta).count());
        a = 2.0 * c_e * c_f / (static_cast<double>(d - 1) * (c_e + c_f));
      } else {
        a = std::min(1.0, literal_ratio(v, ce.count()));
      }
      if (!bernoulli(rng, a)) return std::nullopt;
    }
    return WedgeDraw{v, std::min(e, f), std::max(e, f)};
  }

  /// P_min / P_tau as printed for the ordered draw; may exceed 1.
  double literal_ratio(NodeId v, std::size_t c_e) const {
    return 2.0 * static_cast<double>(c_e) / static_cast<double>(degree(v) - 1);
  }

  /// A draw counts as a wedge iff its times differ and its other endpoints differ.
  bool is_wedge(const WedgeDraw& w) const {
    const auto a = offsets_[w.center] + w.first, b = offsets_[w.center] + w.second;
    return times_[a] != times_[b] && nbrs_[a] != nbrs_[b];
  }

  std::uint32_t first_type(const WedgeDraw& w) const { return types_[offsets_[w.center] + w.first]; }
  std::uint32_t second_type(const WedgeDraw& w) const { return types_[offsets_[w.center] + w.second]; }

  /// Edge indices (into the graph's sorted edge list) of the draw.
  std::pair<std::uint32_t, std::uint32_t> edges_of(const WedgeDraw& w) const {
    return {edge_[offsets_[w.center] + w.first], edge_[offsets_[w.center] + w.second]};
  }

  std::size_t num_types() const { return 2 * g_.alphabet_size() * g_.alphabet_size(); }
  const TemporalGraph& graph() const { return g_; }
  bool labeled() const { return labeled_; }

  struct Partners {
    std::size_t before_lo, before_hi, after_lo, after_hi;
    std::size_t before_count() const { return before_hi - before_lo; }
    std::size_t count() const { return before_count() + (after_hi - after_lo); }
  };

  /// Positions at `v` whose time differs from position `p`'s by 1..δ.
  Partners window_partners(NodeId v, std::uint32_t p, TimeWindow delta) const {
    const auto begin = times_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    const auto end = times_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    const Timestamp t = begin[p];
    auto pos = [&](auto it) { return static_cast<std::size_t>(it - begin); };
    const auto same_lo = std::lower_bound(begin, end, t);
    const auto same_hi = std::upper_bound(same_lo, end, t);
    auto lo = begin, hi = end;
    if (!delta.is_unbounded()) {
      lo = std::lower_bound(begin, same_lo, t - delta.value());
      hi = std::upper_bound(same_hi, end, t + delta.value());
    }
    return {pos(lo), pos(same_lo), pos(same_hi), pos(hi)};
  }

 private:
  const TemporalGraph& g_;
  bool labeled_;
  std::vector<std::size_t> offsets_;
  std::vector<Timestamp> times_;
  std::vector<NodeId> nbrs_;
  std::vector<std::uint32_t> types_;
  std::vector<std::uint32_t> edge_;
  std::vector<std::uint64_t> cdf_;
  std::uint64_t total_ = 0;
};

namespace detail {

inline FeatureVector wedge_tally_to_features(const std::vector<std::uint64_t>& tally, std::size_t T,
                                             std::size_t alphabet, bool labeled, double scale) {
  FeatureVector fv;
  for (std::uint32_t t1 = 0; t1 < T; ++t1)
    for (std::uint32_t t2 = 0; t2 < T; ++t2)
      if (const auto n = tally[t1 * T + t2]; n != 0)
        fv.add(wedge_code(t1, t2, alphabet, labeled), static_cast<double>(n) * scale);
  return fv;
}

}  // namespace detail

/// Algorithm 1 over all incident pairs (no time window).
///
/// Discard mode keeps only draws that are 3-node, strictly ordered wedges and
/// divides by their number. Strict mode adds 1/s per wedge and tallies the
/// other draws in `overflow`.
inline SampleResult sample_wedges(const WedgeSampler& sampler, const SampleConfig& cfg, Rng& rng) {
  if (cfg.samples == 0) throw InputError("sample size must be >= 1");
  if (sampler.total_wedges() == 0) throw DegenerateSampleError("graph has no incident edge pairs (w = 0)");
  const auto T = sampler.num_types();
  std::vector<std::uint64_t> tally(T * T, 0);
  SampleResult res;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const auto w = sampler.draw_pair(rng);
    ++res.drawn;
    if (!sampler.is_wedge(w)) {
      ++res.overflow;
      continue;
    }
    ++tally[sampler.first_type(w) * T + sampler.second_type(w)];
    ++res.accepted;
  }
  if (cfg.strict_paper) {
    res.features = detail::wedge_tally_to_features(tally, T, sampler.graph().alphabet_size(), sampler.labeled(),
                                                   1.0 / static_cast<double>(cfg.samples));
    return res;
  }
  if (res.accepted == 0) throw DegenerateSampleError("every sampled pair was discarded");
  res.features = detail::wedge_tally_to_features(tally, T, sampler.graph().alphabet_size(), sampler.labeled(),
                                                 1.0 / static_cast<double>(res.accepted));
  return res;
}

/// δ-respecting wedge sampling: second edge drawn among window partners of the
/// first; with rejection on, accepted wedges are uniform over all δ-respecting
/// wedges. Stops after `samples` accepted wedges or attempt_factor * samples
/// attempts, and normalizes by the accepted count.
inline SampleResult sample_wedges_delta(const WedgeSampler& sampler, const SampleConfig& cfg, Rng& rng) {
  if (cfg.samples == 0) throw InputError("sample size must be >= 1");
  if (sampler.total_wedges() == 0) throw DegenerateSampleError("graph has no incident edge pairs (w = 0)");
  const auto T = sampler.num_types();
  std::vector<std::uint64_t> tally(T * T, 0);
  SampleResult res;
  const std::uint64_t budget = cfg.attempt_factor * cfg.samples;
  while (res.accepted < cfg.samples && res.drawn < budget) {
    ++res.drawn;
    auto w = sampler.draw_delta(rng, cfg.delta, cfg.rejection, cfg.acceptance);
    if (!w || !sampler.is_wedge(*w)) continue;
    ++tally[sampler.first_type(*w) * T + sampler.second_type(*w)];
    ++res.accepted;
  }
  if (res.accepted == 0)
    throw DegenerateSampleError("no delta-respecting wedge found within " + std::to_string(budget) + " attempts");
  res.features = detail::wedge_tally_to_features(tally, T, sampler.graph().alphabet_size(), sampler.labeled(),
                                                 1.0 / static_cast<double>(res.accepted));
  return res;
}

/// Dispatch: Algorithm 1 for an unbounded window, the δ variant otherwise.
inline SampleResult approximate_wedges(const TemporalGraph& g, const SampleConfig& cfg, Rng& rng) {
  WedgeSampler sampler(g, cfg.labeled);
  return cfg.delta.is_unbounded() ? sample_wedges(sampler, cfg, rng) : sample_wedges_delta(sampler, cfg, rng);
}

inline SampleResult approximate_wedges(const TemporalGraph& g, const SampleConfig& cfg) {
  Rng rng(cfg.seed);
  return approximate_wedges(g, cfg, rng);
}

/// Smallest s with sup-error <= 3 lambda at probability >= 1 - confidence over
/// `num_graphs` graphs and `num_classes` wedge classes:
///   s = ceil(ln(2 |G| W / confidence) / (2 (lambda / W)^2)).
inline std::uint64_t required_sample_size(std::uint64_t num_graphs, std::uint64_t num_classes, double lambda,
                                          double confidence) {
  if (num_graphs < 1 || num_classes < 1) throw InputError("graph and class counts must be >= 1");
  if (!(lambda > 0)) throw InputError("lambda must be positive");
  if (!(confidence > 0 && confidence < 1)) throw InputError("confidence must lie in (0, 1)");
  const double W = static_cast<double>(num_classes);
  const double num = std::log(2.0 * static_cast<double>(num_graphs) * W / confidence);
  const double den = 2.0 * (lambda / W) * (lambda / W);
  const double s = std::ceil(num / den);
  if (!(s < 1.8e19)) throw std::overflow_error("required sample size overflows");
  return static_cast<std::uint64_t>(std::max(1.0, s));
}

}  // namespace tgk
