#pragma once

// SI dissemination on temporal graphs and the classification task generators.
// Label 0 = susceptible, 1 = infected.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tgk/error.hpp"
#include "tgk/random.hpp"
#include "tgk/tgraph.hpp"

namespace tgk {

inline constexpr Label kSusceptible = 0;
inline constexpr Label kInfected = 1;

enum class SeedSelection { UniformRandom, FixedList };

struct SIConfig {
  double infection_probability = 0.5;
  std::size_t num_seeds = 1;
  SeedSelection seed_selection = SeedSelection::UniformRandom;
  std::vector<NodeId> fixed_seeds;
  std::uint64_t rng_seed = 0;
};

inline constexpr Timestamp kNever = std::numeric_limits<Timestamp>::max();

/// Infection time per node (kNever if never infected). Seeds are infected at
/// time 0; an edge (u, v, t) with u infected by t infects a susceptible v at
/// t + 1 with the given probability, one trial per edge.
inline std::vector<Timestamp> si_infection_times(const TemporalGraph& g, double p, std::span<const NodeId> seeds,
                                                 Rng& rng) {
  if (!(p >= 0 && p <= 1)) throw InputError("infection probability must lie in [0, 1]");
  std::vector<Timestamp> at(g.num_nodes(), kNever);
  for (auto s : seeds) {
    if (s >= g.num_nodes()) throw InputError("seed node out of range");
    at[s] = 0;
  }
  for (const auto& e : g.edges()) {
    if (at[e.source] <= e.time && at[e.target] == kNever && bernoulli(rng, p)) at[e.target] = e.time + 1;
  }
  return at;
}

inline std::vector<LabelTimeline> infection_timelines(const std::vector<Timestamp>& at) {
  std::vector<LabelTimeline> tls;
  tls.reserve(at.size());
  for (auto t : at) {
    if (t == kNever)
      tls.emplace_back(kSusceptible);
    else
      tls.emplace_back(kSusceptible, std::vector<LabelEvent>{{t, kInfected}});
  }
  return tls;
}

inline std::vector<NodeId> choose_seeds(const TemporalGraph& g, const SIConfig& cfg, Rng& rng) {
  if (cfg.seed_selection == SeedSelection::FixedList) {
    if (cfg.fixed_seeds.empty()) throw InputError("fixed seed list is empty");
    return cfg.fixed_seeds;
  }
  if (cfg.num_seeds < 1) throw InputError("need at least one seed");
  if (g.num_nodes() == 0) throw InputError("graph has no nodes");
  std::vector<NodeId> out;
  for (auto i : sample_without_replacement(rng, g.num_nodes(), cfg.num_seeds)) out.push_back(static_cast<NodeId>(i));
  return out;
}

inline TemporalGraph simulate_si(const TemporalGraph& g, const SIConfig& cfg, Rng& rng) {
  if (g.alphabet_size() != 2) throw InputError("SI simulation needs a binary label alphabet");
  const auto seeds = choose_seeds(g, cfg, rng);
  return g.relabeled(infection_timelines(si_infection_times(g, cfg.infection_probability, seeds, rng)), 2);
}

inline TemporalGraph simulate_si(const TemporalGraph& g, const SIConfig& cfg) {
  Rng rng(cfg.rng_seed);
  return simulate_si(g, cfg, rng);
}

/// Nodes that carry the infected label at some time.
inline std::size_t infected_count(const TemporalGraph& g) {
  std::size_t n = 0;
  for (const auto& tl : g.timelines()) n += tl.max_label() == kInfected;
  return n;
}

/// Binary-alphabet copy with every node susceptible.
inline TemporalGraph as_binary(const TemporalGraph& g) { return g.relabeled({}, 2); }

/// Initially infected nodes per simulated graph in the task generators.
inline constexpr std::size_t kDefaultTaskSeeds = 5;

enum class Task { DisseminationVsRandom = 1, TwoProbabilities = 2, MissingInfo = 3 };

struct TaskConfig {
  Task task = Task::TwoProbabilities;
  double p = 0.5;    // task 1
  double p1 = 0.2;   // task 2, class 0
  double p2 = 0.8;   // task 2, class 1
  double missing_fraction = 0.0;
  Task base_task = Task::TwoProbabilities;  // task 3
  std::size_t num_seeds = kDefaultTaskSeeds;
  std::uint64_t rng_seed = 0;
};

inline std::string base_id(std::size_t i) {
  std::string s = std::to_string(i);
  return "b" + std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
}

/// Task 1: per base, class 1 is an SI run and class 0 gets the same number of
/// infection events on uniformly chosen nodes at uniform times in the time span.
inline Dataset make_task1(const std::vector<TemporalGraph>& bases, double p, std::uint64_t seed,
                          std::size_t num_seeds = kDefaultTaskSeeds) {
  Dataset ds;
  ds.meta.task = "task1";
  ds.meta.params["p"] = std::to_string(p);
  ds.meta.params["num_seeds"] = std::to_string(num_seeds);
  ds.meta.seed = seed;
  SIConfig si;
  si.infection_probability = p;
  si.num_seeds = num_seeds;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    Rng rng = make_stream(seed, i);
    const auto g = as_binary(bases[i]);
    auto sim = simulate_si(g, si, rng);
    const auto k = infected_count(sim);
    const auto [t0, t1] = g.time_span();
    std::vector<LabelTimeline> tls(g.num_nodes(), LabelTimeline(kSusceptible));
    for (auto v : sample_without_replacement(rng, g.num_nodes(), k))
      tls[v] = LabelTimeline(kSusceptible, {{uniform_int(rng, t0, t1), kInfected}});
    ds.add(base_id(i) + "_random", g.relabeled(std::move(tls), 2), 0);
    ds.add(base_id(i) + "_si", std::move(sim), 1);
  }
  return ds;
}

/// Task 2: per base, one SI run at p1 (class 0) and one at p2 (class 1).
inline Dataset make_task2(const std::vector<TemporalGraph>& bases, double p1, double p2, std::uint64_t seed,
                          std::size_t num_seeds = kDefaultTaskSeeds) {
  if (p1 == p2) throw InputError("task 2 needs two different infection probabilities");
  Dataset ds;
  ds.meta.task = "task2";
  ds.meta.params["p1"] = std::to_string(p1);
  ds.meta.params["p2"] = std::to_string(p2);
  ds.meta.params["num_seeds"] = std::to_string(num_seeds);
  ds.meta.seed = seed;
  SIConfig si;
  si.num_seeds = num_seeds;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const auto g = as_binary(bases[i]);
    Rng r0 = make_stream(seed, 2 * i), r1 = make_stream(seed, 2 * i + 1);
    si.infection_probability = p1;
    ds.add(base_id(i) + "_p1", simulate_si(g, si, r0), 0);
    si.infection_probability = p2;
    ds.add(base_id(i) + "_p2", simulate_si(g, si, r1), 1);
  }
  return ds;
}

/// Resets floor(fraction * infected) uniformly chosen infected nodes of every
/// graph to susceptible at all times.
inline Dataset apply_missing_info(const Dataset& ds, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0 && fraction <= 1)) throw InputError("missing fraction must lie in [0, 1]");
  if (!ds.empty() && ds.alphabet_size() != 2) throw InputError("missing information needs a binary alphabet");
  Dataset out;
  out.meta = ds.meta;
  out.meta.params["missing_fraction"] = std::to_string(fraction);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& g = ds.graphs[i].graph;
    std::vector<NodeId> infected;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
      if (g.timeline(v).max_label() == kInfected) infected.push_back(v);
    // epsilon guards products such as 0.1 * 10 that land just below an integer
    const auto k = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(infected.size()) + 1e-9));
    Rng rng = make_stream(seed, i);
    std::vector<LabelTimeline> tls(g.timelines().begin(), g.timelines().end());
    for (auto j : sample_without_replacement(rng, infected.size(), k)) tls[infected[j]] = LabelTimeline(kSusceptible);
    out.add(ds.graphs[i].id, g.relabeled(std::move(tls), 2), ds.graphs[i].class_label);
  }
  return out;
}

inline Dataset make_task(const std::vector<TemporalGraph>& bases, const TaskConfig& cfg) {
  const auto base = cfg.task == Task::MissingInfo ? cfg.base_task : cfg.task;
  Dataset ds;
  switch (base) {
    case Task::DisseminationVsRandom: ds = make_task1(bases, cfg.p, cfg.rng_seed, cfg.num_seeds); break;
    case Task::TwoProbabilities: ds = make_task2(bases, cfg.p1, cfg.p2, cfg.rng_seed, cfg.num_seeds); break;
    case Task::MissingInfo: throw InputError("task 3 needs task 1 or 2 as its base task");
  }
  if (cfg.task == Task::MissingInfo) {
    ds = apply_missing_info(ds, cfg.missing_fraction, splitmix64(cfg.rng_seed ^ 0x3));
    ds.meta.task = "task3";
  }
  return ds;
}

/// Preferential attachment in the networkx convention: nodes 0..m-1 start
/// without edges, every later node links to m distinct earlier nodes drawn
/// from the multiset of edge endpoints (the first arrival links to 0..m-1).
/// Edges point from the newer to the older node and get uniform times in
/// [0, t_max]. m * (n - m) edges, labels all 0 over a one-letter alphabet.
inline TemporalGraph generate_ba(std::size_t n, std::size_t m, Timestamp t_max, Rng& rng) {
  if (m < 1 || n <= m) throw InputError("Barabasi-Albert needs n > m >= 1");
  if (t_max < 0) throw InputError("t_max must be nonnegative");
  std::vector<TemporalEdge> edges;
  edges.reserve(m * (n - m));
  std::vector<NodeId> targets(m);
  for (std::size_t i = 0; i < m; ++i) targets[i] = static_cast<NodeId>(i);
  std::vector<NodeId> repeated;
  repeated.reserve(2 * m * (n - m));
  std::vector<char> taken(n, 0);
  for (std::size_t src = m; src < n; ++src) {
    for (auto t : targets) edges.push_back({static_cast<NodeId>(src), t, uniform_int(rng, 0, t_max)});
    repeated.insert(repeated.end(), targets.begin(), targets.end());
    repeated.insert(repeated.end(), m, static_cast<NodeId>(src));
    targets.clear();
    while (targets.size() < m) {
      const auto x = repeated[uniform_below(rng, repeated.size())];
      if (!taken[x]) {
        taken[x] = 1;
        targets.push_back(x);
      }
    }
    for (auto t : targets) taken[t] = 0;
  }
  return TemporalGraph(n, std::move(edges));
}

inline TemporalGraph generate_ba(std::size_t n, std::size_t m, Timestamp t_max, std::uint64_t seed) {
  Rng rng(seed);
  return generate_ba(n, m, t_max, rng);
}

/// `count` BA graphs, graph i drawn from stream i of `seed`.
inline std::vector<TemporalGraph> generate_ba_family(std::size_t count, std::size_t n, std::size_t m,
                                                     Timestamp t_max, std::uint64_t seed) {
  std::vector<TemporalGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = make_stream(seed, i);
    out.push_back(generate_ba(n, m, t_max, rng));
  }
  return out;
}

}  // namespace tgk
