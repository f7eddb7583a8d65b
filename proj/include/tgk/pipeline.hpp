#pragma once

// Batch drivers shared by the CLI and the acceptance harness: per-graph
// feature computation, feature files, oracle verification, timing tables and
// run manifests.

#include <algorithm>
#include <charconv>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tgk/approx.hpp"
#include "tgk/error.hpp"
#include "tgk/exact_count.hpp"
#include "tgk/io.hpp"
#include "tgk/kernel.hpp"
#include "tgk/parallel.hpp"

namespace tgk {

inline constexpr std::string_view kVersion = "0.1.0";

/// Error raised inside a batch stage, tagged with the stage and graph id. Keeps
/// the exit status the original error maps to.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, std::string graph_id, const std::string& what, int exit_code)
      : std::runtime_error(stage + " failed on graph '" + graph_id + "': " + what),
        stage_(std::move(stage)),
        graph_id_(std::move(graph_id)),
        exit_code_(exit_code) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::string& graph_id() const noexcept { return graph_id_; }
  int exit_code() const noexcept { return exit_code_; }

 private:
  std::string stage_, graph_id_;
  int exit_code_;
};

/// 0 ok, 1 verification or classification failure, 2 usage, 3 I/O.
inline int exit_code_for(const std::exception& e) {
  if (auto s = dynamic_cast<const StageError*>(&e)) return s->exit_code();
  if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const UnsupportedError*>(&e) ||
      dynamic_cast<const SizeError*>(&e))
    return 2;
  if (dynamic_cast<const LoadError*>(&e) || dynamic_cast<const IoError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const std::filesystem::filesystem_error*>(&e))
    return 3;
  return 1;
}

template <typename Fn>
auto in_stage(const std::string& stage, const std::string& graph_id, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, graph_id, e.what(), exit_code_for(e));
  }
}

enum class FeatureMethod { Exact, Oracle, Approx };

struct FeatureSpec {
  FeatureMethod method = FeatureMethod::Exact;
  CountConfig count;  // node_counts holds the requested k, without the two-node extension
  CountFamily family = CountFamily::All;
  bool include_two_node = false;
  SampleConfig sample;  // approx only; its delta and labeled follow `count`
  std::size_t oracle_max_edges = 64;
};

inline NodeCountSet effective_node_counts(const FeatureSpec& spec) {
  auto ks = spec.count.node_counts;
  if (spec.include_two_node) ks.insert(2);
  return ks;
}

/// Rejects inconsistent flag combinations before any work is done.
inline void check_feature_spec(const FeatureSpec& spec) {
  if (spec.count.ell < 1) throw InputError("--ell must be >= 1");
  check_family_config(spec.family, spec.count);
  if (spec.method == FeatureMethod::Approx) {
    if (spec.count.ell != 2) throw InputError("approx samples wedges and requires --ell 2");
    if (spec.family != CountFamily::Wedge && spec.family != CountFamily::All)
      throw InputError("approx supports --family wedge only");
    if (!spec.count.node_counts.contains(3)) throw InputError("approx needs k = 3");
    if (spec.include_two_node) throw InputError("approx does not sample two-node classes");
    if (spec.sample.samples < 1) throw InputError("--samples must be >= 1");
  }
}

/// Raw feature vector of one graph: counts for exact methods, normalized
/// sample frequencies for approx. `index` selects the rng stream.
inline FeatureVector graph_features(const TemporalGraph& g, const FeatureSpec& spec, std::size_t index) {
  CountConfig cfg = spec.count;
  if (spec.method == FeatureMethod::Approx) {
    SampleConfig sc = spec.sample;
    sc.delta = cfg.delta;
    sc.labeled = cfg.labeled;
    Rng rng = make_stream(sc.seed, index);
    return approximate_wedges(g, sc, rng).features;
  }
  const bool oracle = spec.method == FeatureMethod::Oracle;
  if (spec.family == CountFamily::All) {
    cfg.node_counts = effective_node_counts(spec);
    return oracle ? count_brute_force(g, cfg, spec.oracle_max_edges) : count_general(g, cfg);
  }
  auto fv = oracle ? count_exact_oracle(g, cfg, spec.family, spec.oracle_max_edges) : count_exact(g, cfg, spec.family);
  if (spec.include_two_node) {
    cfg.node_counts = {2};
    fv = merge(fv, oracle ? count_brute_force(g, cfg, spec.oracle_max_edges) : count_general(g, cfg));
  }
  return fv;
}

inline std::vector<FeatureVector> compute_features(const Dataset& ds, const FeatureSpec& spec, std::size_t threads) {
  check_feature_spec(spec);
  std::vector<FeatureVector> out(ds.size());
  parallel_for(ds.size(), threads, [&](std::size_t i) {
    out[i] = in_stage(spec.method == FeatureMethod::Approx ? "approx" : "count", ds.graphs[i].id,
                      [&] { return graph_features(ds.graphs[i].graph, spec, i); });
  });
  return out;
}

// ---------------------------------------------------------------------------
// Feature files
//
//   # features ell=<ell> k=<k,...> alphabet=<L, 0 = unlabeled>
//   # labels <class label per graph, in line order>
//   <graph-id> <class-index>:<value> ...
//
// Classes outside an enumerable codebook are written as `<pattern>/<labels>`.

inline constexpr std::size_t kMaxCodebookSize = 1u << 20;

struct FeatureTable {
  std::size_t ell = 2;
  NodeCountSet node_counts = {3};
  std::size_t alphabet = 0;
  std::vector<std::string> ids;
  std::vector<int> labels;
  std::vector<FeatureVector> features;
};

inline std::optional<Codebook> codebook_for(std::size_t ell, NodeCountSet ks, std::size_t alphabet) {
  if (ell != 2 && ell != 3) return std::nullopt;
  if (ks.empty() || !ks.subset_of(NodeCountSet{2, 3})) return std::nullopt;
  if (alphabet > 0 && num_label_sequences(alphabet, ell) * 40 > kMaxCodebookSize) return std::nullopt;
  return Codebook(ks, ell, alphabet ? std::optional<std::size_t>(alphabet) : std::nullopt);
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const auto j = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

inline std::string code_token(const GraphletCode& code) {
  return pattern_string(code) + "/" + (code.labeled() ? labels_string(code) : std::string("-"));
}

inline GraphletCode parse_code_token(std::string_view tok, std::size_t line) {
  const auto slash = tok.find('/');
  if (slash == std::string_view::npos) throw ParseError(line, "bad class token");
  GraphletCode code;
  std::stringstream ps{std::string(tok.substr(0, slash))};
  std::string arc;
  while (std::getline(ps, arc, ',')) {
    const auto gt = arc.find('>');
    if (gt == std::string::npos) throw ParseError(line, "bad pattern in class token");
    int s = 0, d = 0;
    if (!parse_int(arc.substr(0, gt), s) || !parse_int(arc.substr(gt + 1), d) || s < 0 || d < 0 || s > 255 ||
        d > 255)
      throw ParseError(line, "bad pattern in class token");
    code.pattern.push_back({static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(d)});
  }
  const auto labels = tok.substr(slash + 1);
  if (labels != "-") {
    std::stringstream ls{std::string(labels)};
    std::string l;
    while (std::getline(ls, l, ',')) {
      int x = 0;
      if (!parse_int(l, x) || x < 0) throw ParseError(line, "bad labels in class token");
      code.labels.push_back(static_cast<Label>(x));
    }
  }
  if (!is_valid_code(code)) throw ParseError(line, "invalid class token");
  return code;
}

}  // namespace detail

inline void write_feature_table(std::ostream& out, const FeatureTable& t) {
  const auto book = codebook_for(t.ell, t.node_counts, t.alphabet);
  out << "# features ell=" << t.ell << " k=" << t.node_counts.to_string() << " alphabet=" << t.alphabet << '\n';
  out << "# labels";
  for (auto l : t.labels) out << ' ' << l;
  out << '\n';
  for (std::size_t i = 0; i < t.features.size(); ++i) {
    out << t.ids[i];
    // codebook order equals code order, so walking the sorted map is enough
    for (const auto& [code, w] : t.features[i]) {
      std::optional<std::size_t> idx;
      if (book) idx = book->index_of(code);
      out << ' ' << (idx ? std::to_string(*idx) : detail::code_token(code)) << ':' << format_double(w);
    }
    out << '\n';
  }
  if (!out) throw IoError("failed to write feature file");
}

inline FeatureTable read_feature_table(std::istream& in) {
  FeatureTable t;
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  std::optional<Codebook> book;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view sv(raw);
    if (sv.empty()) continue;
    if (sv[0] == '#') {
      auto tok = detail::split_ws(sv.substr(1));
      if (!tok.empty() && tok[0] == "features") {
        for (std::size_t i = 1; i < tok.size(); ++i) {
          const auto eq = tok[i].find('=');
          if (eq == std::string_view::npos) throw ParseError(line, "bad feature header");
          const auto key = tok[i].substr(0, eq);
          const auto val = std::string(tok[i].substr(eq + 1));
          int x = 0;
          if (key == "ell") {
            if (!detail::parse_int(val, x) || x < 1) throw ParseError(line, "bad ell");
            t.ell = static_cast<std::size_t>(x);
          } else if (key == "alphabet") {
            if (!detail::parse_int(val, x) || x < 0) throw ParseError(line, "bad alphabet");
            t.alphabet = static_cast<std::size_t>(x);
          } else if (key == "k") {
            t.node_counts = {};
            std::stringstream ks(val);
            std::string k;
            while (std::getline(ks, k, ',')) {
              if (!detail::parse_int(k, x)) throw ParseError(line, "bad k");
              t.node_counts.insert(x);
            }
          }
        }
        have_header = true;
        book = codebook_for(t.ell, t.node_counts, t.alphabet);
      } else if (!tok.empty() && tok[0] == "labels") {
        for (std::size_t i = 1; i < tok.size(); ++i) {
          int x = 0;
          if (!detail::parse_int(tok[i], x)) throw ParseError(line, "bad class label");
          t.labels.push_back(x);
        }
      }
      continue;
    }
    if (!have_header) throw ParseError(line, "feature file lacks its '# features' header");
    auto tok = detail::split_ws(sv);
    if (tok.empty()) continue;
    t.ids.emplace_back(tok[0]);
    FeatureVector fv;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      const auto colon = tok[i].rfind(':');
      if (colon == std::string_view::npos) throw ParseError(line, "expected <class>:<value>");
      const auto key = tok[i].substr(0, colon);
      const auto val = tok[i].substr(colon + 1);
      double w = 0;
      auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), w);
      if (ec != std::errc{} || p != val.data() + val.size()) throw ParseError(line, "invalid feature value");
      if (key.find('/') != std::string_view::npos) {
        fv.add(detail::parse_code_token(key, line), w);
      } else {
        int idx = 0;
        if (!book || !detail::parse_int(key, idx) || idx < 0 || static_cast<std::size_t>(idx) >= book->size())
          throw ParseError(line, "class index out of range");
        fv.add((*book)[static_cast<std::size_t>(idx)], w);
      }
    }
    t.features.push_back(std::move(fv));
  }
  if (t.labels.empty()) t.labels.assign(t.ids.size(), 0);
  if (t.labels.size() != t.ids.size()) throw ParseError(0, "label count does not match the graph count");
  return t;
}

inline FeatureTable read_feature_table(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return read_feature_table(in);
}

inline FeatureTable make_feature_table(const Dataset& ds, const FeatureSpec& spec, std::vector<FeatureVector> fs) {
  FeatureTable t;
  t.ell = spec.count.ell;
  t.node_counts = effective_node_counts(spec);
  t.alphabet = spec.count.labeled ? ds.alphabet_size() : 0;
  t.ids = ds.ids();
  t.labels = ds.class_labels();
  t.features = std::move(fs);
  return t;
}

inline GramMatrix gram_from_table(const FeatureTable& t, GramMode mode, std::size_t threads) {
  std::vector<FeatureVector> normalized;
  normalized.reserve(t.features.size());
  for (const auto& f : t.features) normalized.push_back(normalize_l1(f));
  return gram_matrix(normalized, mode, t.ids, t.labels, threads);
}

// ---------------------------------------------------------------------------
// Oracle verification

struct VerifySpec {
  std::vector<TimeWindow> deltas = {TimeWindow::of(1), TimeWindow::of(5), TimeWindow::unbounded()};
  bool labeled = true;
  std::size_t max_edges = 64;
  bool inject_fault = false;  // harness self-test: corrupt the fast result
};

struct VerifyCase {
  std::string name;
  CountConfig cfg;
  CountFamily family;
};

inline std::vector<VerifyCase> verify_cases(const VerifySpec& spec) {
  std::vector<VerifyCase> out;
  for (auto d : spec.deltas) {
    auto cfg = [&](std::size_t ell, NodeCountSet ks) {
      CountConfig c;
      c.delta = d;
      c.ell = ell;
      c.node_counts = ks;
      c.labeled = spec.labeled;
      return c;
    };
    out.push_back({"wedge", cfg(2, {3}), CountFamily::Wedge});
    out.push_back({"star", cfg(3, {3}), CountFamily::Star});
    out.push_back({"triangle", cfg(3, {3}), CountFamily::Triangle});
    out.push_back({"general-l2", cfg(2, {2, 3}), CountFamily::All});
    out.push_back({"general-l3", cfg(3, {2, 3}), CountFamily::All});
  }
  return out;
}

struct VerifyMismatch {
  std::string graph_id;
  std::string counter;
  std::string delta;
  GraphletCode code;
  double fast = 0;
  double oracle = 0;

  std::string describe() const {
    return "mismatch on graph '" + graph_id + "', counter " + counter + ", delta " + delta + ", class " +
           to_string(code) + ": fast " + format_double(fast) + " vs oracle " + format_double(oracle);
  }
};

inline std::optional<VerifyMismatch> first_difference(const FeatureVector& fast, const FeatureVector& oracle) {
  auto i = fast.begin(), j = oracle.begin();
  while (i != fast.end() || j != oracle.end()) {
    VerifyMismatch m;
    if (j == oracle.end() || (i != fast.end() && i->first < j->first)) {
      m.code = i->first;
      m.fast = i->second;
      return m;
    }
    if (i == fast.end() || j->first < i->first) {
      m.code = j->first;
      m.oracle = j->second;
      return m;
    }
    if (i->second != j->second) {
      m.code = i->first;
      m.fast = i->second;
      m.oracle = j->second;
      return m;
    }
    ++i;
    ++j;
  }
  return std::nullopt;
}

/// Compares every fast counter with the brute-force oracle. Returns the first
/// mismatch in dataset order, or nullopt when all agree.
inline std::optional<VerifyMismatch> verify_dataset(const Dataset& ds, const VerifySpec& spec, std::size_t threads) {
  const auto cases = verify_cases(spec);
  std::vector<std::optional<VerifyMismatch>> found(ds.size());
  parallel_for(ds.size(), threads, [&](std::size_t i) {
    const auto& lg = ds.graphs[i];
    in_stage("verify", lg.id, [&] {
      for (const auto& c : cases) {
        auto fast = count_exact(lg.graph, c.cfg, c.family);
        const auto oracle = count_exact_oracle(lg.graph, c.cfg, c.family, spec.max_edges);
        if (spec.inject_fault) {
          if (!fast.empty())
            fast.add(fast.begin()->first, 1.0);
          else
            fast.add(GraphletCode{{{0, 1}, {1, 2}}, {}}, 1.0);
        }
        if (auto m = first_difference(fast, oracle)) {
          m->graph_id = lg.id;
          m->counter = c.name;
          m->delta = c.cfg.delta.to_string();
          found[i] = std::move(m);
          return 0;
        }
      }
      return 0;
    });
  });
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

/// Seeded random multigraphs: `count` graphs on `nodes` nodes with up to
/// `max_edges` edges, times in [1, max_time], random label timelines.
inline Dataset random_dataset(std::size_t count, std::size_t nodes, std::size_t max_edges, std::size_t alphabet,
                              Timestamp max_time, std::uint64_t seed) {
  if (nodes < 2) throw InputError("random graphs need at least two nodes");
  if (alphabet < 1) throw InputError("alphabet must be >= 1");
  Dataset ds;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = make_stream(seed, i);
    const auto m = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(max_edges)));
    std::vector<TemporalEdge> es;
    while (es.size() < m) {
      const auto u = static_cast<NodeId>(uniform_below(rng, nodes));
      const auto v = static_cast<NodeId>(uniform_below(rng, nodes));
      if (u != v) es.push_back({u, v, uniform_int(rng, 1, max_time)});
    }
    std::vector<LabelTimeline> tls;
    for (std::size_t v = 0; v < nodes; ++v) {
      std::vector<LabelEvent> ev;
      const auto n_ev = uniform_below(rng, 3);
      Timestamp t = 0;
      for (std::uint64_t e = 0; e < n_ev; ++e) {
        t += uniform_int(rng, 1, std::max<Timestamp>(1, max_time / 2));
        ev.push_back({t, static_cast<Label>(uniform_below(rng, alphabet))});
      }
      tls.emplace_back(static_cast<Label>(uniform_below(rng, alphabet)), std::move(ev));
    }
    std::string num = std::to_string(i);
    ds.add("r" + std::string(num.size() < 4 ? 4 - num.size() : 0, '0') + num, TemporalGraph(nodes, std::move(es), std::move(tls), alphabet), 0);
  }
  return ds;
}

// ---------------------------------------------------------------------------
// Timing

using Clock = std::chrono::steady_clock;

inline double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

inline double median(std::vector<double> xs) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  const auto n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

struct BenchSpec {
  std::vector<TimeWindow> deltas = {TimeWindow::unbounded()};
  std::vector<std::size_t> samples = {100, 200};
  bool exact = true;
  std::size_t repetitions = 5;
  bool labeled = true;
  std::uint64_t seed = 0;
};

struct BenchRow {
  std::string method;
  std::string delta;
  std::size_t samples = 0;  // 0 for exact
  double time_ms = 0;
  bool stable = true;
};

/// Median wall time per method over repetitions, summed over the dataset's
/// graphs; single-threaded so rows are comparable.
inline std::vector<BenchRow> run_bench(const Dataset& ds, const BenchSpec& spec) {
  if (spec.repetitions < 1) throw InputError("--repetitions must be >= 1");
  std::vector<BenchRow> rows;
  auto time_it = [&](auto&& body) {
    std::vector<double> ts;
    for (std::size_t r = 0; r < spec.repetitions; ++r) {
      const auto t0 = Clock::now();
      body(r);
      ts.push_back(elapsed_ms(t0));
    }
    return median(ts);
  };
  for (auto d : spec.deltas) {
    if (spec.exact) {
      BenchRow row{"exact-wedge", d.to_string(), 0, 0, spec.repetitions > 1};
      row.time_ms = time_it([&](std::size_t) {
        for (const auto& g : ds.graphs) (void)count_wedges(g.graph, d, spec.labeled);
      });
      rows.push_back(row);
    }
    for (auto s : spec.samples) {
      BenchRow row{"approx", d.to_string(), s, 0, spec.repetitions > 1};
      SampleConfig sc;
      sc.samples = s;
      sc.delta = d;
      sc.labeled = spec.labeled;
      row.time_ms = time_it([&](std::size_t r) {
        for (std::size_t i = 0; i < ds.size(); ++i) {
          Rng rng = make_stream(spec.seed + r, i);
          in_stage("bench", ds.graphs[i].id, [&] { return approximate_wedges(ds.graphs[i].graph, sc, rng); });
        }
      });
      rows.push_back(row);
    }
  }
  return rows;
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "method,delta,s,time_ms,stability\n";
  for (const auto& r : rows)
    out << r.method << ',' << r.delta << ',' << (r.samples ? std::to_string(r.samples) : std::string("-")) << ','
        << format_double(r.time_ms) << ',' << (r.stable ? "stable" : "unstable") << '\n';
}

// ---------------------------------------------------------------------------
// Run manifests

/// FNV-1a over file contents; directories hash their sorted relative paths and
/// file contents.
inline std::uint64_t digest_path(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](std::string_view bytes) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  auto feed_file = [&](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot read '" + p.string() + "'");
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    feed(buf);
  };
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(path))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      feed(fs::relative(f, path).generic_string());
      feed_file(f);
    }
  } else if (fs::exists(path)) {
    feed_file(path);
  } else {
    // TU prefixes name a family of files
    const auto dir = path.parent_path().empty() ? fs::path(".") : path.parent_path();
    const auto stem = path.filename().string();
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().filename().string().starts_with(stem)) files.push_back(e.path());
    if (files.empty()) throw LoadError("no input at '" + path.string() + "'");
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      feed(f.filename().string());
      feed_file(f);
    }
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

struct RunManifest {
  std::vector<std::string> command_line;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  nlohmann::ordered_json seeds = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::vector<std::pair<std::string, double>> timings_ms;   // phase, wall ms

  void add_input(const std::filesystem::path& p) { inputs.emplace_back(p.string(), "fnv1a64:" + hex64(digest_path(p))); }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command_line"] = command_line;
    j["version"] = std::string(kVersion);
    j["config"] = config;
    j["seeds"] = seeds;
    j["inputs"] = nlohmann::ordered_json::array();
    for (const auto& [p, d] : inputs) j["inputs"].push_back({{"path", p}, {"digest", d}});
    j["timings_ms"] = nlohmann::ordered_json::object();
    for (const auto& [phase, ms] : timings_ms) j["timings_ms"][phase] = ms;
    return j;
  }
};

inline constexpr std::string_view kManifestName = "run_manifest.json";

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

inline void write_run_manifest(const std::filesystem::path& dir, const RunManifest& m) {
  write_text(dir / kManifestName, m.to_json().dump(2) + "\n");
}

}  // namespace tgk
