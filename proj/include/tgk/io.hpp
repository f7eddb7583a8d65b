#pragma once

// Text formats for temporal graphs and datasets.
//
// Canonical graph format, line oriented, '#' starts a comment:
//   t <num_nodes> <num_edges> <L>
//   e <source> <target> <time>
//   l <node> <time> <label>
// Nodes without a preceding label event carry label 0.
//
// Dataset manifest: one `<graph-file> <class-label>` per line, paths relative to
// the manifest. The graph id is the file name without extension.
//
// TU-style bundle, for a prefix P:
//   P_A.txt                one `u, v` per edge, 1-based global node ids
//   P_graph_indicator.txt  line i holds the 1-based graph id of node i
//   P_graph_labels.txt     one class label per graph
//   P_edge_attributes.txt  one timestamp per line of P_A.txt
//   P_node_labels.txt      per node: `time, label` pairs; an odd count means the
//                          first value is the default label

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tgk/error.hpp"
#include "tgk/tgraph.hpp"

namespace tgk {

namespace detail {

inline std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

/// Splits on whitespace and commas.
inline std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\n'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view s, Int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

template <typename Int>
Int expect_int(std::string_view s, std::size_t line, const char* what) {
  Int v{};
  if (!parse_int(s, v)) throw ParseError(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
  return v;
}

inline std::ifstream open_input(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw LoadError("cannot open '" + p.string() + "'");
  return in;
}

}  // namespace detail

/// Parses one graph in the canonical text format. Edges are sorted on load.
inline TemporalGraph read_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t header_line = 0;
  std::size_t num_nodes = 0, num_edges = 0, alphabet = 1;
  std::vector<TemporalEdge> edges;
  std::vector<std::vector<LabelEvent>> events;

  while (std::getline(in, raw)) {
    ++line_no;
    auto tok = detail::tokenize(detail::strip_comment(raw));
    if (tok.empty()) continue;
    if (tok[0] == "t") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 4) throw ParseError(line_no, "header must be 't <nodes> <edges> <L>'");
      num_nodes = detail::expect_int<std::size_t>(tok[1], line_no, "node count");
      num_edges = detail::expect_int<std::size_t>(tok[2], line_no, "edge count");
      alphabet = detail::expect_int<std::size_t>(tok[3], line_no, "alphabet size");
      if (alphabet == 0) throw ParseError(line_no, "alphabet size must be >= 1");
      have_header = true;
      header_line = line_no;
      events.assign(num_nodes, {});
      edges.reserve(num_edges);
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (tok.size() != 4) throw ParseError(line_no, "edge must be 'e <source> <target> <time>'");
      auto u = detail::expect_int<NodeId>(tok[1], line_no, "source");
      auto v = detail::expect_int<NodeId>(tok[2], line_no, "target");
      auto t = detail::expect_int<Timestamp>(tok[3], line_no, "time");
      if (u >= num_nodes || v >= num_nodes) throw ParseError(line_no, "endpoint exceeds declared node count");
      if (u == v) throw ParseError(line_no, "self-loop");
      if (t < 0) throw ParseError(line_no, "negative timestamp");
      edges.push_back({u, v, t});
    } else if (tok[0] == "l") {
      if (!have_header) throw ParseError(line_no, "label event before header");
      if (tok.size() != 4) throw ParseError(line_no, "label event must be 'l <node> <time> <label>'");
      auto v = detail::expect_int<NodeId>(tok[1], line_no, "node");
      auto t = detail::expect_int<Timestamp>(tok[2], line_no, "time");
      auto l = detail::expect_int<Label>(tok[3], line_no, "label");
      if (v >= num_nodes) throw ParseError(line_no, "node exceeds declared node count");
      if (t < 0) throw ParseError(line_no, "negative timestamp");
      if (l >= alphabet) throw ParseError(line_no, "label exceeds alphabet size");
      events[v].push_back({t, l});
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (edges.size() != num_edges)
    throw ParseError(header_line, "header declares " + std::to_string(num_edges) + " edges, found " +
                                      std::to_string(edges.size()));

  std::vector<LabelTimeline> timelines;
  timelines.reserve(num_nodes);
  for (NodeId v = 0; v < num_nodes; ++v) {
    auto& ev = events[v];
    std::stable_sort(ev.begin(), ev.end(),
                     [](const LabelEvent& a, const LabelEvent& b) { return a.time < b.time; });
    for (std::size_t i = 1; i < ev.size(); ++i) {
      if (ev[i].time == ev[i - 1].time)
        throw ParseError(0, "node " + std::to_string(v) + " has two label events at time " +
                                std::to_string(ev[i].time));
    }
    timelines.emplace_back(0, std::move(ev));
  }
  return TemporalGraph(num_nodes, std::move(edges), std::move(timelines), alphabet);
}

inline TemporalGraph read_graph(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  try {
    return read_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

inline TemporalGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

/// Writes the canonical format. A nonzero default label is written as an event
/// at time 0, which is equivalent for every nonnegative time.
inline void write_graph(std::ostream& out, const TemporalGraph& g) {
  out << "t " << g.num_nodes() << ' ' << g.num_edges() << ' ' << g.alphabet_size() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.source << ' ' << e.target << ' ' << e.time << '\n';
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto& tl = g.timeline(v);
    auto ev = tl.events();
    if (tl.default_label() != 0 && (ev.empty() || ev.front().time != 0))
      out << "l " << v << " 0 " << tl.default_label() << '\n';
    for (const auto& e : ev) out << "l " << v << ' ' << e.time << ' ' << e.label << '\n';
  }
  if (!out) throw IoError("failed to write graph");
}

inline std::string format_graph(const TemporalGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

/// Reads a manifest of `<graph-file> <class-label>` lines.
inline Dataset load_manifest(const std::filesystem::path& manifest) {
  auto in = detail::open_input(manifest);
  const auto base = manifest.parent_path();
  Dataset ds;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tok = detail::tokenize(detail::strip_comment(raw));
    if (tok.empty()) continue;
    if (tok.size() != 2) throw LoadError(manifest.string() + ":" + std::to_string(line_no) +
                                         ": expected '<graph-file> <class-label>'");
    int label = 0;
    if (!detail::parse_int(tok[1], label))
      throw LoadError(manifest.string() + ":" + std::to_string(line_no) + ": invalid class label");
    std::filesystem::path file = base / std::string(tok[0]);
    if (!std::filesystem::exists(file)) {
      auto with_ext = file;
      with_ext += ".tg";
      if (!std::filesystem::exists(with_ext))
        throw LoadError("manifest references missing graph '" + std::string(tok[0]) + "'");
      file = with_ext;
    }
    ds.add(file.stem().string(), read_graph(file), label);
  }
  return ds;
}

struct TuFileNames {
  std::string adjacency = "_A.txt";
  std::string graph_indicator = "_graph_indicator.txt";
  std::string graph_labels = "_graph_labels.txt";
  std::string edge_times = "_edge_attributes.txt";
  std::string node_labels = "_node_labels.txt";
};

/// Loads a TU-style bundle rooted at `prefix` (a path such as `dir/infectious`).
inline Dataset load_tu_dataset(const std::filesystem::path& prefix, const TuFileNames& names = {}) {
  auto file = [&](const std::string& suffix) {
    auto p = prefix;
    p += suffix;
    return p;
  };
  auto read_lines = [&](const std::string& suffix, bool required) {
    std::vector<std::string> lines;
    auto p = file(suffix);
    if (!std::filesystem::exists(p)) {
      if (required) throw LoadError("missing TU file '" + p.string() + "'");
      return lines;
    }
    auto in = detail::open_input(p);
    std::string raw;
    while (std::getline(in, raw)) lines.push_back(raw);
    while (!lines.empty() && detail::tokenize(lines.back()).empty()) lines.pop_back();
    return lines;
  };
  auto err = [&](const std::string& suffix, std::size_t line, const std::string& what) {
    return LoadError(file(suffix).string() + ":" + std::to_string(line) + ": " + what);
  };

  const auto indicator = read_lines(names.graph_indicator, true);
  const auto class_lines = read_lines(names.graph_labels, true);
  const auto adjacency = read_lines(names.adjacency, true);
  const auto times = read_lines(names.edge_times, true);
  const auto node_labels = read_lines(names.node_labels, false);

  const std::size_t total_nodes = indicator.size();
  const std::size_t num_graphs = class_lines.size();
  std::vector<std::size_t> graph_of(total_nodes);
  std::vector<NodeId> local_id(total_nodes);
  std::vector<std::size_t> graph_sizes(num_graphs, 0);
  for (std::size_t i = 0; i < total_nodes; ++i) {
    auto tok = detail::tokenize(indicator[i]);
    std::size_t gid = 0;
    if (tok.size() != 1 || !detail::parse_int(tok[0], gid) || gid < 1 || gid > num_graphs)
      throw err(names.graph_indicator, i + 1, "invalid graph id");
    graph_of[i] = gid - 1;
    local_id[i] = static_cast<NodeId>(graph_sizes[gid - 1]++);
  }

  std::vector<int> classes(num_graphs);
  for (std::size_t g = 0; g < num_graphs; ++g) {
    auto tok = detail::tokenize(class_lines[g]);
    if (tok.size() != 1 || !detail::parse_int(tok[0], classes[g]))
      throw err(names.graph_labels, g + 1, "invalid class label");
  }

  if (times.size() != adjacency.size())
    throw LoadError("edge attribute file has " + std::to_string(times.size()) + " lines, adjacency has " +
                    std::to_string(adjacency.size()));
  std::vector<std::vector<TemporalEdge>> edges(num_graphs);
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    auto tok = detail::tokenize(adjacency[i]);
    std::size_t u = 0, v = 0;
    if (tok.size() != 2 || !detail::parse_int(tok[0], u) || !detail::parse_int(tok[1], v) || u < 1 ||
        v < 1 || u > total_nodes || v > total_nodes)
      throw err(names.adjacency, i + 1, "invalid edge");
    --u;
    --v;
    if (graph_of[u] != graph_of[v]) throw err(names.adjacency, i + 1, "edge spans two graphs");
    if (u == v) throw err(names.adjacency, i + 1, "self-loop");
    auto ttok = detail::tokenize(times[i]);
    Timestamp t = 0;
    if (ttok.empty() || !detail::parse_int(ttok[0], t) || t < 0)
      throw err(names.edge_times, i + 1, "invalid timestamp");
    edges[graph_of[u]].push_back({local_id[u], local_id[v], t});
  }

  std::vector<std::vector<LabelTimeline>> timelines(num_graphs);
  for (std::size_t g = 0; g < num_graphs; ++g) timelines[g].resize(graph_sizes[g]);
  Label max_label = 0;
  if (!node_labels.empty()) {
    if (node_labels.size() != total_nodes)
      throw LoadError("node label file must have one line per node");
    for (std::size_t i = 0; i < total_nodes; ++i) {
      auto tok = detail::tokenize(node_labels[i]);
      std::vector<std::int64_t> vals(tok.size());
      for (std::size_t k = 0; k < tok.size(); ++k) {
        if (!detail::parse_int(tok[k], vals[k]) || vals[k] < 0)
          throw err(names.node_labels, i + 1, "invalid value");
      }
      std::size_t pos = 0;
      Label def = 0;
      if (vals.size() % 2 == 1) def = static_cast<Label>(vals[pos++]);
      std::vector<LabelEvent> ev;
      for (; pos < vals.size(); pos += 2) ev.push_back({vals[pos], static_cast<Label>(vals[pos + 1])});
      std::stable_sort(ev.begin(), ev.end(), [](auto& a, auto& b) { return a.time < b.time; });
      for (std::size_t k = 1; k < ev.size(); ++k) {
        if (ev[k].time == ev[k - 1].time) throw err(names.node_labels, i + 1, "duplicate event time");
      }
      max_label = std::max(max_label, def);
      for (const auto& e : ev) max_label = std::max(max_label, e.label);
      timelines[graph_of[i]][local_id[i]] = LabelTimeline(def, std::move(ev));
    }
  }

  Dataset ds;
  ds.meta.task = "tu";
  ds.meta.params["prefix"] = prefix.filename().string();
  const std::size_t alphabet = static_cast<std::size_t>(max_label) + 1;
  for (std::size_t g = 0; g < num_graphs; ++g) {
    ds.add(prefix.filename().string() + "_" + std::to_string(g),
           TemporalGraph(graph_sizes[g], std::move(edges[g]), std::move(timelines[g]), alphabet),
           classes[g]);
  }
  return ds;
}

/// Loads a dataset from a directory holding `manifest.txt`, a manifest file, a
/// TU-style prefix, or a single canonical graph file (class label 0).
inline Dataset load_dataset(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  if (fs::is_directory(path)) {
    if (fs::exists(path / "manifest.txt")) return load_manifest(path / "manifest.txt");
    throw LoadError("directory '" + path.string() + "' has no manifest.txt");
  }
  auto tu_adj = path;
  tu_adj += TuFileNames{}.adjacency;
  if (!fs::exists(path) && fs::exists(tu_adj)) return load_tu_dataset(path);
  if (!fs::exists(path)) throw LoadError("no dataset at '" + path.string() + "'");

  // Sniff the first record: a graph file starts with its header.
  auto in = detail::open_input(path);
  std::string raw;
  while (std::getline(in, raw)) {
    auto tok = detail::tokenize(detail::strip_comment(raw));
    if (tok.empty()) continue;
    if (tok[0] == "t" && tok.size() == 4) {
      Dataset ds;
      ds.add(path.stem().string(), read_graph(path), 0);
      return ds;
    }
    break;
  }
  return load_manifest(path);
}

/// Writes `<id>.tg` per graph plus `manifest.txt` into `dir`.
inline void save_dataset(const std::filesystem::path& dir, const Dataset& ds) {
  std::filesystem::create_directories(dir);
  std::ofstream manifest(dir / "manifest.txt");
  if (!manifest) throw IoError("cannot write manifest in '" + dir.string() + "'");
  for (const auto& g : ds.graphs) {
    const auto name = g.id + ".tg";
    std::ofstream out(dir / name);
    if (!out) throw IoError("cannot write '" + (dir / name).string() + "'");
    write_graph(out, g.graph);
    manifest << name << ' ' << g.class_label << '\n';
  }
  if (!manifest) throw IoError("failed writing manifest");
}

}  // namespace tgk
