// tgk: command-line driver for temporal graphlet counting, kernels and the
// dissemination task generator.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "tgk/tgk.hpp"

namespace fs = std::filesystem;
using namespace tgk;

namespace {

struct Globals {
  std::size_t threads = 0;
  std::uint64_t seed = 0;
  bool quiet = false;
  std::vector<std::string> argv;
} globals;

void info(const std::string& msg) {
  if (!globals.quiet) std::cerr << msg << '\n';
}

TimeWindow parse_window(const std::string& s) {
  if (s == "inf" || s == "unbounded" || s == "none") return TimeWindow::unbounded();
  long long x = 0;
  if (!detail::parse_int(std::string_view(s), x)) throw InputError("invalid delta '" + s + "'");
  return TimeWindow::of(x);
}

std::vector<TimeWindow> parse_windows(const std::vector<std::string>& xs) {
  std::vector<TimeWindow> out;
  for (const auto& x : xs) out.push_back(parse_window(x));
  return out;
}

CountFamily parse_family(const std::string& s) {
  if (s == "wedge") return CountFamily::Wedge;
  if (s == "star") return CountFamily::Star;
  if (s == "triangle") return CountFamily::Triangle;
  if (s == "all") return CountFamily::All;
  throw InputError("unknown family '" + s + "'");
}

NodeCountSet parse_ks(const std::vector<int>& ks) {
  NodeCountSet out;
  for (int k : ks) out.insert(k);
  if (out.empty()) throw InputError("--k needs at least one node count");
  return out;
}

// Counting flags shared by count, approx, gram and pipeline.
struct CountOpts {
  std::string delta = "inf";
  std::size_t ell = 2;
  std::vector<int> k{3};
  std::string family = "all";
  bool labeled = true;
  bool include_two_node = false;
  // approx
  std::string method = "exact";
  std::size_t samples = 1000;
  bool rejection = true;
  bool strict_paper = false;
  std::string acceptance = "corrected";
  std::uint64_t attempt_factor = 1000;

  void add_exact(CLI::App* app, bool with_delta = true) {
    if (with_delta) app->add_option("--delta", delta, "time window (integer >= 1 or 'inf')")->capture_default_str();
    app->add_option("--ell", ell, "edges per graphlet")->capture_default_str();
    app->add_option("--k", k, "node counts, comma separated")->delimiter(',')->capture_default_str();
    app->add_option("--family", family, "wedge|star|triangle|all")->capture_default_str();
    app->add_flag("--labeled,!--unlabeled", labeled, "use node labels (default on)");
    app->add_flag("--include-two-node", include_two_node, "add the k = 2 classes");
  }
  void add_sampling(CLI::App* app) {
    app->add_option("--samples", samples, "wedge samples per graph")->capture_default_str();
    app->add_flag("--rejection,!--no-rejection", rejection, "rejection step for windowed sampling (default on)");
    app->add_flag("--strict-paper", strict_paper, "weight 1/s per wedge, non-wedge draws lost");
    app->add_option("--acceptance", acceptance, "corrected|literal")->capture_default_str();
    app->add_option("--attempt-factor", attempt_factor, "draw budget per requested sample")->capture_default_str();
  }

  FeatureSpec spec() const {
    FeatureSpec s;
    if (method == "exact")
      s.method = FeatureMethod::Exact;
    else if (method == "approx")
      s.method = FeatureMethod::Approx;
    else if (method == "oracle")
      s.method = FeatureMethod::Oracle;
    else
      throw InputError("unknown method '" + method + "'");
    s.count.delta = parse_window(delta);
    s.count.ell = ell;
    s.count.node_counts = parse_ks(k);
    s.count.labeled = labeled;
    s.family = parse_family(family);
    s.include_two_node = include_two_node;
    s.sample.samples = samples;
    s.sample.rejection = rejection;
    s.sample.strict_paper = strict_paper;
    s.sample.seed = globals.seed;
    s.sample.attempt_factor = attempt_factor;
    if (acceptance == "corrected")
      s.sample.acceptance = AcceptanceRule::Corrected;
    else if (acceptance == "literal")
      s.sample.acceptance = AcceptanceRule::Literal;
    else
      throw InputError("unknown acceptance rule '" + acceptance + "'");
    check_feature_spec(s);
    return s;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["method"] = method;
    j["delta"] = delta;
    j["ell"] = ell;
    j["k"] = k;
    j["family"] = family;
    j["labeled"] = labeled;
    j["include_two_node"] = include_two_node;
    if (method == "approx") {
      j["samples"] = samples;
      j["rejection"] = rejection;
      j["strict_paper"] = strict_paper;
      j["acceptance"] = acceptance;
      j["attempt_factor"] = attempt_factor;
    }
    return j;
  }
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
  } else {
    write_text(out_path, text);
  }
}

GramMode parse_mode(const std::string& s) {
  if (s == "l1") return GramMode::L1;
  if (s == "cosine") return GramMode::Cosine;
  throw InputError("unknown gram mode '" + s + "'");
}

GramFormat parse_format(const std::string& s) {
  if (s == "csv") return GramFormat::Csv;
  if (s == "svm") return GramFormat::Svm;
  throw InputError("unknown gram format '" + s + "'");
}

std::string gram_text(const GramMatrix& K, GramFormat f) {
  std::ostringstream out;
  export_gram(K, f, out);
  return out.str();
}

bool is_feature_file(const fs::path& p) {
  if (!fs::is_regular_file(p)) return false;
  std::ifstream in(p);
  std::string first;
  std::getline(in, first);
  return first.starts_with("# features");
}

// ---------------------------------------------------------------------------

int run_classes(std::size_t ell, const std::vector<int>& k, std::size_t alphabet, bool labeled) {
  Codebook book(parse_ks(k), ell, labeled ? std::optional<std::size_t>(alphabet) : std::nullopt);
  std::ostringstream out;
  for (std::size_t i = 0; i < book.size(); ++i)
    out << i << ' ' << to_string(family_of(book[i])) << ' ' << pattern_string(book[i]) << ' '
        << labels_string(book[i]) << '\n';
  emit("", out.str());
  return 0;
}

int run_count(const std::string& input, const CountOpts& opts, bool force, const std::string& out_path) {
  auto spec = opts.spec();
  if (force) spec.oracle_max_edges = std::numeric_limits<std::size_t>::max();
  const auto ds = load_dataset(input);
  const auto t0 = Clock::now();
  auto fs = compute_features(ds, spec, globals.threads);
  info("counted " + std::to_string(ds.size()) + " graphs in " + format_double(elapsed_ms(t0)) + " ms");
  std::ostringstream out;
  write_feature_table(out, make_feature_table(ds, spec, std::move(fs)));
  emit(out_path, out.str());
  return 0;
}

struct AutoSamples {
  bool enabled = false;
  double lambda = 0.1;
  double confidence = 0.05;
};

std::size_t auto_sample_size(const Dataset& ds, const CountOpts& opts, const AutoSamples& a) {
  const std::size_t L = ds.empty() ? 1 : ds.alphabet_size();
  const auto W = Codebook({3}, 2, opts.labeled ? std::optional<std::size_t>(L) : std::nullopt).size();
  const auto s = required_sample_size(std::max<std::size_t>(1, ds.size()), W, a.lambda, a.confidence);
  info("auto samples: s = " + std::to_string(s) + " for " + std::to_string(ds.size()) + " graphs, " +
       std::to_string(W) + " wedge classes");
  return s;
}

int run_approx(const std::string& input, CountOpts opts, const AutoSamples& autos, const std::string& out_path) {
  opts.method = "approx";
  if (opts.family == "all") opts.family = "wedge";
  (void)opts.spec();  // flag checks before loading
  const auto ds = load_dataset(input);
  if (autos.enabled) opts.samples = auto_sample_size(ds, opts, autos);
  const auto spec = opts.spec();
  auto fs = compute_features(ds, spec, globals.threads);
  std::ostringstream out;
  write_feature_table(out, make_feature_table(ds, spec, std::move(fs)));
  emit(out_path, out.str());
  return 0;
}

struct KernelOpts {
  std::string mode = "l1";
  std::string format = "csv";
  bool psd_check = false;
  bool loo = false;
  double min_accuracy = -1;

  void add(CLI::App* app) {
    app->add_option("--mode", mode, "l1|cosine")->capture_default_str();
    app->add_option("--format", format, "csv|svm")->capture_default_str();
    app->add_flag("--psd-check", psd_check, "check the minimum eigenvalue (tolerance 1e-8)");
    app->add_flag("--loo", loo, "report leave-one-out 1-NN accuracy");
    app->add_option("--min-accuracy", min_accuracy, "exit 1 if the LOO accuracy is lower");
  }
};

// Reports PSD and LOO results; returns 1 on a failed check.
int kernel_reports(const GramMatrix& K, const KernelOpts& k, std::ostream& report, nlohmann::ordered_json* j) {
  int status = 0;
  if (k.psd_check) {
    const auto r = check_psd(K, 1e-8);
    report << "psd " << (r.passed ? "pass" : "fail") << " min_eigenvalue=" << format_double(r.min_eigenvalue)
           << " tolerance=" << format_double(r.tolerance) << '\n';
    if (j) (*j)["psd"] = {{"min_eigenvalue", r.min_eigenvalue}, {"tolerance", r.tolerance}, {"passed", r.passed}};
    if (!r.passed) status = 1;
  }
  if (k.loo || k.min_accuracy >= 0) {
    const double acc = loo_1nn_accuracy(K);
    report << "loo_1nn_accuracy " << format_double(acc) << '\n';
    if (j) (*j)["loo_1nn_accuracy"] = acc;
    if (acc < k.min_accuracy) status = 1;
  }
  return status;
}

int run_gram(const std::string& input, const CountOpts& opts, const KernelOpts& kopts, const std::string& out_path) {
  const auto mode = parse_mode(kopts.mode);
  const auto format = parse_format(kopts.format);
  FeatureTable table;
  if (is_feature_file(input)) {
    table = read_feature_table(fs::path(input));
  } else {
    const auto spec = opts.spec();
    const auto ds = load_dataset(input);
    table = make_feature_table(ds, spec, compute_features(ds, spec, globals.threads));
  }
  const auto K = gram_from_table(table, mode, globals.threads);
  emit(out_path, gram_text(K, format));
  std::ostream& report = out_path.empty() || out_path == "-" ? std::cerr : std::cout;
  return kernel_reports(K, kopts, report, nullptr);
}

struct SimOpts {
  int task = 2;
  double p = 0.5, p1 = 0.2, p2 = 0.8;
  double missing_fraction = 0;
  int base_task = 2;
  std::size_t num_seeds = kDefaultTaskSeeds;
  std::string bases;
  std::vector<long long> ba;
  std::string out;
};

int run_simulate(const SimOpts& o) {
  if (o.task < 1 || o.task > 3) throw InputError("--task must be 1, 2 or 3");
  if (o.base_task != 1 && o.base_task != 2) throw InputError("--base-task must be 1 or 2");
  if (o.bases.empty() == o.ba.empty()) throw InputError("pass exactly one of --bases and --ba");
  if (o.task != 3 && o.missing_fraction != 0) throw InputError("--missing-fraction applies to task 3 only");
  std::vector<TemporalGraph> bases;
  RunManifest m;
  m.command_line = globals.argv;
  if (!o.ba.empty()) {
    if (o.ba.size() != 4 || o.ba[0] < 2 || o.ba[1] < 1 || o.ba[2] < 0 || o.ba[3] < 1)
      throw InputError("--ba expects n,m,tmax,count");
    bases = generate_ba_family(static_cast<std::size_t>(o.ba[3]), static_cast<std::size_t>(o.ba[0]),
                               static_cast<std::size_t>(o.ba[1]), o.ba[2], splitmix64(globals.seed));
    m.seeds["ba"] = splitmix64(globals.seed);
  } else {
    for (auto& g : load_dataset(o.bases).graphs) bases.push_back(std::move(g.graph));
    m.add_input(o.bases);
  }
  TaskConfig tc;
  tc.task = static_cast<Task>(o.task);
  tc.base_task = static_cast<Task>(o.base_task);
  tc.p = o.p;
  tc.p1 = o.p1;
  tc.p2 = o.p2;
  tc.missing_fraction = o.missing_fraction;
  tc.num_seeds = o.num_seeds;
  tc.rng_seed = globals.seed;
  const auto t0 = Clock::now();
  const auto ds = make_task(bases, tc);
  m.timings_ms.emplace_back("simulate", elapsed_ms(t0));
  m.seeds["task"] = globals.seed;
  m.config = {{"task", o.task},
              {"p", o.p},
              {"p1", o.p1},
              {"p2", o.p2},
              {"missing_fraction", o.missing_fraction},
              {"base_task", o.base_task},
              {"num_seeds", o.num_seeds}};
  if (!o.ba.empty()) m.config["ba"] = o.ba;

  const auto t1 = Clock::now();
  save_dataset(o.out, ds);
  std::ostringstream meta;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& g = ds.graphs[i];
    nlohmann::ordered_json j;
    j["id"] = g.id;
    j["class"] = g.class_label;
    j["task"] = ds.meta.task;
    j["base_index"] = i / 2;
    j["params"] = ds.meta.params;
    j["seed"] = ds.meta.seed;
    j["infected"] = infected_count(g.graph);
    j["nodes"] = g.graph.num_nodes();
    j["edges"] = g.graph.num_edges();
    meta << j.dump() << '\n';
  }
  write_text(fs::path(o.out) / "meta.jsonl", meta.str());
  m.timings_ms.emplace_back("write", elapsed_ms(t1));
  write_run_manifest(o.out, m);
  info("wrote " + std::to_string(ds.size()) + " graphs to " + o.out);
  return 0;
}

struct VerifyOpts {
  std::string input;
  std::size_t random = 0;
  std::size_t nodes = 10;
  std::size_t max_edges = 40;
  std::size_t alphabet = 2;
  long long max_time = 20;
  std::vector<std::string> deltas{"1", "5", "inf"};
  bool labeled = true;
  bool force = false;
  bool inject_fault = false;
};

int run_verify(const VerifyOpts& o) {
  if (o.input.empty() == (o.random == 0)) throw InputError("pass a dataset or --random N");
  VerifySpec spec;
  spec.deltas = parse_windows(o.deltas);
  spec.labeled = o.labeled;
  spec.inject_fault = o.inject_fault;
  if (o.force) spec.max_edges = std::numeric_limits<std::size_t>::max();
  const auto ds = o.random ? random_dataset(o.random, o.nodes, o.max_edges, o.alphabet, o.max_time, globals.seed)
                           : load_dataset(o.input);
  if (auto m = verify_dataset(ds, spec, globals.threads)) {
    std::cout << m->describe() << '\n';
    return 1;
  }
  std::cout << "ok: " << ds.size() << " graphs, " << verify_cases(spec).size()
            << " counter/window combinations agree with the oracle\n";
  return 0;
}

struct BenchOpts {
  std::string input;
  std::vector<long long> ba;
  std::vector<std::string> deltas{"inf"};
  std::vector<std::size_t> samples{100, 200};
  bool exact = true;
  std::size_t repetitions = 5;
  bool labeled = true;
  std::string out;
};

int run_bench_cmd(const BenchOpts& o) {
  if (o.input.empty() == o.ba.empty()) throw InputError("pass a dataset or --ba n,m,tmax");
  Dataset ds;
  if (!o.ba.empty()) {
    if (o.ba.size() != 3) throw InputError("--ba expects n,m,tmax");
    ds.add("ba", generate_ba(static_cast<std::size_t>(o.ba[0]), static_cast<std::size_t>(o.ba[1]), o.ba[2],
                             splitmix64(globals.seed)),
           0);
  } else {
    ds = load_dataset(o.input);
  }
  BenchSpec spec;
  spec.deltas = parse_windows(o.deltas);
  spec.samples = o.samples;
  spec.exact = o.exact;
  spec.repetitions = o.repetitions;
  spec.labeled = o.labeled;
  spec.seed = globals.seed;
  std::ostringstream out;
  write_bench_csv(out, run_bench(ds, spec));
  emit(o.out, out.str());
  return 0;
}

int run_pipeline(const std::string& input, CountOpts opts, const KernelOpts& kopts,
                 const std::vector<std::string>& grid, const std::string& out_dir) {
  const auto mode = parse_mode(kopts.mode);
  const auto format = parse_format(kopts.format);
  std::vector<std::string> deltas = grid.empty() ? std::vector<std::string>{opts.delta} : grid;
  for (const auto& d : deltas) {
    opts.delta = d;
    (void)opts.spec();  // every flag combination is checked before any work
  }
  const auto t_load = Clock::now();
  const auto ds = in_stage("load", input, [&] { return load_dataset(input); });
  const double load_ms = elapsed_ms(t_load);

  int status = 0;
  for (const auto& d : deltas) {
    opts.delta = d;
    const auto spec = opts.spec();
    const fs::path dir = grid.empty() ? fs::path(out_dir) : fs::path(out_dir) / ("delta_" + d);
    RunManifest m;
    m.command_line = globals.argv;
    m.add_input(input);
    m.config = {{"counting", opts.to_json()}, {"mode", kopts.mode}, {"format", kopts.format}, {"loo", kopts.loo}};
    m.seeds["global"] = globals.seed;
    if (spec.method == FeatureMethod::Approx) m.seeds["sampling"] = spec.sample.seed;
    m.timings_ms.emplace_back("load", load_ms);

    auto t = Clock::now();
    auto table = make_feature_table(ds, spec, compute_features(ds, spec, globals.threads));
    m.timings_ms.emplace_back("features", elapsed_ms(t));
    t = Clock::now();
    const auto K = in_stage("gram", "*", [&] { return gram_from_table(table, mode, globals.threads); });
    m.timings_ms.emplace_back("gram", elapsed_ms(t));

    std::ostringstream feats;
    write_feature_table(feats, table);
    write_text(dir / "features.txt", feats.str());
    write_text(dir / (format == GramFormat::Csv ? "gram.csv" : "gram.svm"), gram_text(K, format));

    KernelOpts always = kopts;
    always.psd_check = true;
    nlohmann::ordered_json report;
    report["delta"] = d;
    report["graphs"] = ds.size();
    std::ostringstream lines;
    t = Clock::now();
    const int s = in_stage("report", "*", [&] { return kernel_reports(K, always, lines, &report); });
    m.timings_ms.emplace_back("report", elapsed_ms(t));
    write_text(dir / "report.json", report.dump(2) + "\n");
    write_run_manifest(dir, m);
    std::istringstream in(lines.str());
    for (std::string line; std::getline(in, line);) std::cout << "delta=" << d << ' ' << line << '\n';
    status = std::max(status, s);
  }
  if (!grid.empty()) {
    RunManifest top;
    top.command_line = globals.argv;
    top.add_input(input);
    top.config = {{"delta_grid", grid}};
    top.seeds["global"] = globals.seed;
    top.timings_ms.emplace_back("load", load_ms);
    write_run_manifest(out_dir, top);
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  globals.argv.assign(argv, argv + argc);
  CLI::App app{"Temporal graphlet kernels for labeled temporal graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", globals.threads, "worker threads (0 = hardware parallelism)")->capture_default_str();
  app.add_option("--seed", globals.seed, "master rng seed")->capture_default_str();
  app.add_flag("--quiet", globals.quiet, "suppress progress messages");

  // classes
  auto* classes = app.add_subcommand("classes", "print the class codebook");
  std::size_t cls_ell = 2, cls_alphabet = 2;
  std::vector<int> cls_k{3};
  bool cls_labeled = true;
  classes->add_option("--ell", cls_ell, "edges per graphlet (2 or 3)")->capture_default_str();
  classes->add_option("--k", cls_k, "node counts, subset of {2,3}")->delimiter(',')->capture_default_str();
  classes->add_option("--alphabet", cls_alphabet, "label alphabet size")->capture_default_str();
  classes->add_flag("--labeled,!--unlabeled", cls_labeled, "cross patterns with label sequences (default on)");

  // count
  auto* count = app.add_subcommand("count", "exact graphlet counts per graph");
  std::string count_in, count_out;
  CountOpts count_opts;
  bool count_oracle = false, count_force = false;
  count->add_option("dataset", count_in, "dataset directory, manifest, TU prefix or graph file")->required();
  count_opts.add_exact(count);
  count->add_flag("--oracle", count_oracle, "use the brute-force enumerator");
  count->add_flag("--force", count_force, "lift the brute-force size guard");
  count->add_option("--out", count_out, "feature file (default stdout)");

  // approx
  auto* approx = app.add_subcommand("approx", "sampled wedge frequencies per graph");
  std::string approx_in, approx_out;
  CountOpts approx_opts;
  AutoSamples autos;
  approx->add_option("dataset", approx_in)->required();
  approx->add_option("--delta", approx_opts.delta, "time window (integer >= 1 or 'inf')")->capture_default_str();
  approx->add_flag("--labeled,!--unlabeled", approx_opts.labeled, "use node labels (default on)");
  approx_opts.add_sampling(approx);
  approx->add_flag("--auto-samples", autos.enabled, "derive --samples from --lambda and --confidence");
  approx->add_option("--lambda", autos.lambda, "error scale of the sample-size bound")->capture_default_str();
  approx->add_option("--confidence", autos.confidence, "failure probability of the bound")->capture_default_str();
  approx->add_option("--out", approx_out, "feature file (default stdout)");

  // gram
  auto* gram = app.add_subcommand("gram", "Gram matrix from a feature file or a dataset");
  std::string gram_in, gram_out;
  CountOpts gram_opts;
  KernelOpts gram_k;
  gram->add_option("input", gram_in, "feature file, or a dataset to count")->required();
  gram_opts.add_exact(gram);
  gram->add_option("--method", gram_opts.method, "exact|approx when counting a dataset")->capture_default_str();
  gram_opts.add_sampling(gram);
  gram_k.add(gram);
  gram->add_option("--out", gram_out, "output path (default stdout)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "generate a dissemination classification dataset");
  SimOpts sim;
  simulate->add_option("--task", sim.task, "1, 2 or 3")->capture_default_str();
  simulate->add_option("--p", sim.p, "infection probability, task 1")->capture_default_str();
  simulate->add_option("--p1", sim.p1, "class 0 probability, task 2")->capture_default_str();
  simulate->add_option("--p2", sim.p2, "class 1 probability, task 2")->capture_default_str();
  simulate->add_option("--missing-fraction", sim.missing_fraction, "erased infections, task 3")->capture_default_str();
  simulate->add_option("--base-task", sim.base_task, "task 3 base, 1 or 2")->capture_default_str();
  simulate->add_option("--num-seeds", sim.num_seeds, "initially infected nodes")->capture_default_str();
  simulate->add_option("--bases", sim.bases, "dataset of base graphs");
  simulate->add_option("--ba", sim.ba, "n,m,tmax,count")->delimiter(',');
  simulate->add_option("--out", sim.out, "output directory")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check the fast counters against the oracle");
  VerifyOpts vo;
  verify->add_option("dataset", vo.input);
  verify->add_option("--random", vo.random, "check N seeded random graphs instead");
  verify->add_option("--nodes", vo.nodes, "nodes per random graph")->capture_default_str();
  verify->add_option("--max-edges", vo.max_edges, "edges per random graph at most")->capture_default_str();
  verify->add_option("--alphabet", vo.alphabet, "label alphabet of random graphs")->capture_default_str();
  verify->add_option("--max-time", vo.max_time, "latest edge time of random graphs")->capture_default_str();
  verify->add_option("--delta", vo.deltas, "windows to check")->delimiter(',')->capture_default_str();
  verify->add_flag("--labeled,!--unlabeled", vo.labeled, "use node labels (default on)");
  verify->add_flag("--force", vo.force, "lift the brute-force size guard");
  verify->add_flag("--inject-fault", vo.inject_fault)->group("");

  // bench
  auto* bench = app.add_subcommand("bench", "timing table for exact and sampled wedge counting");
  BenchOpts bo;
  bench->add_option("dataset", bo.input);
  bench->add_option("--ba", bo.ba, "time one BA graph n,m,tmax instead")->delimiter(',');
  bench->add_option("--delta", bo.deltas, "windows")->delimiter(',')->capture_default_str();
  bench->add_option("--samples", bo.samples, "sample sizes")->delimiter(',')->capture_default_str();
  bench->add_flag("--exact,!--no-exact", bo.exact, "include the exact wedge counter (default on)");
  bench->add_option("--repetitions", bo.repetitions, "runs per method")->capture_default_str();
  bench->add_flag("--labeled,!--unlabeled", bo.labeled, "use node labels (default on)");
  bench->add_option("--out", bo.out, "CSV path (default stdout)");

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "dataset to features, Gram matrix and reports");
  std::string pipe_in, pipe_out;
  CountOpts pipe_opts;
  KernelOpts pipe_k;
  std::vector<std::string> grid;
  pipeline->add_option("dataset", pipe_in)->required();
  pipe_opts.add_exact(pipeline);
  pipeline->add_option("--method", pipe_opts.method, "exact|approx")->capture_default_str();
  pipe_opts.add_sampling(pipeline);
  pipe_k.add(pipeline);
  pipeline->add_option("--delta-grid", grid, "one output set per window")->delimiter(',');
  pipeline->add_option("--out", pipe_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classes->parsed()) return run_classes(cls_ell, cls_k, cls_alphabet, cls_labeled);
    if (count->parsed()) {
      if (count_oracle) count_opts.method = "oracle";
      return run_count(count_in, count_opts, count_force, count_out);
    }
    if (approx->parsed()) return run_approx(approx_in, approx_opts, autos, approx_out);
    if (gram->parsed()) return run_gram(gram_in, gram_opts, gram_k, gram_out);
    if (simulate->parsed()) return run_simulate(sim);
    if (verify->parsed()) return run_verify(vo);
    if (bench->parsed()) return run_bench_cmd(bo);
    if (pipeline->parsed()) {
      if (grid.empty() && pipeline->count("--delta-grid")) throw InputError("--delta-grid is empty");
      return run_pipeline(pipe_in, pipe_opts, pipe_k, grid, pipe_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return 2;
}
