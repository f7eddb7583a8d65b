#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tgk/dissemination.hpp"
#include "tgk/pipeline.hpp"

namespace tgk {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("tgk_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Run cli(const std::string& args) {
  static const auto dir = scratch("cli_io");
  const auto out = dir / "out.txt", err = dir / "err.txt";
  const std::string cmd = std::string(TGK_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

// small task-2 dataset on disk, shared by the CLI tests
const fs::path& task2_dir() {
  static const fs::path dir = [] {
    auto d = scratch("task2");
    save_dataset(d, make_task2(generate_ba_family(10, 40, 2, 200, 1), 0.2, 0.8, 2));
    return d;
  }();
  return dir;
}

TEST(FeatureTable, RoundTripThroughIndices) {
  const auto ds = random_dataset(8, 7, 30, 2, 20, 3);
  FeatureSpec spec;
  spec.count.ell = 3;
  spec.count.node_counts = {3};
  spec.include_two_node = true;
  auto table = make_feature_table(ds, spec, compute_features(ds, spec, 2));
  std::stringstream io;
  write_feature_table(io, table);
  EXPECT_EQ(io.str().rfind("# features ell=3 k=2,3 alphabet=2\n", 0), 0u);
  auto back = read_feature_table(io);
  EXPECT_EQ(back.ids, table.ids);
  EXPECT_EQ(back.labels, table.labels);
  EXPECT_EQ(back.features, table.features);
}

TEST(FeatureTable, FallsBackToCodeTokens) {
  const auto ds = random_dataset(4, 6, 20, 2, 10, 4);
  FeatureSpec spec;
  spec.count.ell = 4;
  spec.count.delta = TimeWindow::of(10);
  auto table = make_feature_table(ds, spec, compute_features(ds, spec, 1));
  std::stringstream io;
  write_feature_table(io, table);
  EXPECT_NE(io.str().find('/'), std::string::npos);
  EXPECT_EQ(read_feature_table(io).features, table.features);
}

TEST(FeatureTable, Errors) {
  std::stringstream no_header("g 0:1\n");
  EXPECT_THROW(read_feature_table(no_header), ParseError);
  std::stringstream bad_index("# features ell=2 k=3 alphabet=0\ng 4:1\n");
  EXPECT_THROW(read_feature_table(bad_index), ParseError);
  std::stringstream ok("# features ell=2 k=3 alphabet=0\n# labels 1\ng 3:2\n");
  auto t = read_feature_table(ok);
  EXPECT_EQ(t.labels, std::vector<int>{1});
  EXPECT_EQ(t.features[0].total(), 2.0);
}

TEST(ComputeFeatures, ThreadCountDoesNotMatter) {
  const auto ds = random_dataset(20, 8, 30, 2, 20, 5);
  FeatureSpec spec;
  spec.count.delta = TimeWindow::of(5);
  EXPECT_EQ(compute_features(ds, spec, 1), compute_features(ds, spec, 4));
  spec.method = FeatureMethod::Approx;
  spec.family = CountFamily::Wedge;
  spec.sample.samples = 200;
  spec.sample.seed = 9;
  const auto bases = generate_ba_family(6, 30, 2, 50, 1);
  Dataset ba;
  for (std::size_t i = 0; i < bases.size(); ++i) ba.add(std::to_string(i), as_binary(bases[i]), 0);
  spec.count.delta = TimeWindow::unbounded();
  EXPECT_EQ(compute_features(ba, spec, 1), compute_features(ba, spec, 3));
}

TEST(ComputeFeatures, ErrorsNameStageAndGraph) {
  Dataset ds;
  ds.add("lonely", TemporalGraph(2, {{0, 1, 1}}), 0);
  FeatureSpec spec;
  spec.method = FeatureMethod::Approx;
  try {
    compute_features(ds, spec, 1);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "approx");
    EXPECT_EQ(e.graph_id(), "lonely");
    EXPECT_EQ(e.exit_code(), 1);
  }
  spec.count.ell = 3;
  spec.family = CountFamily::Wedge;
  spec.method = FeatureMethod::Exact;
  EXPECT_THROW(compute_features(ds, spec, 1), InputError);
}

TEST(Verify, RandomGraphsAgree) {
  VerifySpec spec;
  EXPECT_FALSE(verify_dataset(random_dataset(30, 10, 30, 2, 20, 6), spec, 2));
  spec.inject_fault = true;
  auto m = verify_dataset(random_dataset(30, 10, 30, 2, 20, 6), spec, 2);
  ASSERT_TRUE(m);
  EXPECT_NE(m->describe().find("class"), std::string::npos);
  EXPECT_EQ(m->fast, m->oracle + 1);
}

TEST(Bench, RowsAndStability) {
  Dataset ds;
  ds.add("g", generate_ba(200, 3, 100, 1), 0);
  BenchSpec spec;
  spec.samples = {50};
  spec.repetitions = 1;
  auto rows = run_bench(ds, spec);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].stable);
  std::ostringstream out;
  write_bench_csv(out, rows);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "method,delta,s,time_ms,stability");
  EXPECT_NE(out.str().find(",unstable\n"), std::string::npos);
}

TEST(Manifest, DigestTracksContent) {
  auto d = scratch("digest");
  write_text(d / "a.txt", "x");
  const auto h1 = digest_path(d);
  write_text(d / "a.txt", "y");
  EXPECT_NE(digest_path(d), h1);
  write_text(d / "a.txt", "x");
  EXPECT_EQ(digest_path(d), h1);
}

TEST(Cli, ClassesCounts) {
  auto r = cli("classes");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 64);
  r = cli("classes --unlabeled --ell 3 --k 2,3");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 36);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "0 two-node 0>1,0>1,0>1 -");
}

TEST(Cli, FlagConsistencyIsAUsageError) {
  auto r = cli("count --family wedge --ell 3 " + task2_dir().string());
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("--ell 2"), std::string::npos);
  EXPECT_EQ(cli("count --delta 0 " + task2_dir().string()).code, 2);
  EXPECT_EQ(cli("count --no-such-flag x").code, 2);
  EXPECT_EQ(cli("").code, 2);
}

TEST(Cli, MissingInputIsAnIoError) {
  EXPECT_EQ(cli("count /nonexistent/dataset").code, 3);
  auto d = scratch("bad_graph");
  write_text(d / "g.tg", "t 2 1 1\ne 0 5 1\n");
  EXPECT_EQ(cli("count " + (d / "g.tg").string()).code, 3);
}

TEST(Cli, CountMatchesLibrary) {
  auto r = cli("count --family wedge --delta 50 " + task2_dir().string());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ds = load_dataset(task2_dir());
  FeatureSpec spec;
  spec.family = CountFamily::Wedge;
  spec.count.delta = TimeWindow::of(50);
  std::ostringstream expect;
  write_feature_table(expect, make_feature_table(ds, spec, compute_features(ds, spec, 1)));
  EXPECT_EQ(r.out, expect.str());
  auto oracle = cli("count --family wedge --delta 50 --oracle --force " + task2_dir().string());
  EXPECT_EQ(oracle.out, r.out);
}

TEST(Cli, GramIsDeterministic) {
  const auto dir = scratch("gram");
  const std::string base = "gram --family wedge --delta 100 --mode cosine " + task2_dir().string();
  ASSERT_EQ(cli("--threads 3 " + base + " --out " + (dir / "a.csv").string()).code, 0);
  ASSERT_EQ(cli("--threads 1 " + base + " --out " + (dir / "b.csv").string()).code, 0);
  EXPECT_EQ(slurp(dir / "a.csv"), slurp(dir / "b.csv"));
  // approx with a fixed seed
  const std::string ap = "--seed 5 gram --method approx --samples 300 --family wedge " + task2_dir().string();
  ASSERT_EQ(cli(ap + " --out " + (dir / "c.csv").string()).code, 0);
  ASSERT_EQ(cli(ap + " --threads 4 --out " + (dir / "d.csv").string()).code, 0);
  EXPECT_EQ(slurp(dir / "c.csv"), slurp(dir / "d.csv"));
}

TEST(Cli, GramFromFeatureFileAndSvm) {
  const auto dir = scratch("gram_svm");
  ASSERT_EQ(cli("count --family wedge --out " + (dir / "f.txt").string() + " " + task2_dir().string()).code, 0);
  auto r = cli("gram --format svm --psd-check --loo " + (dir / "f.txt").string());
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream ls(line);
    std::string label, first;
    ls >> label >> first;
    EXPECT_EQ(first, "0:" + std::to_string(rows));
    EXPECT_TRUE(label == "0" || label == "1");
  }
  EXPECT_EQ(rows, 20u);
  EXPECT_NE(r.err.find("psd pass"), std::string::npos);
  EXPECT_NE(r.err.find("loo_1nn_accuracy"), std::string::npos);
}

TEST(Cli, ApproxOutputFormat) {
  auto r = cli("--seed 1 approx --samples 500 " + task2_dir().string());
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  auto t = read_feature_table(in);
  ASSERT_EQ(t.features.size(), 20u);
  for (const auto& f : t.features) EXPECT_NEAR(f.total(), 1.0, 1e-12);
  EXPECT_EQ(cli("approx --ell 3 " + task2_dir().string()).code, 2);
  auto a = cli("--quiet --seed 2 approx --auto-samples --lambda 0.5 --confidence 0.1 " + task2_dir().string());
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(a.err.empty());
}

TEST(Cli, VerifyExitCodes) {
  auto ok = cli("verify --random 20 --seed 3");
  EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
  auto bad = cli("verify --random 20 --seed 3 --inject-fault");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("class"), std::string::npos);
  auto d = scratch("empty");
  write_text(d / "empty.tg", "t 3 0 1\n");
  EXPECT_EQ(cli("verify " + (d / "empty.tg").string()).code, 0);
  EXPECT_EQ(cli("verify").code, 2);
}

TEST(Cli, SimulateWritesDatasetAndMetadata) {
  const auto dir = scratch("sim");
  ASSERT_EQ(cli("--seed 4 --quiet simulate --task 3 --missing-fraction 0.5 --ba 30,2,100,3 --out " + dir.string()).code,
            0);
  const auto ds = load_dataset(dir);
  EXPECT_EQ(ds.size(), 6u);
  std::ifstream meta(dir / "meta.jsonl");
  std::size_t n = 0;
  for (std::string line; std::getline(meta, line); ++n) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["task"], "task3");
    EXPECT_EQ(j["params"]["missing_fraction"], "0.500000");
  }
  EXPECT_EQ(n, 6u);
  EXPECT_TRUE(fs::exists(dir / kManifestName));
  const auto again = scratch("sim2");
  cli("--seed 4 --quiet simulate --task 3 --missing-fraction 0.5 --ba 30,2,100,3 --out " + again.string());
  for (const auto& g : ds.graphs) EXPECT_EQ(slurp(dir / (g.id + ".tg")), slurp(again / (g.id + ".tg")));
  EXPECT_EQ(cli("simulate --task 4 --ba 30,2,100,3 --out " + dir.string()).code, 2);
  EXPECT_EQ(cli("simulate --task 2 --out " + dir.string()).code, 2);
}

TEST(Cli, PipelineOutputs) {
  const auto dir = scratch("pipe");
  auto r = cli("pipeline --family wedge --delta-grid 10,100 --mode cosine --loo --out " + dir.string() + " " +
               task2_dir().string());
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto* d : {"delta_10", "delta_100"}) {
    EXPECT_TRUE(fs::exists(dir / d / "features.txt"));
    EXPECT_TRUE(fs::exists(dir / d / "gram.csv"));
    auto report = nlohmann::json::parse(slurp(dir / d / "report.json"));
    EXPECT_TRUE(report["psd"]["passed"].get<bool>());
    auto m = nlohmann::json::parse(slurp(dir / d / kManifestName));
    EXPECT_EQ(m["version"], std::string(kVersion));
    EXPECT_EQ(m["inputs"].size(), 1u);
  }
  EXPECT_TRUE(fs::exists(dir / kManifestName));
  EXPECT_NE(r.out.find("delta=100 loo_1nn_accuracy"), std::string::npos);
  EXPECT_EQ(cli("pipeline --family wedge --ell 3 --out " + dir.string() + " " + task2_dir().string()).code, 2);
  EXPECT_EQ(cli("pipeline --family wedge --min-accuracy 1.01 --out " + (dir / "x").string() + " " +
                task2_dir().string())
                .code,
            1);
}

TEST(Cli, BenchCsv) {
  auto r = cli("bench --ba 300,3,100 --samples 50 --repetitions 1");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("method,delta,s,time_ms,stability\nexact-wedge,inf,-,", 0), 0u);
  EXPECT_NE(r.out.find("approx,inf,50,"), std::string::npos);
}

}  // namespace
}  // namespace tgk
