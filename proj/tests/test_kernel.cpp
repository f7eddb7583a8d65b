#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"
#include "tgk/exact_count.hpp"
#include "tgk/kernel.hpp"
#include "tgk/random.hpp"

namespace tgk {
namespace {

GraphletCode code(std::uint8_t i) { return GraphletCode{{{0, 1}, {1, static_cast<std::uint8_t>(2 + i)}}, {}}; }

FeatureVector vec(std::initializer_list<double> ws) {
  FeatureVector v;
  std::uint8_t i = 0;
  for (double w : ws) v.add(code(i++), w);
  return v;
}

FeatureVector random_vector(std::mt19937_64& rng, std::size_t dim = 8) {
  FeatureVector v;
  for (std::uint8_t i = 0; i < dim; ++i)
    if (rng() % 3) v.add(code(i), static_cast<double>(rng() % 10));
  return normalize_l1(v);
}

TEST(NormalizeL1, Examples) {
  EXPECT_EQ(normalize_l1(vec({2, 2})), vec({0.5, 0.5}));
  EXPECT_EQ(normalize_l1(vec({1, 0, 0})), vec({1}));
  EXPECT_TRUE(normalize_l1(FeatureVector{}).empty());
  EXPECT_THROW(vec({-1}), InputError);
}

TEST(KernelValue, Examples) {
  EXPECT_DOUBLE_EQ(kernel_value(vec({0.5, 0.5}), vec({0.5, 0.5})), 0.5);
  FeatureVector a, b;
  a.add(code(0), 1);
  b.add(code(1), 1);
  EXPECT_EQ(kernel_value(a, b), 0.0);
  EXPECT_DOUBLE_EQ(kernel_value(vec({1, 0}), vec({0.5, 0.5})), 0.5);
}

TEST(KernelValue, SymmetricAndBounded) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 200; ++it) {
    auto a = random_vector(rng), b = random_vector(rng);
    EXPECT_EQ(kernel_value(a, b), kernel_value(b, a));
    EXPECT_GE(kernel_value(a, b), 0.0);
    EXPECT_LE(kernel_value(a, b), 1.0 + 1e-15);
  }
}

TEST(GramMatrix, Examples) {
  auto one = gram_matrix({vec({3, 1})}, GramMode::Cosine);
  EXPECT_EQ(one.values(0, 0), 1.0);
  auto same = gram_matrix({vec({0.25, 0.75}), vec({0.25, 0.75})}, GramMode::Cosine);
  EXPECT_TRUE((same.values.array() == 1.0).all());
  FeatureVector a, b;
  a.add(code(0), 1);
  b.add(code(1), 1);
  for (auto mode : {GramMode::L1, GramMode::Cosine}) EXPECT_EQ(gram_matrix({a, b}, mode).values(0, 1), 0.0);
  EXPECT_THROW(gram_matrix({}, GramMode::L1), InputError);
}

TEST(GramMatrix, ZeroVectorsGiveZeroRows) {
  auto K = gram_matrix({vec({1}), FeatureVector{}}, GramMode::Cosine);
  EXPECT_EQ(K.values(1, 1), 0.0);
  EXPECT_EQ(K.values(0, 1), 0.0);
  EXPECT_EQ(K.values(0, 0), 1.0);
}

TEST(GramMatrix, PropertiesOnGraphs) {
  std::mt19937_64 rng(2);
  std::vector<FeatureVector> fs;
  for (int i = 0; i < 50; ++i) {
    auto g = testing::random_graph(rng);
    fs.push_back(normalize_l1(count_wedges(g, TimeWindow::of(5), true)));
  }
  for (auto mode : {GramMode::L1, GramMode::Cosine}) {
    auto K = gram_matrix(fs, mode, {}, {}, 3);
    EXPECT_TRUE(K.values == K.values.transpose());
    EXPECT_TRUE(check_psd(K, 1e-8).passed);
    EXPECT_GE(K.values.minCoeff(), 0.0);
    EXPECT_LE(K.values.maxCoeff(), 1.0);
    if (mode == GramMode::Cosine) {
      for (Eigen::Index i = 0; i < K.values.rows(); ++i) {
        if (fs[i].empty()) continue;
        EXPECT_EQ(K.values(i, i), 1.0);
        EXPECT_GE(K.values(i, i), K.values.row(i).maxCoeff());
      }
      Eigen::MatrixXd twice = K.values;
      apply_cosine(twice);
      EXPECT_TRUE(twice == K.values);
    }
  }
}

TEST(GramMatrix, ThreadCountDoesNotChangeValues) {
  std::mt19937_64 rng(3);
  std::vector<FeatureVector> fs;
  for (int i = 0; i < 30; ++i) fs.push_back(random_vector(rng));
  EXPECT_TRUE(gram_matrix(fs, GramMode::Cosine, {}, {}, 1).values ==
              gram_matrix(fs, GramMode::Cosine, {}, {}, 4).values);
}

TEST(CheckPsd, Examples) {
  GramMatrix K;
  K.values = Eigen::MatrixXd::Identity(3, 3);
  EXPECT_DOUBLE_EQ(check_psd(K).min_eigenvalue, 1.0);
  K.values = Eigen::MatrixXd::Ones(2, 2);
  auto r = check_psd(K);
  EXPECT_NEAR(r.min_eigenvalue, 0.0, 1e-12);
  EXPECT_TRUE(r.passed);
  K.values << 1, 2, 2, 1;
  EXPECT_FALSE(check_psd(K).passed);
  K.values << 1, 0.5, 0.4, 1;
  EXPECT_THROW(check_psd(K), InputError);
}

TEST(ExportGram, SvmLine) {
  GramMatrix K;
  K.values = Eigen::MatrixXd::Ones(1, 1);
  K.ids = {"g"};
  K.labels = {0};
  std::ostringstream out;
  export_gram(K, GramFormat::Svm, out);
  EXPECT_EQ(out.str(), "0 0:1 1:1\n");
}

TEST(ExportGram, CsvIdentity) {
  GramMatrix K;
  K.values = Eigen::MatrixXd::Identity(2, 2);
  K.ids = {"a", "b"};
  K.labels = {0, 1};
  std::ostringstream out;
  export_gram(K, GramFormat::Csv, out);
  EXPECT_EQ(out.str(), "a,b\n1,0\n0,1\n");
}

TEST(ExportGram, CsvRoundTripIsExact) {
  std::mt19937_64 rng(4);
  std::vector<FeatureVector> fs;
  for (int i = 0; i < 12; ++i) fs.push_back(random_vector(rng));
  auto K = gram_matrix(fs, GramMode::Cosine);
  std::stringstream io;
  export_gram(K, GramFormat::Csv, io);
  auto back = read_gram_csv(io);
  EXPECT_EQ(back.ids, K.ids);
  EXPECT_TRUE(back.values == K.values);
}

TEST(Loo1nn, Examples) {
  auto K = gram_matrix({vec({1}), vec({1})}, GramMode::Cosine, {"a", "b"}, {0, 1});
  EXPECT_EQ(loo_1nn_accuracy(K), 0.0);

  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(10, 10);
  std::vector<int> labels(10);
  for (int i = 0; i < 10; ++i) {
    labels[i] = i < 5 ? 0 : 1;
    for (int j = 0; j < 10; ++j) C(i, j) = (i < 5) == (j < 5) ? 1.0 : 0.0;
  }
  EXPECT_EQ(loo_1nn_accuracy(C, labels), 1.0);
  EXPECT_THROW(loo_1nn_accuracy(C, std::vector<int>(10, 1)), InputError);
}

TEST(Loo1nn, LabelPermutationDropsToChance) {
  // 100 graphs, two well separated clusters
  std::mt19937_64 gen(5);
  std::vector<FeatureVector> fs;
  std::vector<int> labels;
  for (int i = 0; i < 100; ++i) {
    FeatureVector v;
    const int cls = i % 2;
    v.add(code(0), cls ? 1.0 : 5.0 + static_cast<double>(gen() % 3));
    v.add(code(1), cls ? 5.0 + static_cast<double>(gen() % 3) : 1.0);
    fs.push_back(normalize_l1(v));
    labels.push_back(cls);
  }
  auto K = gram_matrix(fs, GramMode::Cosine, {}, labels);
  EXPECT_EQ(loo_1nn_accuracy(K), 1.0);
  Rng rng(6);
  double sum = 0;
  for (int s = 0; s < 10; ++s) {
    auto shuffled = labels;
    shuffle(shuffled, rng);
    sum += loo_1nn_accuracy(K.values, shuffled);
  }
  EXPECT_LE(sum / 10, 0.65);
}

}  // namespace
}  // namespace tgk
