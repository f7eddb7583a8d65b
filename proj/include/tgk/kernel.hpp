#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tgk/error.hpp"
#include "tgk/feature_vector.hpp"
#include "tgk/parallel.hpp"

namespace tgk {

enum class GramMode { L1, Cosine };

inline std::string_view to_string(GramMode m) { return m == GramMode::L1 ? "l1" : "cosine"; }

inline FeatureVector normalize_l1(const FeatureVector& v) {
  FeatureVector out;
  const double total = v.total();
  if (total <= 0) return out;
  for (const auto& [code, w] : v) out.add(code, w / total);
  return out;
}

/// Sparse dot product; walks both sorted maps once.
inline double kernel_value(const FeatureVector& a, const FeatureVector& b) {
  double sum = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      sum += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return sum;
}

struct GramMatrix {
  Eigen::MatrixXd values;
  std::vector<std::string> ids;
  std::vector<int> labels;
  GramMode mode = GramMode::L1;

  std::size_t size() const { return static_cast<std::size_t>(values.rows()); }
};

/// Rescales to unit diagonal; rows with a zero diagonal stay zero.
inline void apply_cosine(Eigen::MatrixXd& K) {
  const auto n = K.rows();
  Eigen::VectorXd d = K.diagonal();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      double v = 0;
      if (d[i] > 0 && d[j] > 0) v = i == j ? 1.0 : std::min(1.0, K(i, j) / std::sqrt(d[i] * d[j]));
      K(i, j) = v;
      K(j, i) = v;
    }
  }
}

/// Gram matrix of the given (already normalized) feature vectors. Each
/// unordered pair is computed once and mirrored, so the result is exactly
/// symmetric.
inline GramMatrix gram_matrix(const std::vector<FeatureVector>& features, GramMode mode,
                              std::vector<std::string> ids = {}, std::vector<int> labels = {},
                              std::size_t threads = 1) {
  const auto n = features.size();
  if (n == 0) throw InputError("gram matrix needs at least one graph");
  if (ids.empty())
    for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  if (labels.empty()) labels.assign(n, 0);
  if (ids.size() != n || labels.size() != n) throw InputError("ids and labels must match the feature count");
  GramMatrix K;
  K.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j)
      K.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = kernel_value(features[i], features[j]);
  });
  for (Eigen::Index i = 0; i < K.values.rows(); ++i)
    for (Eigen::Index j = i + 1; j < K.values.cols(); ++j) K.values(j, i) = K.values(i, j);
  if (mode == GramMode::Cosine) apply_cosine(K.values);
  K.ids = std::move(ids);
  K.labels = std::move(labels);
  K.mode = mode;
  return K;
}

/// Smallest eigenvalue of a symmetric matrix (dense self-adjoint solve).
inline double min_eigenvalue(const Eigen::MatrixXd& K) {
  if (K.rows() != K.cols()) throw InputError("matrix must be square");
  for (Eigen::Index i = 0; i < K.rows(); ++i)
    for (Eigen::Index j = i + 1; j < K.cols(); ++j)
      if (K(i, j) != K(j, i)) throw InputError("matrix is not symmetric");
  if (K.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(K, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen decomposition failed");
  return solver.eigenvalues().minCoeff();
}

struct PsdReport {
  double min_eigenvalue = 0;
  double tolerance = 0;
  bool passed = false;
};

inline PsdReport check_psd(const GramMatrix& K, double tol = 1e-8) {
  PsdReport r;
  r.min_eigenvalue = min_eigenvalue(K.values);
  r.tolerance = tol;
  r.passed = r.min_eigenvalue >= -tol;
  return r;
}

/// Shortest decimal that parses back to the same double.
inline std::string format_double(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf, end);
}

enum class GramFormat { Csv, Svm };

/// CSV: a header of graph ids, then one row per graph.
/// SVM: `<label> 0:<row number from 1> 1:<K[i][0]> 2:<K[i][1]> ...`.
inline void export_gram(const GramMatrix& K, GramFormat format, std::ostream& out) {
  const auto n = K.size();
  if (format == GramFormat::Csv) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? "," : "") << K.ids[j];
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        out << (j ? "," : "") << format_double(K.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      out << '\n';
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      out << K.labels[i] << " 0:" << i + 1;
      for (std::size_t j = 0; j < n; ++j)
        out << ' ' << j + 1 << ':'
            << format_double(K.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      out << '\n';
    }
  }
  if (!out) throw IoError("failed to write gram matrix");
}

/// Parses the CSV layout written by export_gram (labels are not part of it).
inline GramMatrix read_gram_csv(std::istream& in) {
  GramMatrix K;
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty gram file");
  {
    std::stringstream ss(line);
    std::string id;
    while (std::getline(ss, id, ',')) K.ids.push_back(id);
  }
  const auto n = K.ids.size();
  K.values.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw ParseError(i + 2, "missing gram row");
    std::size_t j = 0, pos = 0;
    while (pos <= line.size() && j < n) {
      auto next = line.find(',', pos);
      if (next == std::string::npos) next = line.size();
      double v = 0;
      auto [p, ec] = std::from_chars(line.data() + pos, line.data() + next, v);
      if (ec != std::errc{} || p != line.data() + next) throw ParseError(i + 2, "invalid number");
      K.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j++)) = v;
      pos = next + 1;
    }
    if (j != n) throw ParseError(i + 2, "row has wrong length");
  }
  K.labels.assign(n, 0);
  return K;
}

/// Leave-one-out 1-nearest-neighbor accuracy under d^2 = K_ii + K_jj - 2 K_ij;
/// ties go to the lowest index.
inline double loo_1nn_accuracy(const Eigen::MatrixXd& K, const std::vector<int>& labels) {
  const auto n = labels.size();
  if (n < 2) throw InputError("leave-one-out needs at least two graphs");
  if (std::all_of(labels.begin(), labels.end(), [&](int l) { return l == labels[0]; }))
    throw InputError("leave-one-out needs at least two classes");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    double best = 0;
    std::size_t arg = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto jj = static_cast<Eigen::Index>(j);
      const double d2 = K(ii, ii) + K(jj, jj) - 2 * K(ii, jj);
      if (arg == n || d2 < best) {
        best = d2;
        arg = j;
      }
    }
    if (labels[arg] == labels[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(n);
}

inline double loo_1nn_accuracy(const GramMatrix& K) { return loo_1nn_accuracy(K.values, K.labels); }

}  // namespace tgk
