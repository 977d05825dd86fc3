// Checks on the reference implementations themselves, against values
// worked out by hand.
#include <gtest/gtest.h>

#include "oracle.hpp"

namespace {

TEST(Oracle, GaussianSolveKnownSystem) {
  const auto x = oracle::gaussian_solve({{0, 2}, {3, 1}}, {4, 5});
  EXPECT_NEAR(x[0], 1.0, 1e-15);
  EXPECT_NEAR(x[1], 2.0, 1e-15);
  EXPECT_THROW(oracle::gaussian_solve({{1, 2}, {2, 4}}, {1, 1}), std::runtime_error);
}

TEST(Oracle, RidgeColumnTwoByTwo) {
  const oracle::Matrix x{{1, 1}, {1, 0}};
  const auto w1 = oracle::ridge_column(x, 1, 1.0);
  EXPECT_EQ(w1[1], 0.0);
  EXPECT_NEAR(w1[0], 1.0 / 3.0, 1e-15);
  const auto w0 = oracle::ridge_column(x, 0, 1.0);
  EXPECT_EQ(w0[0], 0.0);
  EXPECT_NEAR(w0[1], 0.5, 1e-15);
}

TEST(Oracle, OrthogonalColumnsGiveZeroWeights) {
  const oracle::Matrix x{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  for (std::size_t j = 0; j < 3; ++j) {
    for (double w : oracle::ridge_column(x, j, 2.0)) EXPECT_EQ(w, 0.0);
  }
}

TEST(Oracle, ObjectiveFormsAgree) {
  const auto x = oracle::random_binary(20, 5, 0.4, 1);
  oracle::Matrix b = oracle::zeros(5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) b[i][j] = i == j ? 0.0 : 0.1 * static_cast<double>(i + 2 * j) - 0.4;
  }
  const double a = oracle::objective_from_data(x, b, 2.0);
  const double g = oracle::objective_from_gram(oracle::dense_gram(x), b, 2.0);
  EXPECT_NEAR(a, g, 1e-10 * a);
}

TEST(Oracle, CenteredGramMatchesMeanCorrection) {
  const auto x = oracle::random_binary(12, 4, 0.5, 2);
  const auto g = oracle::dense_centered_gram(x);
  std::vector<double> mean(4, 0.0);
  for (const auto& r : x) {
    for (std::size_t j = 0; j < 4; ++j) mean[j] += r[j] / 12.0;
  }
  const auto plain = oracle::dense_gram(x);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(g[i][j], plain[i][j] - 12.0 * mean[i] * mean[j], 1e-12);
  }
}

TEST(Oracle, DescentReachesTwoByTwoSolution) {
  oracle::DescentOptions opts;
  opts.steps = 20000;
  opts.tolerance = 1e-15;
  const auto r = oracle::gd_descent({{2, 1}, {1, 1}}, 1.0, oracle::zeros(2, 2), opts);
  EXPECT_NEAR(r.weights[0][1], 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(r.weights[1][0], 0.5, 1e-10);
  for (std::size_t s = 1; s < r.objective.size(); ++s) EXPECT_LE(r.objective[s], r.objective[s - 1] + 1e-15);
}

TEST(Oracle, DescentStaysAtTheClosedForm) {
  // Closed-form weights of G=[[2,1],[1,1]], lambda=1.
  const oracle::Matrix b{{0, 1.0 / 3.0}, {0.5, 0}};
  oracle::DescentOptions opts;
  opts.steps = 1000;
  const auto r = oracle::gd_descent({{2, 1}, {1, 1}}, 1.0, b, opts);
  EXPECT_LT(r.max_update, 1e-6);
  for (double f : r.objective) EXPECT_LE(f, r.objective.front() + 1e-12);
}

TEST(Oracle, DescentFlagsDivergence) {
  oracle::DescentOptions opts;
  opts.rate = 10.0;
  EXPECT_THROW(oracle::gd_descent({{2, 1}, {1, 1}}, 1.0, oracle::zeros(2, 2), opts), oracle::DivergenceError);
}

TEST(Oracle, RandomBinaryCoversRowsAndColumns) {
  const auto x = oracle::random_binary(15, 9, 0.05, 3);
  for (const auto& row : x) {
    double s = 0.0;
    for (double v : row) s += v;
    EXPECT_GE(s, 1.0);
  }
  for (std::size_t j = 0; j < 9; ++j) {
    double s = 0.0;
    for (const auto& row : x) s += row[j];
    EXPECT_GE(s, 1.0);
  }
}

}  // namespace
