#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "ease/diagnostics.hpp"
#include "ease/gram.hpp"
#include "test_support.hpp"

namespace ease {
namespace {

WeightModel model_with(std::vector<std::vector<double>> w) {
  WeightModel m;
  m.weights = DenseMatrix(w.size(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) m.weights(i, j) = w[i][j];
  }
  m.items = testing::numbered(w.size());
  return m;
}

TEST(WeightHistogram, BinsOffDiagonalWeights) {
  const auto m = model_with({{9, -1, 0}, {1, 9, 0.5}, {-0.5, 1, 9}});
  const auto h = weight_histogram(m, 4);
  ASSERT_EQ(h.bins.size(), 4u);
  EXPECT_EQ(h.n_weights, 6u);
  EXPECT_DOUBLE_EQ(h.bins.front().lower, -1.0);
  EXPECT_DOUBLE_EQ(h.bins.back().upper, 1.0);
  // Edges -1, -0.5, 0, 0.5, 1.
  EXPECT_EQ(h.bins[0].count, 1u);
  EXPECT_EQ(h.bins[1].count, 1u);
  EXPECT_EQ(h.bins[2].count, 1u);
  EXPECT_EQ(h.bins[3].count, 3u);
  EXPECT_DOUBLE_EQ(h.negative_fraction, 2.0 / 6.0);
}

TEST(WeightHistogram, CountsSumToOffDiagonalSize) {
  const auto model = solve(build_gram(testing::from_dense(oracle::random_binary(50, 10, 0.3, 1))), 2.0);
  const auto h = weight_histogram(model, 17);
  std::size_t total = 0;
  for (const auto& b : h.bins) total += b.count;
  EXPECT_EQ(total, 90u);
  EXPECT_EQ(h.negative_fraction, negative_fraction(model.weights));
}

TEST(WeightHistogram, ConstantWeightsGiveOneBin) {
  const auto h = weight_histogram(model_with({{0, 2}, {2, 0}}), 10);
  ASSERT_EQ(h.bins.size(), 1u);
  EXPECT_EQ(h.bins[0].count, 2u);
  EXPECT_THROW(weight_histogram(model_with({{0, 2}, {2, 0}}), 0), std::invalid_argument);
}

TEST(WeightHistogram, ZeroModelIsASpikeAtZero) {
  const auto h = weight_histogram(model_with({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}), 5);
  ASSERT_EQ(h.bins.size(), 1u);
  EXPECT_EQ(h.bins[0].lower, 0.0);
  EXPECT_EQ(h.bins[0].count, 6u);
  EXPECT_EQ(h.negative_fraction, 0.0);
}

TEST(RecCountCurve, IdenticalListsGiveAStep) {
  const RankedList same{"u", {{4, 1}, {1, 1}, {6, 1}}};
  std::vector<RankedList> lists(7, same);
  const auto curve = rec_count_curve(lists, 10);
  EXPECT_EQ(curve, (std::vector<std::size_t>{7, 7, 7, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(std::accumulate(curve.begin(), curve.end(), std::size_t{0}), 21u);
}

TEST(RecCountCurve, SortedDescendingWithZeros) {
  std::vector<RankedList> lists{{"a", {{0, 1}, {2, 1}}}, {"b", {{2, 1}, {3, 1}}}, {"c", {{2, 1}}}};
  EXPECT_EQ(rec_count_curve(lists, 5), (std::vector<std::size_t>{3, 1, 1, 0, 0}));
}

TEST(Csv, WritesHeadersAndRows) {
  std::ostringstream h;
  write_histogram_csv(h, weight_histogram(model_with({{0, 2}, {2, 0}}), 3));
  EXPECT_EQ(h.str(), "lower,upper,count\n2,2,2\n");
  std::ostringstream c;
  const std::vector<std::size_t> curve{4, 1};
  write_rec_count_csv(c, curve);
  EXPECT_EQ(c.str(), "rank,count\n1,4\n2,1\n");
}

}  // namespace
}  // namespace ease
