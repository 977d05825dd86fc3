#include <gtest/gtest.h>

#include <cmath>

#include "ease/baselines.hpp"
#include "ease/error.hpp"
#include "ease/evaluate.hpp"
#include "ease/gram.hpp"
#include "ease/solver.hpp"
#include "ease/split.hpp"
#include "ease/synthetic.hpp"
#include "test_support.hpp"

namespace ease {
namespace {

using testing::from_dense;

// Popularity over items 0..3 with counts 4, 3, 2, 1.
InteractionMatrix popularity_train() {
  return from_dense({{1, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}});
}

EvalUser eval_user(std::string name, std::vector<ItemIndex> fold_in, std::vector<ItemIndex> held) {
  std::vector<double> values(fold_in.size(), 1.0);
  return {{std::move(name), std::move(fold_in), std::move(values)}, std::move(held)};
}

TEST(Evaluate, HandComputedMeansAndErrors) {
  const auto train = popularity_train();
  PopularityScorer scorer(train);
  // Fold-in {0} leaves ranking 1, 2, 3.
  std::vector<EvalUser> users{eval_user("a", {0}, {1}), eval_user("b", {0}, {3})};
  const std::vector<MetricSpec> metrics{{Metric::recall, 1}, {Metric::ndcg, 3}};
  EvaluateOptions opts;
  opts.keep_per_user = true;
  const auto reports = evaluate(scorer, users, train.item_vocab(), metrics, opts);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_DOUBLE_EQ(reports[0].mean, 0.5);
  EXPECT_NEAR(reports[0].std_error, 0.5, 1e-15);
  EXPECT_EQ(reports[0].n_users, 2u);
  EXPECT_EQ(reports[0].per_user, (std::vector<double>{1.0, 0.0}));
  EXPECT_NEAR(reports[1].per_user[0], 1.0, 1e-15);
  EXPECT_NEAR(reports[1].per_user[1], 0.5, 1e-15);
  EXPECT_NEAR(reports[1].mean, 0.75, 1e-15);
}

TEST(Evaluate, RejectsForeignVocabularyAndEmptyInput) {
  const auto train = popularity_train();
  PopularityScorer scorer(train);
  std::vector<EvalUser> users{eval_user("a", {0}, {1})};
  const std::vector<MetricSpec> metrics{{Metric::recall, 1}};
  EXPECT_THROW(evaluate(scorer, users, testing::numbered(4, "z"), metrics), VocabMismatchError);
  EXPECT_THROW(evaluate(scorer, std::span<const EvalUser>{}, train.item_vocab(), metrics), Error);
  EXPECT_THROW(evaluate(scorer, users, train.item_vocab(), std::span<const MetricSpec>{}), std::invalid_argument);
}

TEST(Evaluate, ThreadCountDoesNotChangeResults) {
  SyntheticConfig cfg;
  cfg.n_users = 600;
  cfg.n_items = 60;
  cfg.n_clusters = 4;
  const auto split = split_strong(make_synthetic(cfg), 100, 100, 0.8, 3);
  EaseScorer scorer(solve(build_gram(split.train), 20.0));
  const auto metrics = parse_metrics("recall@5,ndcg@10");
  const auto one = evaluate(scorer, split, EvalSet::test, metrics);
  EvaluateOptions opts;
  opts.threads = 4;
  const auto four = evaluate(scorer, split, EvalSet::test, metrics, opts);
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    EXPECT_EQ(one[m].mean, four[m].mean);
    EXPECT_EQ(one[m].std_error, four[m].std_error);
    EXPECT_EQ(one[m].n_users, split.test.size());
  }
}

TEST(Summarize, SampleStandardError) {
  const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  const auto r = summarize({Metric::recall, 1}, xs);
  EXPECT_DOUBLE_EQ(r.mean, 2.5);
  EXPECT_NEAR(r.std_error, std::sqrt(5.0 / 3.0) / 2.0, 1e-15);
  const std::vector<double> one{0.7};
  EXPECT_EQ(summarize({Metric::recall, 1}, one).std_error, 0.0);
}

}  // namespace
}  // namespace ease
