#include <gtest/gtest.h>

#include "ease/error.hpp"
#include "ease/report.hpp"

namespace ease {
namespace {

EvalReport sample_report() {
  EvalReport r;
  r.model = "ease";
  r.dataset = "ml-20m";
  r.split = {"strong", 7, "test", 10000};
  r.metrics.push_back({{Metric::recall, 20}, 0.3875, 0.0021, 10000, {}});
  r.metrics.push_back({{Metric::ndcg, 100}, 0.42, 0.002, 10000, {}});
  return r;
}

TEST(Report, JsonRoundTrip) {
  const auto r = sample_report();
  const auto back = report_from_json(report_to_json(r));
  EXPECT_EQ(back.model, "ease");
  EXPECT_EQ(back.dataset, "ml-20m");
  EXPECT_EQ(back.split.seed, 7u);
  EXPECT_EQ(back.split.set, "test");
  ASSERT_EQ(back.metrics.size(), 2u);
  EXPECT_EQ(back.metrics[0].spec, (MetricSpec{Metric::recall, 20}));
  EXPECT_EQ(back.metrics[0].mean, 0.3875);
  EXPECT_EQ(back.metrics[1].std_error, 0.002);
  EXPECT_THROW(report_from_json("{\"model\": 1}"), FormatError);
  EXPECT_THROW(report_from_json("not json"), FormatError);
}

TEST(Report, TableListsEveryMetric) {
  const auto table = report_to_table(sample_report());
  EXPECT_NE(table.find("recall@20"), std::string::npos);
  EXPECT_NE(table.find("ndcg@100"), std::string::npos);
  EXPECT_NE(table.find("0.3875"), std::string::npos);
}

TEST(Reference, KnownCells) {
  EXPECT_EQ(reference_value("ml-20m", "ease", "recall@20"), 0.391);
  EXPECT_EQ(reference_value("msd", "popularity", "ndcg@100"), reference_value("msd", "popularity", "ndcg@100"));
  EXPECT_FALSE(reference_value("ml-20m", "ease", "recall@7").has_value());
  EXPECT_FALSE(reference_value("nope", "ease", "recall@20").has_value());
  for (const auto& r : reference_results()) {
    EXPECT_GT(r.value, 0.0);
    EXPECT_LT(r.value, 1.0);
  }
}

TEST(Reference, ComparisonShowsDelta) {
  const auto text = reference_comparison(sample_report());
  EXPECT_NE(text.find("0.391"), std::string::npos);
  EXPECT_NE(text.find("recall@20"), std::string::npos);
  auto other = sample_report();
  other.dataset = "unknown";
  EXPECT_TRUE(reference_comparison(other).empty());
}

}  // namespace
}  // namespace ease
