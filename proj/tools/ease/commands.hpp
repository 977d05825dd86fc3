#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ease::cli {

struct IngestArgs {
  std::string input;
  std::string output;
  std::size_t min_user_activity = 0;
  std::size_t min_item_activity = 0;
  bool binarize = false;
  double value_threshold = 0.0;
  std::optional<std::string> delimiter;
};

struct SplitArgs {
  std::string input;
  std::string output;
  std::string mode = "strong";
  std::size_t val_users = 0;
  std::size_t test_users = 0;
  double fold_in_frac = 0.8;
  double train_frac = 0.7;
  std::uint64_t seed = 0;
};

struct GramArgs {
  std::string matrix;
  std::string split;
  std::vector<std::string> merge;
  std::string output;
  std::string gram_mode = "cooccurrence";
  unsigned threads = 0;
};

struct TrainArgs {
  std::string matrix;
  std::string split;
  std::string gram;
  std::string output;
  std::optional<std::string> gram_mode;
  double lambda = 0.0;
  bool clamp_nonneg = false;
  unsigned threads = 0;
};

struct EvaluateArgs {
  std::string model;
  std::string baseline;
  std::string split;
  std::string set = "test";
  std::string metrics = "recall@20,recall@50,ndcg@100";
  std::string json;
  std::string dataset;
  bool compare_published = false;
  unsigned threads = 0;
};

struct RecommendArgs {
  std::string model;
  std::string history;
  std::string split;
  std::string set = "test";
  std::size_t k = 100;
  std::string output = "-";
  bool include_history = false;
  unsigned threads = 0;
};

struct InspectArgs {
  std::string model;
  std::optional<std::string> weights_histogram;
  std::size_t bins = 50;
  std::optional<std::string> rec_counts;
  std::string history;
  std::string split;
  std::string set = "test";
  std::size_t k = 100;
  unsigned threads = 0;
};

int run_ingest(const IngestArgs& args);
int run_split(const SplitArgs& args);
int run_gram(const GramArgs& args);
int run_train(const TrainArgs& args);
int run_evaluate(const EvaluateArgs& args);
int run_recommend(const RecommendArgs& args);
int run_inspect(const InspectArgs& args);

}  // namespace ease::cli
