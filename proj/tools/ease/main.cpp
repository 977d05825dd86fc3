#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.hpp"
#include "ease/error.hpp"
#include "ease/version.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 1;

CLI::App* subcommand(CLI::App& app, const std::string& name, const std::string& description) {
  auto* sub = app.add_subcommand(name, description);
  sub->add_flag_callback(
      "--version", [] { throw CLI::CallForVersion(std::string("ease ") + ease::kVersion, 0); },
      "Print the version and exit");
  return sub;
}

void add_threads(CLI::App* sub, unsigned& threads) {
  sub->add_option("--threads", threads, "Worker threads (0 = all cores)")
      ->envname("EASE_THREADS")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ease::cli;
  CLI::App app{"Closed-form item-item recommender: ingest, split, train, evaluate, recommend, inspect"};
  app.set_version_flag("--version", std::string("ease ") + ease::kVersion);
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* c_ingest = subcommand(app, "ingest", "Parse user-item records into a canonical matrix directory");
  c_ingest->add_option("--input", ingest.input, "Record file (user, item[, value[, timestamp]])")->required();
  c_ingest->add_option("--output", ingest.output, "Output directory")->required();
  c_ingest->add_option("--min-user-activity", ingest.min_user_activity, "Drop users with fewer interactions");
  c_ingest->add_option("--min-item-activity", ingest.min_item_activity, "Drop items with fewer users");
  c_ingest->add_flag("--binarize", ingest.binarize, "Store every kept interaction as 1");
  c_ingest->add_option("--value-threshold", ingest.value_threshold, "Keep records whose value exceeds this");
  c_ingest->add_option("--delimiter", ingest.delimiter, "Field separator (default: detect)");

  SplitArgs split;
  auto* c_split = subcommand(app, "split", "Split a matrix into train and evaluation users");
  c_split->add_option("--input", split.input, "Canonical matrix directory")->required();
  c_split->add_option("--output", split.output, "Split directory")->required();
  c_split->add_option("--mode", split.mode, "strong or weak")->check(CLI::IsMember({"strong", "weak"}));
  c_split->add_option("--val-users", split.val_users, "Validation users (strong mode)");
  c_split->add_option("--test-users", split.test_users, "Test users (strong mode)");
  c_split->add_option("--fold-in-frac", split.fold_in_frac, "Share of an evaluation user's items fed to the model")
      ->capture_default_str();
  c_split->add_option("--train-frac", split.train_frac, "Share of each user's items kept for training (weak mode)")
      ->capture_default_str();
  c_split->add_option("--seed", split.seed, "Random seed");

  GramArgs gram;
  auto* c_gram = subcommand(app, "gram", "Compute or merge item-item Gram matrices");
  c_gram->add_option("--matrix", gram.matrix, "Canonical matrix directory");
  c_gram->add_option("--split", gram.split, "Split directory (uses its training users)");
  c_gram->add_option("--merge", gram.merge, "Co-occurrence Gram files over disjoint user shards");
  c_gram->add_option("--output", gram.output, "Gram file")->required();
  c_gram->add_option("--gram-mode", gram.gram_mode, "cooccurrence, centered or standardized")
      ->check(CLI::IsMember({"cooccurrence", "centered", "standardized"}));
  add_threads(c_gram, gram.threads);

  TrainArgs train;
  auto* c_train = subcommand(app, "train", "Fit the item-item weight matrix");
  c_train->add_option("--matrix", train.matrix, "Canonical matrix directory");
  c_train->add_option("--split", train.split, "Split directory (uses its training users)");
  c_train->add_option("--gram", train.gram, "Precomputed Gram file");
  c_train->add_option("--output", train.output, "Model file")->required();
  c_train->add_option("--gram-mode", train.gram_mode, "cooccurrence, centered or standardized")
      ->check(CLI::IsMember({"cooccurrence", "centered", "standardized"}));
  c_train->add_option("--lambda", train.lambda, "L2 regularization strength (> 0)")
      ->required()
      ->check(CLI::PositiveNumber);
  c_train->add_flag("--clamp-nonneg", train.clamp_nonneg, "Zero out negative weights after solving");
  add_threads(c_train, train.threads);

  EvaluateArgs evaluate;
  auto* c_eval = subcommand(app, "evaluate", "Rank held-out items and report accuracy");
  c_eval->add_option("--model", evaluate.model, "Model file");
  c_eval->add_option("--baseline", evaluate.baseline, "popularity or cosine")
      ->check(CLI::IsMember({"popularity", "cosine"}));
  c_eval->add_option("--split", evaluate.split, "Split directory")->required();
  c_eval->add_option("--set", evaluate.set, "validation or test")->check(CLI::IsMember({"validation", "test"}));
  c_eval->add_option("--metrics", evaluate.metrics, "Comma-separated metric@k list")->capture_default_str();
  c_eval->add_option("--json", evaluate.json, "Also write the JSON report here ('-' for stdout)");
  c_eval->add_option("--dataset", evaluate.dataset, "Dataset label (ml-20m, netflix, msd, ml-10m)");
  c_eval->add_flag("--compare-paper", evaluate.compare_published, "Print deltas against published numbers");
  add_threads(c_eval, evaluate.threads);

  RecommendArgs recommend;
  auto* c_rec = subcommand(app, "recommend", "Write top-k recommendations per user");
  c_rec->add_option("--model", recommend.model, "Model file")->required();
  c_rec->add_option("--history", recommend.history, "Canonical matrix of user histories");
  c_rec->add_option("--split", recommend.split, "Split directory (uses fold-in histories)");
  c_rec->add_option("--set", recommend.set, "validation or test")->check(CLI::IsMember({"validation", "test"}));
  c_rec->add_option("--k", recommend.k, "List length")->capture_default_str();
  c_rec->add_option("--output", recommend.output, "Output file ('-' for stdout)");
  c_rec->add_flag("--include-history", recommend.include_history, "Allow items already in the history");
  add_threads(c_rec, recommend.threads);

  InspectArgs inspect;
  auto* c_inspect = subcommand(app, "inspect", "Summarize a model and dump diagnostic CSVs");
  c_inspect->add_option("--model", inspect.model, "Model file")->required();
  c_inspect->add_option("--weights-histogram", inspect.weights_histogram, "Weight histogram CSV (default stdout)")
      ->expected(0, 1)
      ->default_str("-");
  c_inspect->add_option("--bins", inspect.bins, "Histogram bins")->capture_default_str();
  c_inspect->add_option("--rec-counts", inspect.rec_counts, "Recommendation-count CSV (default stdout)")
      ->expected(0, 1)
      ->default_str("-");
  c_inspect->add_option("--history", inspect.history, "Histories for --rec-counts");
  c_inspect->add_option("--split", inspect.split, "Split whose fold-in histories feed --rec-counts");
  c_inspect->add_option("--set", inspect.set, "validation or test")->check(CLI::IsMember({"validation", "test"}));
  c_inspect->add_option("--k", inspect.k, "List length for --rec-counts")->capture_default_str();
  add_threads(c_inspect, inspect.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*c_ingest) return run_ingest(ingest);
    if (*c_split) return run_split(split);
    if (*c_gram) return run_gram(gram);
    if (*c_train) return run_train(train);
    if (*c_eval) return run_evaluate(evaluate);
    if (*c_rec) return run_recommend(recommend);
    if (*c_inspect) return run_inspect(inspect);
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kRuntimeError;
  }
  return kUsageError;
}
