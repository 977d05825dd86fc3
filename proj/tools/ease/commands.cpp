#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "ease/ease.hpp"

namespace ease::cli {
namespace {

namespace fs = std::filesystem;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// "-" selects stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") return;
    file_.open(path);
    if (!file_) throw Error(fmt::format("cannot write {}", path));
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void finish(const std::string& path) {
    stream().flush();
    if (!stream()) throw Error(fmt::format("write failed: {}", path));
  }

 private:
  std::ofstream file_;
};

EvalSet parse_set(const std::string& name) {
  if (name == "validation") return EvalSet::validation;
  if (name == "test") return EvalSet::test;
  throw std::invalid_argument(fmt::format("unknown evaluation set '{}'", name));
}

// Exactly one of the named sources must be given.
void require_one(std::initializer_list<std::pair<const char*, bool>> sources) {
  std::size_t given = 0;
  std::string names;
  for (const auto& [name, present] : sources) {
    given += present ? 1 : 0;
    names += names.empty() ? name : fmt::format(", {}", name);
  }
  if (given != 1) throw std::invalid_argument(fmt::format("give exactly one of {}", names));
}

InteractionMatrix load_train_matrix(const std::string& matrix, const std::string& split) {
  return read_canonical(matrix.empty() ? fs::path(split) / "train" : fs::path(matrix));
}

// Maps a history from `source` item indices into `target` ones; unknown
// items are dropped and counted.
UserHistory remap(const std::string& user, SparseRow row, const Vocabulary& source, const Vocabulary& target,
                  std::size_t& dropped) {
  std::vector<std::pair<ItemIndex, double>> entries;
  for (std::size_t k = 0; k < row.size(); ++k) {
    const auto idx = target.find(source.id(row.items[k]));
    if (!idx) {
      ++dropped;
      continue;
    }
    entries.emplace_back(*idx, row.values[k]);
  }
  std::sort(entries.begin(), entries.end());
  UserHistory out{user, {}, {}};
  for (const auto& [i, v] : entries) {
    out.items.push_back(i);
    out.values.push_back(v);
  }
  return out;
}

// Histories to rank, in the model's item index space: either every row of a
// canonical matrix or the fold-in part of a split's evaluation set.
std::vector<UserHistory> load_histories(const std::string& history, const std::string& split,
                                        const std::string& set, const Vocabulary& items) {
  require_one({{"--history", !history.empty()}, {"--split", !split.empty()}});
  std::vector<UserHistory> out;
  std::size_t dropped = 0;
  if (!history.empty()) {
    const auto matrix = read_canonical(history);
    for (std::size_t u = 0; u < matrix.n_users(); ++u) {
      out.push_back(remap(matrix.user_vocab().id(u), matrix.row(u), matrix.item_vocab(), items, dropped));
    }
  } else {
    const auto s = read_split(split);
    const auto& users = parse_set(set) == EvalSet::test ? s.test : s.validation;
    const auto& source = s.train.item_vocab();
    for (const auto& u : users) {
      if (source == items) {
        out.push_back(u.fold_in);
      } else {
        const SparseRow row{u.fold_in.items, u.fold_in.values};
        out.push_back(remap(u.fold_in.user, row, source, items, dropped));
      }
    }
  }
  if (dropped > 0) fmt::print(stderr, "note: ignored {} interactions with items unknown to the model\n", dropped);
  return out;
}

}  // namespace

int run_ingest(const IngestArgs& args) {
  IngestOptions opts;
  opts.min_user_activity = args.min_user_activity;
  opts.min_item_activity = args.min_item_activity;
  opts.binarize = args.binarize;
  opts.value_threshold = args.value_threshold;
  opts.delimiter = args.delimiter;
  IngestStats stats;
  const auto matrix = ingest_file(args.input, opts, &stats);
  write_canonical(matrix, args.output);
  fmt::print(stderr,
             "read {} records ({} duplicates, {} at or below threshold); filtering removed {} users and "
             "{} items in {} rounds\n",
             stats.records, stats.duplicates, stats.below_threshold, stats.users_removed, stats.items_removed,
             stats.filter_rounds);
  fmt::print("users={} items={} nnz={}\n", matrix.n_users(), matrix.n_items(), matrix.nnz());
  return 0;
}

int run_split(const SplitArgs& args) {
  const auto matrix = read_canonical(args.input);
  const auto mode = parse_split_mode(args.mode);
  const auto split = mode == SplitMode::strong
                         ? split_strong(matrix, args.val_users, args.test_users, args.fold_in_frac, args.seed)
                         : split_weak(matrix, args.train_frac, args.seed);
  write_split(split, args.output);
  fmt::print("mode={} train_users={} validation_users={} test_users={} skipped={}\n", to_string(mode),
             split.train.n_users(), split.validation.size(), split.test.size(), split.skipped.size());
  return 0;
}

int run_gram(const GramArgs& args) {
  require_one({{"--matrix", !args.matrix.empty()}, {"--split", !args.split.empty()}, {"--merge", !args.merge.empty()}});
  Stopwatch clock;
  GramMatrix gram;
  if (!args.merge.empty()) {
    std::vector<GramMatrix> parts;
    for (const auto& path : args.merge) parts.push_back(read_gram(path));
    gram = merge_grams(parts);
  } else {
    gram = build_gram(load_train_matrix(args.matrix, args.split), parse_gram_mode(args.gram_mode), args.threads);
  }
  write_gram(gram, args.output);
  fmt::print("items={} users={} mode={} seconds={:.3f}\n", gram.n_items(), gram.n_users_used, to_string(gram.mode),
             clock.seconds());
  return 0;
}

int run_train(const TrainArgs& args) {
  require_one({{"--matrix", !args.matrix.empty()}, {"--split", !args.split.empty()}, {"--gram", !args.gram.empty()}});
  if (!(args.lambda > 0.0)) throw std::invalid_argument("--lambda must be > 0");
  Stopwatch clock;
  GramMatrix gram;
  if (!args.gram.empty()) {
    gram = read_gram(args.gram);
    if (args.gram_mode && parse_gram_mode(*args.gram_mode) != gram.mode) {
      throw std::invalid_argument(fmt::format("--gram-mode {} conflicts with the {} Gram file", *args.gram_mode,
                                              to_string(gram.mode)));
    }
  } else {
    gram = build_gram(load_train_matrix(args.matrix, args.split),
                      parse_gram_mode(args.gram_mode.value_or("cooccurrence")), args.threads);
  }
  const double gram_seconds = clock.seconds();
  auto model = solve(std::move(gram), args.lambda, args.threads);
  const double solve_seconds = clock.seconds() - gram_seconds;
  const double negatives = negative_fraction(model.weights);
  if (args.clamp_nonneg) model = clamp_nonneg(model);
  write_model(model, args.output);
  fmt::print("items={} lambda={:g} mode={} variant={} negative_fraction={:.4f} gram_seconds={:.3f} "
             "solve_seconds={:.3f}\n",
             model.n_items(), model.lambda, to_string(model.gram_mode), to_string(model.variant), negatives,
             gram_seconds, solve_seconds);
  return 0;
}

int run_evaluate(const EvaluateArgs& args) {
  require_one({{"--model", !args.model.empty()}, {"--baseline", !args.baseline.empty()}});
  const auto metrics = parse_metrics(args.metrics);
  const auto set = parse_set(args.set);
  if (args.compare_published && args.dataset.empty()) {
    throw std::invalid_argument("--compare-paper needs --dataset");
  }
  const auto split = read_split(args.split);

  std::unique_ptr<Scorer> scorer;
  if (!args.model.empty()) {
    scorer = std::make_unique<EaseScorer>(read_model(args.model));
  } else if (args.baseline == "popularity") {
    scorer = std::make_unique<PopularityScorer>(split.train);
  } else if (args.baseline == "cosine") {
    scorer = std::make_unique<CosineScorer>(split.train, args.threads);
  } else {
    throw std::invalid_argument(fmt::format("unknown baseline '{}'", args.baseline));
  }

  EvaluateOptions opts;
  opts.threads = args.threads;
  EvalReport report;
  report.model = scorer->name();
  report.dataset = args.dataset;
  report.metrics = evaluate(*scorer, split, set, metrics, opts);
  report.split = {std::string(to_string(split.mode)), split.seed, args.set,
                  set == EvalSet::test ? split.test.size() : split.validation.size()};

  if (!args.json.empty()) {
    Output out(args.json);
    out.stream() << report_to_json(report) << '\n';
    out.finish(args.json);
  }
  fmt::print("{}", report_to_table(report));
  if (args.compare_published) {
    const auto comparison = reference_comparison(report);
    if (comparison.empty()) {
      fmt::print("no published numbers for model '{}' on dataset '{}'\n", report.model, report.dataset);
    } else {
      fmt::print("\n{}", comparison);
    }
  }
  return 0;
}

int run_recommend(const RecommendArgs& args) {
  if (args.k == 0) throw std::invalid_argument("--k must be >= 1");
  EaseScorer scorer(read_model(args.model));
  const auto users = load_histories(args.history, args.split, args.set, scorer.items());
  const auto lists = recommend_batch(users, scorer, args.k, !args.include_history, args.threads);
  Output out(args.output);
  write_recommendations(out.stream(), lists, scorer.items());
  out.finish(args.output);
  return 0;
}

int run_inspect(const InspectArgs& args) {
  const auto model = read_model(args.model);
  const bool csv_to_stdout = args.weights_histogram.value_or("") == "-" || args.rec_counts.value_or("") == "-";
  if (args.weights_histogram && args.rec_counts && csv_to_stdout) {
    throw std::invalid_argument("only one CSV can go to stdout; give file paths");
  }
  const auto summary = fmt::format("items={} lambda={:g} mode={} variant={} negative_fraction={:.4f}\n",
                                   model.n_items(), model.lambda, to_string(model.gram_mode),
                                   to_string(model.variant), negative_fraction(model.weights));
  fmt::print(csv_to_stdout ? stderr : stdout, "{}", summary);

  if (args.weights_histogram) {
    Output out(*args.weights_histogram);
    write_histogram_csv(out.stream(), weight_histogram(model, args.bins));
    out.finish(*args.weights_histogram);
  }
  if (args.rec_counts) {
    if (args.k == 0) throw std::invalid_argument("--k must be >= 1");
    EaseScorer scorer(model);
    const auto users = load_histories(args.history, args.split, args.set, scorer.items());
    const auto lists = recommend_batch(users, scorer, args.k, true, args.threads);
    Output out(*args.rec_counts);
    write_rec_count_csv(out.stream(), rec_count_curve(lists, model.n_items()));
    out.finish(*args.rec_counts);
  }
  return 0;
}

}  // namespace ease::cli
