#include "ease/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "ease/error.hpp"
#include "ease/parallel.hpp"

namespace ease {

MetricReport summarize(const MetricSpec& spec, std::span<const double> per_user) {
  MetricReport report;
  report.spec = spec;
  report.n_users = per_user.size();
  if (per_user.empty()) return report;
  double sum = 0.0;
  for (double v : per_user) sum += v;
  const auto n = static_cast<double>(per_user.size());
  report.mean = sum / n;
  if (per_user.size() > 1) {
    double ss = 0.0;
    for (double v : per_user) ss += (v - report.mean) * (v - report.mean);
    report.std_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return report;
}

std::vector<MetricReport> evaluate(const Scorer& scorer, std::span<const EvalUser> users,
                                   const Vocabulary& user_items,
                                   std::span<const MetricSpec> metrics,
                                   const EvaluateOptions& options) {
  if (scorer.items().hash() != user_items.hash()) {
    throw VocabMismatchError(fmt::format("{} was trained on a different item vocabulary", scorer.name()));
  }
  if (users.empty()) throw Error("no users to evaluate");
  if (metrics.empty()) throw std::invalid_argument("no metrics requested");
  std::size_t depth = 0;
  for (const auto& m : metrics) depth = std::max(depth, m.k);

  std::vector<std::vector<double>> values(metrics.size(), std::vector<double>(users.size()));
  parallel_for(users.size(), options.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<double> scores(scorer.n_items());
    for (auto u = begin; u < end; ++u) {
      const auto& user = users[u];
      if (user.held_out.empty()) {
        throw Error(fmt::format("user '{}' has an empty held-out set", user.fold_in.user));
      }
      scorer.score(user.fold_in.view(), scores);
      const auto ranked = top_k(scores, user.fold_in.items, depth);
      for (const auto& entry : ranked.items) {
        if (std::binary_search(user.fold_in.items.begin(), user.fold_in.items.end(), entry.item)) {
          throw std::logic_error("fold-in item leaked into a ranked list");
        }
      }
      for (std::size_t m = 0; m < metrics.size(); ++m) {
        values[m][u] = metric_value(metrics[m], ranked, user.held_out);
      }
    }
  });

  std::vector<MetricReport> reports;
  reports.reserve(metrics.size());
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    auto report = summarize(metrics[m], values[m]);
    if (options.keep_per_user) report.per_user = std::move(values[m]);
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<MetricReport> evaluate(const Scorer& scorer, const EvalSplit& split, EvalSet set,
                                   std::span<const MetricSpec> metrics,
                                   const EvaluateOptions& options) {
  const auto& users = set == EvalSet::validation ? split.validation : split.test;
  return evaluate(scorer, users, split.train.item_vocab(), metrics, options);
}

}  // namespace ease
