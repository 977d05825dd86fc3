#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ease/metrics.hpp"
#include "ease/scorer.hpp"
#include "ease/split.hpp"

namespace ease {

struct MetricReport {
  MetricSpec spec;
  double mean = 0.0;
  /// Sample standard deviation over users divided by sqrt(n_users).
  double std_error = 0.0;
  std::size_t n_users = 0;
  std::vector<double> per_user;  ///< filled only when requested
};

struct EvaluateOptions {
  unsigned threads = 1;
  bool keep_per_user = false;
};

enum class EvalSet { validation, test };

/// Ranks each user's non-fold-in items by the scorer's output up to the
/// largest requested cutoff, then averages every metric. Users are reduced
/// in input order, so results do not depend on the thread count.
///
/// Throws VocabMismatchError if the scorer and the users' index space
/// differ, and Error if there is no user to evaluate.
std::vector<MetricReport> evaluate(const Scorer& scorer, std::span<const EvalUser> users,
                                   const Vocabulary& user_items,
                                   std::span<const MetricSpec> metrics,
                                   const EvaluateOptions& options = {});

std::vector<MetricReport> evaluate(const Scorer& scorer, const EvalSplit& split, EvalSet set,
                                   std::span<const MetricSpec> metrics,
                                   const EvaluateOptions& options = {});

/// Mean and standard error of a per-user sample.
MetricReport summarize(const MetricSpec& spec, std::span<const double> per_user);

}  // namespace ease
