#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ease/evaluate.hpp"

namespace ease {

struct SplitInfo {
  std::string mode;
  std::uint64_t seed = 0;
  std::string set;
  std::size_t n_users = 0;
};

struct EvalReport {
  std::string model;
  std::string dataset;
  SplitInfo split;
  std::vector<MetricReport> metrics;
};

/// {model, dataset, split:{mode,seed,set,n_users}, metrics:[{name,k,mean,stderr,n_users}]}
std::string report_to_json(const EvalReport& report);
EvalReport report_from_json(std::string_view text);

/// Aligned plain-text table, one row per metric.
std::string report_to_table(const EvalReport& report);

/// A published ranking-accuracy number for a (dataset, model, metric) cell.
struct ReferenceResult {
  std::string_view dataset;  ///< "ml-20m", "netflix", "msd", "ml-10m"
  std::string_view model;    ///< "popularity", "ease", "ease_nonneg", "cosine", ...
  std::string_view metric;   ///< "recall@20", ...
  double value;
};

std::span<const ReferenceResult> reference_results();

std::optional<double> reference_value(std::string_view dataset, std::string_view model,
                                      std::string_view metric);

/// Table of (metric, ours, reference, delta) for every cell that has a
/// reference number; empty string when none match.
std::string reference_comparison(const EvalReport& report);

}  // namespace ease
