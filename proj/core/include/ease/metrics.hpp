#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ease/ranking.hpp"

namespace ease {

enum class Metric { recall, ndcg };

struct MetricSpec {
  Metric metric;
  std::size_t k;

  /// "recall@20", "ndcg@100"
  std::string label() const;
  friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

/// Parses "recall@K" / "ndcg@K"; throws std::invalid_argument otherwise.
MetricSpec parse_metric(std::string_view text);
/// Comma-separated list of metric labels.
std::vector<MetricSpec> parse_metrics(std::string_view text);

// Both metrics use binary relevance and look only at the first k positions
// of `ranked`. `held_out` must be sorted and non-empty (std::invalid_argument
// otherwise).

/// |top-k ∩ held_out| / min(k, |held_out|)
double recall_at_k(const RankedList& ranked, std::span<const ItemIndex> held_out, std::size_t k);

/// DCG / IDCG with gain 1/log2(rank + 1), IDCG truncated at
/// min(k, |held_out|) positions.
double ndcg_at_k(const RankedList& ranked, std::span<const ItemIndex> held_out, std::size_t k);

double metric_value(const MetricSpec& spec, const RankedList& ranked,
                    std::span<const ItemIndex> held_out);

}  // namespace ease
