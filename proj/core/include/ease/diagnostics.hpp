#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "ease/ranking.hpp"
#include "ease/solver.hpp"

namespace ease {

struct HistogramBin {
  double lower;
  double upper;
  std::size_t count;
};

/// Distribution of the off-diagonal weights.
struct WeightHistogram {
  std::vector<HistogramBin> bins;
  std::size_t n_weights = 0;
  double negative_fraction = 0.0;
};

/// Equal-width bins over [min, max] of the off-diagonal weights; the
/// maximum falls into the last bin. A constant set of weights yields a
/// single bin.
WeightHistogram weight_histogram(const WeightModel& model, std::size_t n_bins);

/// How often each item appears across the lists, sorted descending; items
/// that never appear are included with count 0.
std::vector<std::size_t> rec_count_curve(std::span<const RankedList> lists, std::size_t n_items);

/// "lower,upper,count" rows.
void write_histogram_csv(std::ostream& out, const WeightHistogram& histogram);
/// "rank,count" rows, rank starting at 1.
void write_rec_count_csv(std::ostream& out, std::span<const std::size_t> curve);

}  // namespace ease
