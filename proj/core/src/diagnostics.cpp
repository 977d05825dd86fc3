#include "ease/diagnostics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace ease {

WeightHistogram weight_histogram(const WeightModel& model, std::size_t n_bins) {
  if (n_bins == 0) throw std::invalid_argument("need at least one bin");
  const auto& w = model.weights;
  const auto n = w.rows();
  WeightHistogram hist;
  if (n < 2) return hist;

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::size_t negative = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      lo = std::min(lo, w(i, j));
      hi = std::max(hi, w(i, j));
      negative += w(i, j) < 0.0;
    }
  }
  hist.n_weights = n * (n - 1);
  hist.negative_fraction = static_cast<double>(negative) / static_cast<double>(hist.n_weights);

  if (lo == hi) {
    hist.bins.push_back({lo, hi, hist.n_weights});
    return hist;
  }
  const double width = (hi - lo) / static_cast<double>(n_bins);
  hist.bins.resize(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b) {
    hist.bins[b] = {lo + width * static_cast<double>(b),
                    b + 1 == n_bins ? hi : lo + width * static_cast<double>(b + 1), 0};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto b = static_cast<std::size_t>((w(i, j) - lo) / width);
      ++hist.bins[std::min(b, n_bins - 1)].count;
    }
  }
  return hist;
}

std::vector<std::size_t> rec_count_curve(std::span<const RankedList> lists, std::size_t n_items) {
  std::vector<std::size_t> counts(n_items, 0);
  for (const auto& list : lists) {
    for (const auto& entry : list.items) {
      if (entry.item >= n_items) throw std::out_of_range("item index out of range");
      ++counts[entry.item];
    }
  }
  std::sort(counts.begin(), counts.end(), std::greater<>());
  return counts;
}

void write_histogram_csv(std::ostream& out, const WeightHistogram& histogram) {
  out << "lower,upper,count\n";
  for (const auto& bin : histogram.bins) {
    out << fmt::format("{:.9g},{:.9g},{}\n", bin.lower, bin.upper, bin.count);
  }
}

void write_rec_count_csv(std::ostream& out, std::span<const std::size_t> curve) {
  out << "rank,count\n";
  for (std::size_t r = 0; r < curve.size(); ++r) out << (r + 1) << ',' << curve[r] << '\n';
}

}  // namespace ease
