#include "ease/scorer.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace ease {

std::vector<double> Scorer::score(History history) const {
  std::vector<double> out(n_items());
  score(history, out);
  return out;
}

void check_history(History history, std::size_t n_items) {
  if (history.items.size() != history.values.size()) {
    throw std::invalid_argument("history items/values length mismatch");
  }
  for (auto i : history.items) {
    if (i >= n_items) {
      throw std::out_of_range(fmt::format("item index {} out of range (n_items = {})", i, n_items));
    }
  }
}

EaseScorer::EaseScorer(WeightModel model) : model_(std::move(model)) {
  const auto n = model_.n_items();
  if (model_.gram_mode == GramMode::cooccurrence) return;
  if (model_.column_means.size() != n ||
      (model_.gram_mode == GramMode::standardized && model_.column_stds.size() != n)) {
    throw std::invalid_argument("model is missing the column statistics of its Gram transform");
  }
  offset_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double shift = model_.column_means[i];
    if (model_.gram_mode == GramMode::standardized) shift /= model_.column_stds[i];
    if (shift == 0.0) continue;
    const auto row = model_.weights.row(i);
    for (std::size_t j = 0; j < n; ++j) offset_[j] += shift * row[j];
  }
}

std::string EaseScorer::name() const {
  return model_.variant == Variant::full ? "ease" : "ease_nonneg";
}

void EaseScorer::score(History history, std::span<double> out) const {
  const auto n = model_.n_items();
  check_history(history, n);
  if (out.size() != n) throw std::invalid_argument("score buffer has the wrong length");
  std::fill(out.begin(), out.end(), 0.0);
  const bool standardized = model_.gram_mode == GramMode::standardized;
  for (std::size_t k = 0; k < history.items.size(); ++k) {
    const auto i = history.items[k];
    double x = history.values[k];
    if (standardized) x /= model_.column_stds[i];
    const auto row = model_.weights.row(i);
    for (std::size_t j = 0; j < n; ++j) out[j] += x * row[j];
  }
  if (model_.gram_mode == GramMode::cooccurrence) return;
  for (std::size_t j = 0; j < n; ++j) {
    double s = out[j] - offset_[j];
    if (standardized) s *= model_.column_stds[j];
    out[j] = s + model_.column_means[j];
  }
}

}  // namespace ease
