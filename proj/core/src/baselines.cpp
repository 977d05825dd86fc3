#include "ease/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ease/gram.hpp"

namespace ease {

PopularityScorer::PopularityScorer(const InteractionMatrix& train) : items_(train.item_vocab()) {
  const auto counts = train.item_counts();
  counts_.assign(counts.begin(), counts.end());
}

void PopularityScorer::score(History history, std::span<double> out) const {
  check_history(history, counts_.size());
  if (out.size() != counts_.size()) throw std::invalid_argument("score buffer has the wrong length");
  std::copy(counts_.begin(), counts_.end(), out.begin());
}

CosineScorer::CosineScorer(const InteractionMatrix& train, unsigned threads)
    : items_(train.item_vocab()) {
  similarity_ = build_gram(train, GramMode::cooccurrence, threads).values;
  const auto n = similarity_.rows();
  std::vector<double> norms(n);
  for (std::size_t i = 0; i < n; ++i) norms[i] = std::sqrt(similarity_(i, i));
  for (std::size_t i = 0; i < n; ++i) {
    auto row = similarity_.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double denom = norms[i] * norms[j];
      row[j] = (i == j || denom == 0.0) ? 0.0 : row[j] / denom;
    }
  }
}

void CosineScorer::score(History history, std::span<double> out) const {
  const auto n = similarity_.rows();
  check_history(history, n);
  if (out.size() != n) throw std::invalid_argument("score buffer has the wrong length");
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t k = 0; k < history.items.size(); ++k) {
    const double x = history.values[k];
    const auto row = similarity_.row(history.items[k]);
    for (std::size_t j = 0; j < n; ++j) out[j] += x * row[j];
  }
}

}  // namespace ease
