#pragma once

#include <span>
#include <string>
#include <vector>

#include "ease/solver.hpp"
#include "ease/split.hpp"
#include "ease/vocabulary.hpp"

namespace ease {

/// Anything that maps a user history to one score per item. EASE and the
/// baselines share this interface so they go through a single ranking and
/// evaluation path.
class Scorer {
 public:
  virtual ~Scorer() = default;

  virtual std::string name() const = 0;
  virtual const Vocabulary& items() const = 0;
  /// `out` must have items().size() entries; it is overwritten.
  virtual void score(History history, std::span<double> out) const = 0;

  std::size_t n_items() const { return items().size(); }
  std::vector<double> score(History history) const;
};

/// S = x·B. Centered and standardized models first map the history into
/// the Gram's column space; each item's score is then mapped back as
/// σ_j·s_j + μ_j so that scores live in the space of the raw data.
class EaseScorer final : public Scorer {
 public:
  explicit EaseScorer(WeightModel model);

  std::string name() const override;
  const Vocabulary& items() const override { return model_.items; }
  void score(History history, std::span<double> out) const override;
  using Scorer::score;

  const WeightModel& model() const noexcept { return model_; }

 private:
  WeightModel model_;
  // Contribution of the all-means history in the transformed space.
  std::vector<double> offset_;
};

/// Throws std::out_of_range on an item index >= n.
void check_history(History history, std::size_t n_items);

}  // namespace ease
