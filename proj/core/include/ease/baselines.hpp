#pragma once

#include <string>
#include <vector>

#include "ease/dense_matrix.hpp"
#include "ease/interaction_matrix.hpp"
#include "ease/scorer.hpp"

namespace ease {

/// Same score vector for everybody: the number of training users per item.
class PopularityScorer final : public Scorer {
 public:
  explicit PopularityScorer(const InteractionMatrix& train);

  std::string name() const override { return "popularity"; }
  const Vocabulary& items() const override { return items_; }
  void score(History history, std::span<double> out) const override;
  using Scorer::score;

  const std::vector<double>& counts() const noexcept { return counts_; }

 private:
  Vocabulary items_;
  std::vector<double> counts_;
};

/// Item-item neighbourhood model on cosine similarity of co-occurrence
/// columns: C_ij = G_ij / sqrt(G_ii·G_jj) (0 if either is 0), zero
/// diagonal, score = x·C.
class CosineScorer final : public Scorer {
 public:
  explicit CosineScorer(const InteractionMatrix& train, unsigned threads = 1);

  std::string name() const override { return "cosine"; }
  const Vocabulary& items() const override { return items_; }
  void score(History history, std::span<double> out) const override;
  using Scorer::score;

  const DenseMatrix& similarity() const noexcept { return similarity_; }

 private:
  Vocabulary items_;
  DenseMatrix similarity_;
};

}  // namespace ease
