#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ease/scorer.hpp"
#include "ease/solver.hpp"
#include "ease/split.hpp"

namespace ease {

/// Dense score vector x·B for one history; cost O(nnz(x)·n).
std::vector<double> score_user(History history, const WeightModel& model);

/// As above, but first checks that the history was indexed against the
/// model's item vocabulary.
std::vector<double> score_user(History history, const WeightModel& model,
                               const VocabHash& history_vocab);

struct ScoredItem {
  ItemIndex item;
  double score;

  friend bool operator==(const ScoredItem&, const ScoredItem&) = default;
};

struct RankedList {
  std::string user;
  std::vector<ScoredItem> items;  ///< non-increasing score, ties by index
};

/// The k best-scoring items outside `exclude`; ties go to the lower index.
RankedList top_k(std::span<const double> scores, std::span<const ItemIndex> exclude, std::size_t k);

/// score + top_k for each history, output in input order. A failure for one
/// user is rethrown as Error naming that user.
std::vector<RankedList> recommend_batch(std::span<const UserHistory> users, const Scorer& scorer,
                                        std::size_t k, bool exclude_history = true,
                                        unsigned threads = 1);

/// "user_id<TAB>item_id:score,item_id:score,..." with 6 significant digits.
void write_recommendations(std::ostream& out, std::span<const RankedList> lists,
                           const Vocabulary& items);

}  // namespace ease
