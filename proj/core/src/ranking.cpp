#include "ease/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "ease/error.hpp"
#include "ease/parallel.hpp"

namespace ease {

std::vector<double> score_user(History history, const WeightModel& model) {
  if (model.gram_mode == GramMode::cooccurrence) {
    const auto n = model.n_items();
    check_history(history, n);
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < history.items.size(); ++k) {
      const double x = history.values[k];
      const auto row = model.weights.row(history.items[k]);
      for (std::size_t j = 0; j < n; ++j) out[j] += x * row[j];
    }
    return out;
  }
  return EaseScorer(model).score(history);
}

std::vector<double> score_user(History history, const WeightModel& model,
                               const VocabHash& history_vocab) {
  if (history_vocab != model.items.hash()) {
    throw VocabMismatchError("history and model use different item vocabularies");
  }
  return score_user(history, model);
}

RankedList top_k(std::span<const double> scores, std::span<const ItemIndex> exclude, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  std::vector<char> excluded(scores.size(), 0);
  for (auto i : exclude) {
    if (i < scores.size()) excluded[i] = 1;
  }
  std::vector<ItemIndex> candidates;
  candidates.reserve(scores.size());
  for (std::size_t j = 0; j < scores.size(); ++j) {
    if (!excluded[j]) candidates.push_back(static_cast<ItemIndex>(j));
  }
  const auto better = [&](ItemIndex a, ItemIndex b) {
    return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
  };
  const auto take = std::min(k, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take),
                    candidates.end(), better);
  RankedList out;
  out.items.reserve(take);
  for (std::size_t r = 0; r < take; ++r) out.items.push_back({candidates[r], scores[candidates[r]]});
  return out;
}

std::vector<RankedList> recommend_batch(std::span<const UserHistory> users, const Scorer& scorer,
                                        std::size_t k, bool exclude_history, unsigned threads) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  std::vector<RankedList> out(users.size());
  parallel_for(users.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<double> buffer(scorer.n_items());
    for (auto u = begin; u < end; ++u) {
      const auto& user = users[u];
      try {
        scorer.score(user.view(), buffer);
        out[u] = top_k(buffer, exclude_history ? std::span<const ItemIndex>(user.items)
                                               : std::span<const ItemIndex>{},
                       k);
        out[u].user = user.user;
      } catch (const std::exception& e) {
        throw Error(fmt::format("user '{}': {}", user.user, e.what()));
      }
    }
  });
  return out;
}

void write_recommendations(std::ostream& out, std::span<const RankedList> lists,
                           const Vocabulary& items) {
  for (const auto& list : lists) {
    out << list.user << '\t';
    for (std::size_t r = 0; r < list.items.size(); ++r) {
      out << (r ? "," : "") << items.id(list.items[r].item) << ':'
          << fmt::format("{:.6g}", list.items[r].score);
    }
    out << '\n';
  }
}

}  // namespace ease
