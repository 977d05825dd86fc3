#include "ease/synthetic.hpp"

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace ease {

InteractionMatrix make_synthetic(const SyntheticConfig& config) {
  if (config.n_items == 0 || config.n_users == 0 || config.n_clusters == 0 ||
      config.n_clusters > config.n_items) {
    throw std::invalid_argument("synthetic config needs users, items and 1..n_items clusters");
  }
  if (config.min_activity == 0 || config.min_activity > config.max_activity ||
      config.max_activity > config.n_items) {
    throw std::invalid_argument("activity range must satisfy 1 <= min <= max <= n_items");
  }
  std::mt19937_64 rng(config.seed);

  // Global popularity: a random permutation of 1 / rank^s.
  std::vector<double> popularity(config.n_items);
  std::vector<std::size_t> rank(config.n_items);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  for (std::size_t i = 0; i < config.n_items; ++i) {
    popularity[i] = 1.0 / std::pow(static_cast<double>(rank[i] + 1), config.popularity_exponent);
  }

  std::vector<std::vector<std::size_t>> clusters(config.n_clusters);
  for (std::size_t i = 0; i < config.n_items; ++i) clusters[i % config.n_clusters].push_back(i);

  std::discrete_distribution<std::size_t> global(popularity.begin(), popularity.end());
  std::vector<std::discrete_distribution<std::size_t>> within;
  for (const auto& c : clusters) {
    std::vector<double> w;
    for (auto i : c) w.push_back(popularity[i]);
    within.emplace_back(w.begin(), w.end());
  }

  std::uniform_int_distribution<std::size_t> activity(config.min_activity, config.max_activity);
  std::uniform_int_distribution<std::size_t> pick_cluster(0, config.n_clusters - 1);
  std::bernoulli_distribution in_cluster(config.in_cluster_probability);

  std::vector<Triplet> triplets;
  for (std::size_t u = 0; u < config.n_users; ++u) {
    std::vector<std::size_t> liked;
    for (std::size_t c = 0; c < std::min(config.clusters_per_user, config.n_clusters); ++c) {
      liked.push_back(pick_cluster(rng));
    }
    const auto target = activity(rng);
    std::unordered_set<std::size_t> seen;
    // Bounded retries keep pathological configs from spinning.
    for (std::size_t attempt = 0; seen.size() < target && attempt < 50 * target; ++attempt) {
      std::size_t item;
      if (in_cluster(rng)) {
        const auto c = liked[std::uniform_int_distribution<std::size_t>(0, liked.size() - 1)(rng)];
        item = clusters[c][within[c](rng)];
      } else {
        item = global(rng);
      }
      if (seen.insert(item).second) {
        triplets.push_back({static_cast<UserIndex>(u), static_cast<ItemIndex>(item), 1.0});
      }
    }
  }

  // Items nobody drew are dropped so that every column is non-empty; the
  // survivors keep their original index as id.
  std::vector<std::int64_t> remap(config.n_items, -1);
  for (const auto& t : triplets) remap[t.item] = 0;
  std::vector<std::string> item_ids;
  for (std::size_t i = 0; i < config.n_items; ++i) {
    if (remap[i] < 0) continue;
    remap[i] = static_cast<std::int64_t>(item_ids.size());
    item_ids.push_back(std::to_string(i));
  }
  for (auto& t : triplets) t.item = static_cast<ItemIndex>(remap[t.item]);

  std::vector<std::string> user_ids(config.n_users);
  for (std::size_t u = 0; u < config.n_users; ++u) user_ids[u] = std::to_string(u);
  return InteractionMatrix::from_triplets(Vocabulary(std::move(user_ids)),
                                          Vocabulary(std::move(item_ids)), std::move(triplets));
}

}  // namespace ease
