#pragma once

#include <cstddef>
#include <cstdint>

#include "ease/interaction_matrix.hpp"

namespace ease {

/// Implicit-feedback data with planted item clusters: items are split into
/// equally sized clusters, each user prefers a couple of clusters and draws
/// most interactions from them, the rest from a Zipf-like global
/// popularity. User and item ids are the decimal indices; items that no
/// user drew are left out.
struct SyntheticConfig {
  std::size_t n_users = 5000;
  std::size_t n_items = 500;
  std::size_t n_clusters = 10;
  std::size_t min_activity = 8;
  std::size_t max_activity = 40;
  std::size_t clusters_per_user = 2;
  /// Probability that an interaction comes from a preferred cluster.
  double in_cluster_probability = 0.8;
  /// Exponent of the global popularity law 1 / rank^s.
  double popularity_exponent = 0.9;
  std::uint64_t seed = 1;
};

InteractionMatrix make_synthetic(const SyntheticConfig& config);

}  // namespace ease
