#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "ease/dense_matrix.hpp"
#include "ease/interaction_matrix.hpp"
#include "ease/types.hpp"
#include "ease/vocabulary.hpp"

namespace ease {

/// Dense item-item Gram matrix G = XᵀX, possibly on transformed columns.
struct GramMatrix {
  GramMode mode = GramMode::cooccurrence;
  DenseMatrix values;
  /// Present unless mode == cooccurrence.
  std::vector<double> column_means;
  /// Present iff mode == standardized (population standard deviations).
  std::vector<double> column_stds;
  std::size_t n_users_used = 0;
  Vocabulary items;

  std::size_t n_items() const noexcept { return values.rows(); }
};

/// Accumulates per-user outer products into the upper triangle and mirrors
/// it, so the result is exactly symmetric. The centered form is evaluated as
/// XᵀX − n·μμᵀ without densifying X; standardized additionally divides by
/// σ_i·σ_j. Work is split across threads by output row, so the result is
/// bit-identical for any thread count.
///
/// Throws Error naming the item when standardized mode meets a zero-variance
/// column.
GramMatrix build_gram(const InteractionMatrix& x, GramMode mode = GramMode::cooccurrence,
                      unsigned threads = 1);

/// Entrywise sum of co-occurrence Grams built over disjoint user shards.
GramMatrix merge_grams(std::span<const GramMatrix> parts);

// File: one line of JSON header (n_items, mode, n_users_used, vocab hash,
// column statistics), then n_items² little-endian f64 values in row-major
// order. The item vocabulary goes to "<path>.vocab.json".
void write_gram(const GramMatrix& gram, const std::filesystem::path& path);
GramMatrix read_gram(const std::filesystem::path& path);

}  // namespace ease
