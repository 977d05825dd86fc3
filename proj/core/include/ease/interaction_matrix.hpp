#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "ease/types.hpp"
#include "ease/vocabulary.hpp"

namespace ease {

/// Read-only view of one user's interactions, sorted by item index.
struct SparseRow {
  std::span<const ItemIndex> items;
  std::span<const double> values;

  std::size_t size() const noexcept { return items.size(); }
  bool empty() const noexcept { return items.empty(); }
};

struct Triplet {
  UserIndex user;
  ItemIndex item;
  double value;
};

/// Sparse user x item matrix X in CSR layout, with id vocabularies.
///
/// Checked on construction: item indices strictly increase within a row and
/// stored values are finite and positive. The vocabularies must cover the
/// row and column index ranges exactly.
/// Immutable once built.
class InteractionMatrix {
 public:
  InteractionMatrix(Vocabulary users, Vocabulary items,
                    std::vector<std::size_t> row_offsets,
                    std::vector<ItemIndex> item_indices,
                    std::vector<double> values);

  /// Sorts the triplets and collapses duplicate (user, item) pairs to their
  /// maximum value.
  static InteractionMatrix from_triplets(Vocabulary users, Vocabulary items,
                                         std::vector<Triplet> triplets);

  std::size_t n_users() const noexcept { return users_.size(); }
  std::size_t n_items() const noexcept { return items_.size(); }
  std::size_t nnz() const noexcept { return item_indices_.size(); }

  SparseRow row(std::size_t user) const;

  const Vocabulary& user_vocab() const noexcept { return users_; }
  const Vocabulary& item_vocab() const noexcept { return items_; }

  const std::vector<std::size_t>& row_offsets() const noexcept { return row_offsets_; }
  const std::vector<ItemIndex>& item_indices() const noexcept { return item_indices_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Number of users that interacted with each item.
  std::vector<std::size_t> item_counts() const;

  friend bool operator==(const InteractionMatrix&, const InteractionMatrix&) = default;

 private:
  Vocabulary users_;
  Vocabulary items_;
  std::vector<std::size_t> row_offsets_;
  std::vector<ItemIndex> item_indices_;
  std::vector<double> values_;
};

// Canonical on-disk form: <dir>/matrix.txt holds a
// "# users=<n> items=<m> nnz=<k>" header followed by sorted
// "user_idx item_idx value" lines; <dir>/vocab.json holds both id lists.
inline constexpr const char* kMatrixFile = "matrix.txt";
inline constexpr const char* kMatrixVocabFile = "vocab.json";

void write_canonical(const InteractionMatrix& matrix, const std::filesystem::path& dir);
InteractionMatrix read_canonical(const std::filesystem::path& dir);

/// Writes one "user_id<delim>item_id<delim>value" record per stored entry,
/// in row order. Feeding the output back through ingest() reproduces the
/// matrix.
void emit_records(const InteractionMatrix& matrix, std::ostream& out, char delimiter = '\t');

}  // namespace ease
