#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ease/interaction_matrix.hpp"

namespace ease {

/// A sparse item history in the model's item index space, sorted by item.
struct History {
  std::span<const ItemIndex> items;
  std::span<const double> values;
};

struct UserHistory {
  std::string user;
  std::vector<ItemIndex> items;
  std::vector<double> values;

  History view() const { return {items, values}; }
};

/// An evaluation user: the fold-in part is fed to the model, the held-out
/// part is the ground truth. Both are sorted and disjoint.
struct EvalUser {
  UserHistory fold_in;
  std::vector<ItemIndex> held_out;
};

enum class SplitMode { strong, weak };

std::string_view to_string(SplitMode mode);
SplitMode parse_split_mode(std::string_view name);

/// Train matrix plus per-user fold-in/held-out sets. The train matrix keeps
/// the full item vocabulary of the source matrix, so every index in the
/// evaluation sets refers to train.item_vocab().
struct EvalSplit {
  SplitMode mode;
  InteractionMatrix train;
  std::vector<EvalUser> validation;
  std::vector<EvalUser> test;
  std::uint64_t seed = 0;
  /// Users dropped from evaluation because their held-out set would be empty.
  std::vector<std::string> skipped;
};

/// Users are disjoint across train/validation/test. Each evaluation user's
/// items are shuffled and max(1, round(f * n)) of them become fold-in.
EvalSplit split_strong(const InteractionMatrix& matrix, std::size_t n_validation_users,
                       std::size_t n_test_users, double fold_in_fraction, std::uint64_t seed);

/// Per user, floor(f * n) items (at least 1 when n >= 2) go to training and
/// the rest are held out; every evaluated user lands in the test set.
/// Single-item users stay in training only and are reported as skipped.
EvalSplit split_weak(const InteractionMatrix& matrix, double train_fraction, std::uint64_t seed);

// Directory layout: train/ (canonical matrix), validation.tsv, test.tsv,
// manifest.json. Evaluation lines are
//   user_id<TAB>item:value,item:value,...<TAB>item,item,...
void write_split(const EvalSplit& split, const std::filesystem::path& dir);
EvalSplit read_split(const std::filesystem::path& dir);

}  // namespace ease
