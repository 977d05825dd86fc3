#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "ease/interaction_matrix.hpp"

namespace ease {

struct IngestOptions {
  std::size_t min_user_activity = 0;
  std::size_t min_item_activity = 0;
  bool binarize = false;
  /// Records with value <= threshold are dropped; a missing value counts as 1.
  double value_threshold = 0.0;
  /// Field separator; auto-detected (tab, "::", comma, space) when unset.
  std::optional<std::string> delimiter;
};

struct IngestStats {
  std::size_t lines = 0;
  std::size_t records = 0;
  bool header_skipped = false;
  std::size_t below_threshold = 0;
  std::size_t duplicates = 0;
  std::size_t filter_rounds = 0;
  std::size_t users_removed = 0;
  std::size_t items_removed = 0;
};

/// Parses `user_id<sep>item_id[<sep>value][<sep>timestamp]` records.
///
/// A header line is recognised on the first record only. Timestamps are
/// accepted and ignored. Activity filters are reapplied until neither
/// users nor items change. Dense indices follow the sorted order of the
/// external ids (numeric order when every id is a decimal integer), so the
/// result does not depend on record order.
///
/// Throws ParseError for malformed records and EmptyDatasetError when
/// nothing survives filtering.
InteractionMatrix ingest(std::istream& in, const IngestOptions& options = {},
                         IngestStats* stats = nullptr);

InteractionMatrix ingest_file(const std::filesystem::path& path,
                              const IngestOptions& options = {},
                              IngestStats* stats = nullptr);

}  // namespace ease
