#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ease {

/// SHA-256 over the ordered id list; identifies an index space on disk.
using VocabHash = std::array<std::uint8_t, 32>;

std::string to_hex(const VocabHash& hash);

/// Bijection between opaque external ids and dense indices 0..n-1.
class Vocabulary {
 public:
  Vocabulary();
  /// Throws std::invalid_argument on duplicate ids.
  explicit Vocabulary(std::vector<std::string> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  const std::string& id(std::size_t index) const { return ids_.at(index); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<std::uint32_t> find(std::string_view id) const;

  const VocabHash& hash() const noexcept { return hash_; }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.ids_ == b.ids_;
  }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::uint32_t> index_;
  VocabHash hash_{};
};

}  // namespace ease
