#include "ease/vocabulary.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

#include <fmt/format.h>

namespace ease {
namespace {

VocabHash hash_ids(const std::vector<std::string>& ids) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 unavailable");
  }
  // Length-prefixed so that {"ab","c"} and {"a","bc"} differ.
  for (const auto& id : ids) {
    const auto n = static_cast<std::uint64_t>(id.size());
    unsigned char len[8];
    for (int b = 0; b < 8; ++b) len[b] = static_cast<unsigned char>(n >> (8 * b));
    EVP_DigestUpdate(ctx.get(), len, sizeof len);
    EVP_DigestUpdate(ctx.get(), id.data(), id.size());
  }
  VocabHash out{};
  unsigned int written = 0;
  EVP_DigestFinal_ex(ctx.get(), out.data(), &written);
  return out;
}

}  // namespace

std::string to_hex(const VocabHash& hash) {
  std::string out;
  out.reserve(hash.size() * 2);
  for (auto byte : hash) out += fmt::format("{:02x}", byte);
  return out;
}

Vocabulary::Vocabulary() : hash_(hash_ids(ids_)) {}

Vocabulary::Vocabulary(std::vector<std::string> ids) : ids_(std::move(ids)) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    auto [it, inserted] = index_.emplace(ids_[i], static_cast<std::uint32_t>(i));
    if (!inserted) {
      throw std::invalid_argument(fmt::format("duplicate id '{}' in vocabulary", ids_[i]));
    }
  }
  hash_ = hash_ids(ids_);
}

std::optional<std::uint32_t> Vocabulary::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace ease
