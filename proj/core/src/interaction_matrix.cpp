#include "ease/interaction_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "ease/error.hpp"
#include "sidecar.hpp"

namespace ease {

InteractionMatrix::InteractionMatrix(Vocabulary users, Vocabulary items,
                                     std::vector<std::size_t> row_offsets,
                                     std::vector<ItemIndex> item_indices,
                                     std::vector<double> values)
    : users_(std::move(users)),
      items_(std::move(items)),
      row_offsets_(std::move(row_offsets)),
      item_indices_(std::move(item_indices)),
      values_(std::move(values)) {
  if (row_offsets_.size() != users_.size() + 1 || row_offsets_.front() != 0 ||
      row_offsets_.back() != item_indices_.size() || values_.size() != item_indices_.size()) {
    throw std::invalid_argument("inconsistent CSR layout");
  }
  for (std::size_t u = 0; u < users_.size(); ++u) {
    const auto begin = row_offsets_[u];
    const auto end = row_offsets_[u + 1];
    if (end < begin) throw std::invalid_argument("row offsets must be non-decreasing");
    for (auto k = begin; k < end; ++k) {
      if (item_indices_[k] >= items_.size()) {
        throw std::invalid_argument(fmt::format("item index {} out of range", item_indices_[k]));
      }
      if (k > begin && item_indices_[k] <= item_indices_[k - 1]) {
        throw std::invalid_argument(
            fmt::format("row {} is not strictly increasing in item index", u));
      }
      if (!(values_[k] > 0.0) || !std::isfinite(values_[k])) {
        throw std::invalid_argument(fmt::format("stored value at row {} must be finite and > 0", u));
      }
    }
  }
}

InteractionMatrix InteractionMatrix::from_triplets(Vocabulary users, Vocabulary items,
                                                   std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.user != b.user ? a.user < b.user : a.item < b.item;
  });
  std::vector<std::size_t> offsets(users.size() + 1, 0);
  std::vector<ItemIndex> indices;
  std::vector<double> values;
  indices.reserve(triplets.size());
  values.reserve(triplets.size());
  for (std::size_t k = 0; k < triplets.size(); ++k) {
    const auto& t = triplets[k];
    if (t.user >= users.size()) throw std::invalid_argument("user index out of range");
    if (k > 0 && triplets[k - 1].user == t.user && triplets[k - 1].item == t.item) {
      values.back() = std::max(values.back(), t.value);
      continue;
    }
    indices.push_back(t.item);
    values.push_back(t.value);
    ++offsets[t.user + 1];
  }
  for (std::size_t u = 0; u < users.size(); ++u) offsets[u + 1] += offsets[u];
  return InteractionMatrix(std::move(users), std::move(items), std::move(offsets),
                           std::move(indices), std::move(values));
}

SparseRow InteractionMatrix::row(std::size_t user) const {
  if (user >= n_users()) throw std::out_of_range("user index out of range");
  const auto begin = row_offsets_[user];
  const auto len = row_offsets_[user + 1] - begin;
  return {std::span(item_indices_).subspan(begin, len), std::span(values_).subspan(begin, len)};
}

std::vector<std::size_t> InteractionMatrix::item_counts() const {
  std::vector<std::size_t> counts(n_items(), 0);
  for (auto i : item_indices_) ++counts[i];
  return counts;
}

void write_canonical(const InteractionMatrix& matrix, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto path = dir / kMatrixFile;
  std::ofstream out(path);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out << fmt::format("# users={} items={} nnz={}\n", matrix.n_users(), matrix.n_items(),
                     matrix.nnz());
  for (std::size_t u = 0; u < matrix.n_users(); ++u) {
    const auto row = matrix.row(u);
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << fmt::format("{} {} {}\n", u, row.items[k], row.values[k]);
    }
  }
  if (!out) throw Error(fmt::format("write failed: {}", path.string()));

  nlohmann::json vocab;
  vocab["users"] = matrix.user_vocab().ids();
  vocab["items"] = matrix.item_vocab().ids();
  detail::write_json_file(dir / kMatrixVocabFile, vocab);
}

namespace {

template <typename T>
T parse_number(std::string_view text, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, fmt::format("cannot parse '{}'", text));
  }
  return value;
}

}  // namespace

InteractionMatrix read_canonical(const std::filesystem::path& dir) {
  const auto vocab = detail::read_json_file(dir / kMatrixVocabFile);
  auto users = detail::vocab_from_json(vocab, "users");
  auto items = detail::vocab_from_json(vocab, "items");

  const auto path = dir / kMatrixFile;
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  std::string line;
  if (!std::getline(in, line)) throw FormatError(path.string() + ": empty file");
  std::size_t n_users = 0, n_items = 0, nnz = 0;
  if (std::sscanf(line.c_str(), "# users=%zu items=%zu nnz=%zu", &n_users, &n_items, &nnz) != 3) {
    throw FormatError(path.string() + ": bad header");
  }
  if (n_users != users.size() || n_items != items.size()) {
    throw FormatError(path.string() + ": header disagrees with vocab sidecar");
  }

  std::vector<Triplet> triplets;
  triplets.reserve(nnz);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string_view rest(line);
    std::string_view fields[3];
    for (int f = 0; f < 3; ++f) {
      auto pos = rest.find(' ');
      if ((pos == std::string_view::npos) != (f == 2)) {
        throw ParseError(line_no, "expected 'user item value'");
      }
      fields[f] = rest.substr(0, pos);
      if (pos != std::string_view::npos) rest.remove_prefix(pos + 1);
    }
    const auto u = parse_number<std::uint64_t>(fields[0], line_no);
    const auto i = parse_number<std::uint64_t>(fields[1], line_no);
    const auto v = parse_number<double>(fields[2], line_no);
    if (u >= n_users || i >= n_items) throw ParseError(line_no, "index out of range");
    triplets.push_back({static_cast<UserIndex>(u), static_cast<ItemIndex>(i), v});
  }
  if (triplets.size() != nnz) throw FormatError(path.string() + ": nnz disagrees with header");
  try {
    return InteractionMatrix::from_triplets(std::move(users), std::move(items), std::move(triplets));
  } catch (const std::invalid_argument& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void emit_records(const InteractionMatrix& matrix, std::ostream& out, char delimiter) {
  for (std::size_t u = 0; u < matrix.n_users(); ++u) {
    const auto row = matrix.row(u);
    const auto& uid = matrix.user_vocab().id(u);
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << uid << delimiter << matrix.item_vocab().id(row.items[k]) << delimiter
          << fmt::format("{}", row.values[k]) << '\n';
    }
  }
}

}  // namespace ease
