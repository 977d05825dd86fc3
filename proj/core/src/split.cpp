#include "ease/split.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include <fmt/format.h>

#include "ease/error.hpp"
#include "sidecar.hpp"

namespace ease {

std::string_view to_string(SplitMode mode) {
  return mode == SplitMode::strong ? "strong" : "weak";
}

SplitMode parse_split_mode(std::string_view name) {
  if (name == "strong") return SplitMode::strong;
  if (name == "weak") return SplitMode::weak;
  throw std::invalid_argument(fmt::format("unknown split mode '{}'", name));
}

namespace {

void check_fraction(double f, const char* name) {
  if (!(f > 0.0 && f < 1.0)) {
    throw std::invalid_argument(fmt::format("{} must lie in (0, 1), got {}", name, f));
  }
}

// Shuffles the positions of one user's items and cuts them into a sorted
// (fold-in, held-out) pair.
EvalUser partition_user(const InteractionMatrix& m, std::size_t u, std::size_t n_fold_in,
                        std::mt19937_64& rng) {
  const auto row = m.row(u);
  std::vector<std::size_t> pos(row.size());
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  std::sort(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(n_fold_in));
  std::sort(pos.begin() + static_cast<std::ptrdiff_t>(n_fold_in), pos.end());

  EvalUser out;
  out.fold_in.user = m.user_vocab().id(u);
  for (std::size_t k = 0; k < n_fold_in; ++k) {
    out.fold_in.items.push_back(row.items[pos[k]]);
    out.fold_in.values.push_back(row.values[pos[k]]);
  }
  for (std::size_t k = n_fold_in; k < pos.size(); ++k) out.held_out.push_back(row.items[pos[k]]);
  return out;
}

InteractionMatrix matrix_from_rows(const InteractionMatrix& source,
                                   const std::vector<UserHistory>& rows) {
  std::vector<std::string> ids;
  std::vector<std::size_t> offsets{0};
  std::vector<ItemIndex> indices;
  std::vector<double> values;
  for (const auto& r : rows) {
    ids.push_back(r.user);
    indices.insert(indices.end(), r.items.begin(), r.items.end());
    values.insert(values.end(), r.values.begin(), r.values.end());
    offsets.push_back(indices.size());
  }
  return InteractionMatrix(Vocabulary(std::move(ids)), source.item_vocab(), std::move(offsets),
                           std::move(indices), std::move(values));
}

UserHistory full_row(const InteractionMatrix& m, std::size_t u) {
  const auto row = m.row(u);
  return {m.user_vocab().id(u), {row.items.begin(), row.items.end()},
          {row.values.begin(), row.values.end()}};
}

}  // namespace

EvalSplit split_strong(const InteractionMatrix& matrix, std::size_t n_validation_users,
                       std::size_t n_test_users, double fold_in_fraction, std::uint64_t seed) {
  check_fraction(fold_in_fraction, "fold-in fraction");
  if (n_validation_users + n_test_users >= matrix.n_users()) {
    throw std::invalid_argument(fmt::format("{} validation + {} test users leave no training users (have {})",
                                            n_validation_users, n_test_users, matrix.n_users()));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(matrix.n_users());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  EvalSplit split{SplitMode::strong, matrix, {}, {}, seed, {}};
  const auto n_eval = n_validation_users + n_test_users;
  for (std::size_t k = 0; k < n_eval; ++k) {
    const auto u = order[k];
    const auto n = matrix.row(u).size();
    const auto n_fold_in = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::lround(fold_in_fraction * static_cast<double>(n))));
    if (n_fold_in >= n) {
      split.skipped.push_back(matrix.user_vocab().id(u));
      continue;
    }
    auto user = partition_user(matrix, u, n_fold_in, rng);
    (k < n_validation_users ? split.validation : split.test).push_back(std::move(user));
  }

  std::vector<std::size_t> train_users(order.begin() + static_cast<std::ptrdiff_t>(n_eval), order.end());
  std::sort(train_users.begin(), train_users.end());
  std::vector<UserHistory> rows;
  rows.reserve(train_users.size());
  for (auto u : train_users) rows.push_back(full_row(matrix, u));
  split.train = matrix_from_rows(matrix, rows);
  return split;
}

EvalSplit split_weak(const InteractionMatrix& matrix, double train_fraction, std::uint64_t seed) {
  check_fraction(train_fraction, "train fraction");
  std::mt19937_64 rng(seed);
  EvalSplit split{SplitMode::weak, matrix, {}, {}, seed, {}};
  std::vector<UserHistory> rows;
  rows.reserve(matrix.n_users());
  for (std::size_t u = 0; u < matrix.n_users(); ++u) {
    const auto n = matrix.row(u).size();
    if (n < 2) {
      rows.push_back(full_row(matrix, u));
      split.skipped.push_back(matrix.user_vocab().id(u));
      continue;
    }
    // The epsilon keeps products like 0.3 * 10 from flooring to 2.
    auto n_train = static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n) + 1e-9));
    n_train = std::clamp<std::size_t>(n_train, 1, n - 1);
    auto user = partition_user(matrix, u, n_train, rng);
    rows.push_back(user.fold_in);
    split.test.push_back(std::move(user));
  }
  split.train = matrix_from_rows(matrix, rows);
  return split;
}

namespace {

constexpr const char* kTrainDir = "train";
constexpr const char* kValidationFile = "validation.tsv";
constexpr const char* kTestFile = "test.tsv";
constexpr const char* kManifestFile = "manifest.json";

void write_eval_users(const std::vector<EvalUser>& users, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  for (const auto& u : users) {
    out << u.fold_in.user << '\t';
    for (std::size_t k = 0; k < u.fold_in.items.size(); ++k) {
      out << (k ? "," : "") << u.fold_in.items[k] << ':' << fmt::format("{}", u.fold_in.values[k]);
    }
    out << '\t';
    for (std::size_t k = 0; k < u.held_out.size(); ++k) out << (k ? "," : "") << u.held_out[k];
    out << '\n';
  }
  if (!out) throw Error(fmt::format("write failed: {}", path.string()));
}

template <typename T>
T field_number(std::string_view text, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, fmt::format("cannot parse '{}'", text));
  }
  return value;
}

std::vector<std::string_view> split_on(std::string_view s, char c) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(c, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<EvalUser> read_eval_users(const std::filesystem::path& path, std::size_t n_items) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  std::vector<EvalUser> users;
  std::string line;
  std::size_t line_no = 0;
  auto check_item = [&](std::uint64_t i) {
    if (i >= n_items) throw ParseError(line_no, fmt::format("item index {} out of range", i));
    return static_cast<ItemIndex>(i);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cols = split_on(line, '\t');
    if (cols.size() != 3) throw ParseError(line_no, "expected 3 tab-separated columns");
    EvalUser u;
    u.fold_in.user = std::string(cols[0]);
    for (auto entry : split_on(cols[1], ',')) {
      auto colon = entry.find(':');
      if (colon == std::string_view::npos) throw ParseError(line_no, "expected item:value");
      u.fold_in.items.push_back(check_item(field_number<std::uint64_t>(entry.substr(0, colon), line_no)));
      u.fold_in.values.push_back(field_number<double>(entry.substr(colon + 1), line_no));
    }
    for (auto entry : split_on(cols[2], ',')) {
      u.held_out.push_back(check_item(field_number<std::uint64_t>(entry, line_no)));
    }
    if (!std::is_sorted(u.fold_in.items.begin(), u.fold_in.items.end()) ||
        !std::is_sorted(u.held_out.begin(), u.held_out.end())) {
      throw ParseError(line_no, "item lists must be sorted");
    }
    users.push_back(std::move(u));
  }
  return users;
}

}  // namespace

void write_split(const EvalSplit& split, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_canonical(split.train, dir / kTrainDir);
  write_eval_users(split.validation, dir / kValidationFile);
  write_eval_users(split.test, dir / kTestFile);

  nlohmann::json manifest;
  manifest["mode"] = std::string(to_string(split.mode));
  manifest["seed"] = split.seed;
  manifest["n_train_users"] = split.train.n_users();
  manifest["n_items"] = split.train.n_items();
  manifest["train_nnz"] = split.train.nnz();
  manifest["n_validation_users"] = split.validation.size();
  manifest["n_test_users"] = split.test.size();
  manifest["skipped_users"] = split.skipped;
  manifest["item_vocab_hash"] = to_hex(split.train.item_vocab().hash());
  if (split.mode == SplitMode::strong) {
    std::unordered_set<std::string> train_ids(split.train.user_vocab().ids().begin(),
                                              split.train.user_vocab().ids().end());
    bool disjoint = true;
    for (const auto* set : {&split.validation, &split.test}) {
      for (const auto& u : *set) disjoint = disjoint && !train_ids.count(u.fold_in.user);
    }
    manifest["users_disjoint"] = disjoint;
  }
  detail::write_json_file(dir / kManifestFile, manifest);
}

EvalSplit read_split(const std::filesystem::path& dir) {
  const auto manifest = detail::read_json_file(dir / kManifestFile);
  auto train = read_canonical(dir / kTrainDir);
  const auto n_items = train.n_items();
  EvalSplit split{parse_split_mode(manifest.at("mode").get<std::string>()), std::move(train),
                  read_eval_users(dir / kValidationFile, n_items),
                  read_eval_users(dir / kTestFile, n_items),
                  manifest.at("seed").get<std::uint64_t>(),
                  manifest.value("skipped_users", std::vector<std::string>{})};
  return split;
}

}  // namespace ease
