#include "ease/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <fmt/format.h>

#include "ease/error.hpp"

namespace ease {
namespace {

struct RawRecord {
  std::uint32_t user;
  std::uint32_t item;
  double value;
};

class Interner {
 public:
  std::uint32_t intern(std::string_view id) {
    auto [it, inserted] = map_.try_emplace(std::string(id), static_cast<std::uint32_t>(ids_.size()));
    if (inserted) ids_.push_back(it->first);
    return it->second;
  }
  const std::vector<std::string>& ids() const { return ids_; }

 private:
  std::unordered_map<std::string, std::uint32_t> map_;
  std::vector<std::string> ids_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string detect_delimiter(std::string_view line) {
  if (line.find('\t') != std::string_view::npos) return "\t";
  if (line.find("::") != std::string_view::npos) return "::";
  if (line.find(',') != std::string_view::npos) return ",";
  return " ";
}

std::vector<std::string_view> split_fields(std::string_view line, const std::string& delim) {
  std::vector<std::string_view> fields;
  if (delim == " ") {
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      auto end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      fields.push_back(line.substr(pos, end - pos));
      pos = end;
    }
    return fields;
  }
  std::size_t pos = 0;
  while (true) {
    auto next = line.find(delim, pos);
    fields.push_back(trim(line.substr(pos, next == std::string_view::npos ? next : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + delim.size();
  }
  return fields;
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool looks_like_header(const std::vector<std::string_view>& fields) {
  double ignored = 0;
  for (std::size_t f = 2; f < fields.size(); ++f) {
    if (!parse_double(fields[f], ignored)) return true;
  }
  const auto first = lower(fields[0]);
  return first == "user" || first == "userid" || first == "user_id" || first == "uid";
}

bool is_decimal(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Order used to assign dense indices: numeric when every id is a decimal
// integer, lexicographic otherwise.
std::vector<std::uint32_t> canonical_order(const std::vector<std::string>& ids,
                                           const std::vector<char>& keep) {
  std::vector<std::uint32_t> order;
  for (std::uint32_t i = 0; i < ids.size(); ++i) {
    if (keep[i]) order.push_back(i);
  }
  const bool numeric = std::all_of(order.begin(), order.end(),
                                   [&](std::uint32_t i) { return is_decimal(ids[i]); });
  if (numeric) {
    auto key = [&](std::uint32_t i) {
      std::string_view s = ids[i];
      auto nz = s.find_first_not_of('0');
      return nz == std::string_view::npos ? std::string_view{} : s.substr(nz);
    };
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      auto ka = key(a), kb = key(b);
      if (ka.size() != kb.size()) return ka.size() < kb.size();
      if (ka != kb) return ka < kb;
      return ids[a] < ids[b];
    });
  } else {
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return ids[a] < ids[b]; });
  }
  return order;
}

}  // namespace

InteractionMatrix ingest(std::istream& in, const IngestOptions& options, IngestStats* stats) {
  if (!(options.value_threshold >= 0.0) || !std::isfinite(options.value_threshold)) {
    throw std::invalid_argument("value threshold must be finite and >= 0");
  }
  IngestStats local;
  IngestStats& st = stats ? *stats : local;
  st = {};

  Interner users, items;
  std::vector<RawRecord> records;
  std::string delim = options.delimiter.value_or("");
  std::string line;
  bool first_record = true;

  while (std::getline(in, line)) {
    ++st.lines;
    std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (delim.empty()) delim = detect_delimiter(text);

    const auto fields = split_fields(text, delim);
    if (first_record) {
      first_record = false;
      if (fields.size() >= 2 && looks_like_header(fields)) {
        st.header_skipped = true;
        continue;
      }
    }
    if (fields.size() < 2 || fields.size() > 4) {
      throw ParseError(st.lines, fmt::format("expected 2-4 fields, found {}", fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) throw ParseError(st.lines, "empty id");

    double value = 1.0;
    if (fields.size() >= 3) {
      if (!parse_double(fields[2], value) || !std::isfinite(value)) {
        throw ParseError(st.lines, fmt::format("bad value '{}'", fields[2]));
      }
    }
    ++st.records;
    if (!(value > options.value_threshold)) {
      ++st.below_threshold;
      continue;
    }
    records.push_back({users.intern(fields[0]), items.intern(fields[1]), value});
  }
  if (in.bad()) throw Error("read error");

  // Collapse duplicates to their maximum value.
  std::sort(records.begin(), records.end(), [](const RawRecord& a, const RawRecord& b) {
    if (a.user != b.user) return a.user < b.user;
    if (a.item != b.item) return a.item < b.item;
    return a.value > b.value;
  });
  auto last = std::unique(records.begin(), records.end(), [](const RawRecord& a, const RawRecord& b) {
    return a.user == b.user && a.item == b.item;
  });
  st.duplicates = static_cast<std::size_t>(records.end() - last);
  records.erase(last, records.end());

  // Activity filters to a fixpoint.
  std::vector<char> keep_user(users.ids().size(), 1), keep_item(items.ids().size(), 1);
  while (true) {
    ++st.filter_rounds;
    std::vector<std::size_t> ucount(keep_user.size(), 0), icount(keep_item.size(), 0);
    for (const auto& r : records) {
      if (keep_user[r.user] && keep_item[r.item]) {
        ++ucount[r.user];
        ++icount[r.item];
      }
    }
    bool changed = false;
    for (std::size_t u = 0; u < keep_user.size(); ++u) {
      if (keep_user[u] && (ucount[u] == 0 || ucount[u] < options.min_user_activity)) {
        keep_user[u] = 0;
        changed = true;
      }
    }
    for (std::size_t i = 0; i < keep_item.size(); ++i) {
      if (keep_item[i] && (icount[i] == 0 || icount[i] < options.min_item_activity)) {
        keep_item[i] = 0;
        changed = true;
      }
    }
    if (!changed) break;
  }
  st.users_removed = static_cast<std::size_t>(std::count(keep_user.begin(), keep_user.end(), 0));
  st.items_removed = static_cast<std::size_t>(std::count(keep_item.begin(), keep_item.end(), 0));

  const auto user_order = canonical_order(users.ids(), keep_user);
  const auto item_order = canonical_order(items.ids(), keep_item);
  if (user_order.empty() || item_order.empty()) {
    throw EmptyDatasetError("no interactions left after filtering");
  }

  constexpr auto kDropped = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> user_map(users.ids().size(), kDropped);
  std::vector<std::uint32_t> item_map(items.ids().size(), kDropped);
  std::vector<std::string> user_ids, item_ids;
  for (auto u : user_order) {
    user_map[u] = static_cast<std::uint32_t>(user_ids.size());
    user_ids.push_back(users.ids()[u]);
  }
  for (auto i : item_order) {
    item_map[i] = static_cast<std::uint32_t>(item_ids.size());
    item_ids.push_back(items.ids()[i]);
  }

  std::vector<Triplet> triplets;
  triplets.reserve(records.size());
  for (const auto& r : records) {
    if (user_map[r.user] == kDropped || item_map[r.item] == kDropped) continue;
    triplets.push_back({user_map[r.user], item_map[r.item], options.binarize ? 1.0 : r.value});
  }
  return InteractionMatrix::from_triplets(Vocabulary(std::move(user_ids)),
                                          Vocabulary(std::move(item_ids)), std::move(triplets));
}

InteractionMatrix ingest_file(const std::filesystem::path& path, const IngestOptions& options,
                              IngestStats* stats) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  return ingest(in, options, stats);
}

}  // namespace ease
