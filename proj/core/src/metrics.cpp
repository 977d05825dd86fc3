#include "ease/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace ease {

std::string MetricSpec::label() const {
  return fmt::format("{}@{}", metric == Metric::recall ? "recall" : "ndcg", k);
}

MetricSpec parse_metric(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) {
    throw std::invalid_argument(fmt::format("bad metric '{}': expected name@k", text));
  }
  const auto name = text.substr(0, at);
  const auto digits = text.substr(at + 1);
  MetricSpec spec{};
  if (name == "recall") {
    spec.metric = Metric::recall;
  } else if (name == "ndcg") {
    spec.metric = Metric::ndcg;
  } else {
    throw std::invalid_argument(fmt::format("unknown metric '{}'", name));
  }
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), spec.k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || spec.k == 0) {
    throw std::invalid_argument(fmt::format("bad cutoff in metric '{}'", text));
  }
  return spec;
}

std::vector<MetricSpec> parse_metrics(std::string_view text) {
  std::vector<MetricSpec> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    auto part = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (!part.empty()) out.push_back(parse_metric(part));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (out.empty()) throw std::invalid_argument("no metrics given");
  return out;
}

namespace {

void check_held_out(std::span<const ItemIndex> held_out, std::size_t k) {
  if (held_out.empty()) throw std::invalid_argument("held-out set is empty");
  if (k == 0) throw std::invalid_argument("k must be >= 1");
}

bool is_hit(std::span<const ItemIndex> held_out, ItemIndex item) {
  return std::binary_search(held_out.begin(), held_out.end(), item);
}

}  // namespace

double recall_at_k(const RankedList& ranked, std::span<const ItemIndex> held_out, std::size_t k) {
  check_held_out(held_out, k);
  const auto depth = std::min(k, ranked.items.size());
  std::size_t hits = 0;
  for (std::size_t r = 0; r < depth; ++r) hits += is_hit(held_out, ranked.items[r].item);
  return static_cast<double>(hits) / static_cast<double>(std::min(k, held_out.size()));
}

double ndcg_at_k(const RankedList& ranked, std::span<const ItemIndex> held_out, std::size_t k) {
  check_held_out(held_out, k);
  const auto depth = std::min(k, ranked.items.size());
  double dcg = 0.0;
  for (std::size_t r = 0; r < depth; ++r) {
    if (is_hit(held_out, ranked.items[r].item)) dcg += 1.0 / std::log2(static_cast<double>(r) + 2.0);
  }
  double idcg = 0.0;
  const auto ideal = std::min(k, held_out.size());
  for (std::size_t r = 0; r < ideal; ++r) idcg += 1.0 / std::log2(static_cast<double>(r) + 2.0);
  return dcg / idcg;
}

double metric_value(const MetricSpec& spec, const RankedList& ranked,
                    std::span<const ItemIndex> held_out) {
  return spec.metric == Metric::recall ? recall_at_k(ranked, held_out, spec.k)
                                       : ndcg_at_k(ranked, held_out, spec.k);
}

}  // namespace ease
