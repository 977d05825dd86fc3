#include "ease/report.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "ease/error.hpp"

namespace ease {

std::string report_to_json(const EvalReport& report) {
  nlohmann::json doc;
  doc["model"] = report.model;
  doc["dataset"] = report.dataset;
  doc["split"] = {{"mode", report.split.mode},
                  {"seed", report.split.seed},
                  {"set", report.split.set},
                  {"n_users", report.split.n_users}};
  doc["metrics"] = nlohmann::json::array();
  for (const auto& m : report.metrics) {
    doc["metrics"].push_back({{"name", m.spec.metric == Metric::recall ? "recall" : "ndcg"},
                              {"k", m.spec.k},
                              {"mean", m.mean},
                              {"stderr", m.std_error},
                              {"n_users", m.n_users}});
  }
  return doc.dump(2);
}

EvalReport report_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    EvalReport report;
    report.model = doc.at("model").get<std::string>();
    report.dataset = doc.at("dataset").get<std::string>();
    const auto& split = doc.at("split");
    report.split = {split.at("mode").get<std::string>(), split.at("seed").get<std::uint64_t>(),
                    split.at("set").get<std::string>(), split.at("n_users").get<std::size_t>()};
    for (const auto& m : doc.at("metrics")) {
      MetricReport r;
      r.spec = parse_metric(fmt::format("{}@{}", m.at("name").get<std::string>(), m.at("k").get<std::size_t>()));
      r.mean = m.at("mean").get<double>();
      r.std_error = m.at("stderr").get<double>();
      r.n_users = m.at("n_users").get<std::size_t>();
      report.metrics.push_back(std::move(r));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(fmt::format("bad report: {}", e.what()));
  }
}

std::string report_to_table(const EvalReport& report) {
  std::string out = fmt::format("model: {}  dataset: {}  split: {} (seed {}, {} set, {} users)\n",
                                report.model, report.dataset.empty() ? "-" : report.dataset,
                                report.split.mode, report.split.seed, report.split.set,
                                report.split.n_users);
  out += fmt::format("{:<12} {:>8} {:>8} {:>8}\n", "metric", "mean", "stderr", "users");
  for (const auto& m : report.metrics) {
    out += fmt::format("{:<12} {:>8.4f} {:>8.4f} {:>8}\n", m.spec.label(), m.mean, m.std_error, m.n_users);
  }
  return out;
}

namespace {

// Strong-generalization results for each large benchmark, plus the
// weak-generalization NDCG@10 comparison on ML-10M.
constexpr std::array<ReferenceResult, 74> kReference{{
    {"ml-20m", "popularity", "recall@20", 0.162}, {"ml-20m", "popularity", "recall@50", 0.235},
    {"ml-20m", "popularity", "ndcg@100", 0.191},  {"ml-20m", "ease", "recall@20", 0.391},
    {"ml-20m", "ease", "recall@50", 0.521},       {"ml-20m", "ease", "ndcg@100", 0.420},
    {"ml-20m", "ease_nonneg", "recall@20", 0.373}, {"ml-20m", "ease_nonneg", "recall@50", 0.499},
    {"ml-20m", "ease_nonneg", "ndcg@100", 0.402}, {"ml-20m", "slim", "recall@20", 0.370},
    {"ml-20m", "slim", "recall@50", 0.495},       {"ml-20m", "slim", "ndcg@100", 0.401},
    {"ml-20m", "wmf", "recall@20", 0.360},        {"ml-20m", "wmf", "recall@50", 0.498},
    {"ml-20m", "wmf", "ndcg@100", 0.386},         {"ml-20m", "cdae", "recall@20", 0.391},
    {"ml-20m", "cdae", "recall@50", 0.523},       {"ml-20m", "cdae", "ndcg@100", 0.418},
    {"ml-20m", "mult-vae", "recall@20", 0.395},   {"ml-20m", "mult-vae", "recall@50", 0.537},
    {"ml-20m", "mult-vae", "ndcg@100", 0.426},    {"ml-20m", "mult-dae", "recall@20", 0.387},
    {"ml-20m", "mult-dae", "recall@50", 0.524},   {"ml-20m", "mult-dae", "ndcg@100", 0.419},

    {"netflix", "popularity", "recall@20", 0.116}, {"netflix", "popularity", "recall@50", 0.175},
    {"netflix", "popularity", "ndcg@100", 0.159},  {"netflix", "ease", "recall@20", 0.362},
    {"netflix", "ease", "recall@50", 0.445},       {"netflix", "ease", "ndcg@100", 0.393},
    {"netflix", "ease_nonneg", "recall@20", 0.345}, {"netflix", "ease_nonneg", "recall@50", 0.424},
    {"netflix", "ease_nonneg", "ndcg@100", 0.373}, {"netflix", "slim", "recall@20", 0.347},
    {"netflix", "slim", "recall@50", 0.428},       {"netflix", "slim", "ndcg@100", 0.379},
    {"netflix", "wmf", "recall@20", 0.316},        {"netflix", "wmf", "recall@50", 0.404},
    {"netflix", "wmf", "ndcg@100", 0.351},         {"netflix", "cdae", "recall@20", 0.343},
    {"netflix", "cdae", "recall@50", 0.428},       {"netflix", "cdae", "ndcg@100", 0.376},
    {"netflix", "mult-vae", "recall@20", 0.351},   {"netflix", "mult-vae", "recall@50", 0.444},
    {"netflix", "mult-vae", "ndcg@100", 0.386},    {"netflix", "mult-dae", "recall@20", 0.344},
    {"netflix", "mult-dae", "recall@50", 0.438},   {"netflix", "mult-dae", "ndcg@100", 0.380},

    {"msd", "popularity", "recall@20", 0.043},  {"msd", "popularity", "recall@50", 0.068},
    {"msd", "popularity", "ndcg@100", 0.058},   {"msd", "ease", "recall@20", 0.333},
    {"msd", "ease", "recall@50", 0.428},        {"msd", "ease", "ndcg@100", 0.389},
    {"msd", "ease_nonneg", "recall@20", 0.324}, {"msd", "ease_nonneg", "recall@50", 0.418},
    {"msd", "ease_nonneg", "ndcg@100", 0.379},  {"msd", "wmf", "recall@20", 0.211},
    {"msd", "wmf", "recall@50", 0.312},         {"msd", "wmf", "ndcg@100", 0.257},
    {"msd", "cdae", "recall@20", 0.188},        {"msd", "cdae", "recall@50", 0.283},
    {"msd", "cdae", "ndcg@100", 0.237},         {"msd", "mult-vae", "recall@20", 0.266},
    {"msd", "mult-vae", "recall@50", 0.364},    {"msd", "mult-vae", "ndcg@100", 0.316},
    {"msd", "mult-dae", "recall@20", 0.266},    {"msd", "mult-dae", "recall@50", 0.363},
    {"msd", "mult-dae", "ndcg@100", 0.313},

    {"ml-10m", "ease", "ndcg@10", 0.6258},     {"ml-10m", "ease_nonneg", "ndcg@10", 0.6199},
    {"ml-10m", "ii-svd-500", "ndcg@10", 0.6113}, {"ml-10m", "cosine", "ndcg@10", 0.5957},
    {"ml-10m", "wmf", "ndcg@10", 0.5969},
}};

}  // namespace

std::span<const ReferenceResult> reference_results() { return kReference; }

std::optional<double> reference_value(std::string_view dataset, std::string_view model,
                                      std::string_view metric) {
  for (const auto& r : kReference) {
    if (r.dataset == dataset && r.model == model && r.metric == metric) return r.value;
  }
  return std::nullopt;
}

std::string reference_comparison(const EvalReport& report) {
  std::string out;
  for (const auto& m : report.metrics) {
    const auto label = m.spec.label();
    const auto ref = reference_value(report.dataset, report.model, label);
    if (!ref) continue;
    if (out.empty()) {
      out = fmt::format("{:<12} {:>8} {:>10} {:>8}\n", "metric", "ours", "reference", "delta");
    }
    out += fmt::format("{:<12} {:>8.4f} {:>10.4f} {:>+8.4f}\n", label, m.mean, *ref, m.mean - *ref);
  }
  return out;
}

}  // namespace ease
