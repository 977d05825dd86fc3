#include "ease/gram.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "binary_io.hpp"
#include "ease/error.hpp"
#include "ease/parallel.hpp"
#include "sidecar.hpp"

namespace ease {
namespace {

void mirror_upper(DenseMatrix& g) {
  const auto n = g.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i);
  }
}

// Upper triangle of XᵀX. Worker w owns output rows a with a % workers == w
// and scans every user, so each entry is summed in user order regardless
// of the thread count.
DenseMatrix cooccurrence_upper(const InteractionMatrix& x, unsigned threads) {
  const auto n = x.n_items();
  DenseMatrix g(n, n);
  const auto workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n, 1));
  parallel_for(workers, static_cast<unsigned>(workers), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (auto w = begin; w < end; ++w) {
      for (std::size_t u = 0; u < x.n_users(); ++u) {
        const auto row = x.row(u);
        for (std::size_t k = 0; k < row.size(); ++k) {
          const auto a = row.items[k];
          if (a % workers != w) continue;
          const double xa = row.values[k];
          auto out = g.row(a);
          for (std::size_t l = k; l < row.size(); ++l) out[row.items[l]] += xa * row.values[l];
        }
      }
    }
  });
  return g;
}

}  // namespace

GramMatrix build_gram(const InteractionMatrix& x, GramMode mode, unsigned threads) {
  const auto n = x.n_items();
  if (n == 0) throw std::invalid_argument("cannot build a Gram matrix over zero items");

  GramMatrix gram;
  gram.mode = mode;
  gram.n_users_used = x.n_users();
  gram.items = x.item_vocab();
  gram.values = cooccurrence_upper(x, threads);

  if (mode != GramMode::cooccurrence) {
    const auto n_users = static_cast<double>(x.n_users());
    if (x.n_users() == 0) throw std::invalid_argument("column transforms need at least one user");
    std::vector<double> sums(n, 0.0);
    for (std::size_t k = 0; k < x.nnz(); ++k) sums[x.item_indices()[k]] += x.values()[k];
    gram.column_means.resize(n);
    for (std::size_t j = 0; j < n; ++j) gram.column_means[j] = sums[j] / n_users;

    // (X − 1μᵀ)ᵀ(X − 1μᵀ) = XᵀX − n·μμᵀ
    auto& g = gram.values;
    const auto& mu = gram.column_means;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) g(i, j) -= n_users * mu[i] * mu[j];
    }

    if (mode == GramMode::standardized) {
      gram.column_stds.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        const double var = g(j, j) / n_users;
        if (!(var > 0.0)) {
          throw Error(fmt::format("item '{}' has zero variance; cannot standardize", x.item_vocab().id(j)));
        }
        gram.column_stds[j] = std::sqrt(var);
      }
      const auto& sd = gram.column_stds;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) g(i, j) /= sd[i] * sd[j];
      }
    }
  }
  mirror_upper(gram.values);
  return gram;
}

GramMatrix merge_grams(std::span<const GramMatrix> parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to merge");
  GramMatrix out = parts.front();
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    if (part.mode != GramMode::cooccurrence) {
      throw std::invalid_argument(
          fmt::format("only co-occurrence Grams merge additively (part {} is {})", p, to_string(part.mode)));
    }
    if (part.n_items() != out.n_items()) {
      throw std::invalid_argument(fmt::format("shape mismatch: part {} has {} items, expected {}", p,
                                              part.n_items(), out.n_items()));
    }
    if (part.items.hash() != out.items.hash()) {
      throw VocabMismatchError(fmt::format("part {} was built over a different item vocabulary", p));
    }
    if (p == 0) continue;
    auto dst = out.values.values();
    auto src = part.values.values();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
    out.n_users_used += part.n_users_used;
  }
  return out;
}

void write_gram(const GramMatrix& gram, const std::filesystem::path& path) {
  nlohmann::json header;
  header["n_items"] = gram.n_items();
  header["mode"] = std::string(to_string(gram.mode));
  header["n_users_used"] = gram.n_users_used;
  header["vocab_hash"] = to_hex(gram.items.hash());
  header["column_means"] = gram.column_means;
  header["column_stds"] = gram.column_stds;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out << header.dump() << '\n';
  detail::put_f64s(out, gram.values.values());
  if (!out) throw Error(fmt::format("write failed: {}", path.string()));

  nlohmann::json vocab;
  vocab["items"] = gram.items.ids();
  detail::write_json_file(detail::sidecar_path(path), vocab);
}

GramMatrix read_gram(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  std::string line;
  if (!std::getline(in, line)) throw FormatError(path.string() + ": missing header");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(fmt::format("{}: bad header: {}", path.string(), e.what()));
  }

  GramMatrix gram;
  const auto n = header.at("n_items").get<std::size_t>();
  gram.mode = parse_gram_mode(header.at("mode").get<std::string>());
  gram.n_users_used = header.at("n_users_used").get<std::size_t>();
  gram.column_means = detail::doubles_from_json(header, "column_means");
  gram.column_stds = detail::doubles_from_json(header, "column_stds");
  gram.items = detail::vocab_from_json(detail::read_json_file(detail::sidecar_path(path)), "items");
  if (gram.items.size() != n || to_hex(gram.items.hash()) != header.at("vocab_hash").get<std::string>()) {
    throw VocabMismatchError(path.string() + ": vocabulary sidecar does not match header");
  }
  gram.values = DenseMatrix(n, n);
  detail::get_f64s(in, gram.values.values());
  return gram;
}

}  // namespace ease
