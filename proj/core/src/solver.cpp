#include "ease/solver.hpp"

#include <lapack.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "ease/error.hpp"
#include "ease/parallel.hpp"

extern "C" void openblas_set_num_threads(int num_threads);

namespace ease {

std::string_view to_string(Variant variant) {
  return variant == Variant::full ? "full" : "clamped_nonneg";
}

namespace {

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument(fmt::format("lambda must be a positive finite number, got {}", lambda));
  }
}

// Overwrites `a` (holding G) with P = (G + λI)⁻¹ and returns the smallest
// Cholesky pivot. The buffer is symmetric, so row-major vs column-major
// storage does not matter for the LAPACK calls; LAPACK's lower triangle is
// our upper one.
double invert_regularized(DenseMatrix& a, double lambda, unsigned threads) {
  const auto n = a.rows();
  for (double v : a.values()) {
    if (!std::isfinite(v)) throw NumericalError("Gram matrix contains non-finite entries", 0, v);
  }
  for (std::size_t i = 0; i < n; ++i) a(i, i) += lambda;
  if (n == 0) return std::numeric_limits<double>::infinity();

  openblas_set_num_threads(static_cast<int>(resolve_threads(threads)));
  const char uplo = 'L';
  const auto dim = static_cast<lapack_int>(n);
  lapack_int info = 0;
  LAPACK_dpotrf(&uplo, &dim, a.data(), &dim, &info);
  if (info > 0) {
    const auto k = static_cast<std::size_t>(info - 1);
    throw NumericalError(
        fmt::format("G + lambda*I is not positive definite: pivot {} at index {}", a(k, k), k), k, a(k, k));
  }
  if (info < 0) throw std::logic_error("dpotrf rejected its arguments");

  double min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) min_pivot = std::min(min_pivot, a(i, i) * a(i, i));

  LAPACK_dpotri(&uplo, &dim, a.data(), &dim, &info);
  if (info != 0) {
    throw NumericalError(fmt::format("inverse failed at index {}", info - 1),
                         static_cast<std::size_t>(std::max<lapack_int>(info - 1, 0)), 0.0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) a(i, j) = a(j, i);
  }
  return min_pivot;
}

// P -> B in place: divide column j by −P_jj, then zero the diagonal.
void precision_to_weights(DenseMatrix& p) {
  const auto n = p.rows();
  std::vector<double> diag(n);
  for (std::size_t j = 0; j < n; ++j) diag[j] = p(j, j);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = p.row(i);
    for (std::size_t j = 0; j < n; ++j) row[j] = -row[j] / diag[j];
    row[i] = 0.0;
  }
}

}  // namespace

WeightModel solve(GramMatrix&& gram, double lambda, unsigned threads) {
  check_lambda(lambda);
  WeightModel model;
  model.weights = std::move(gram.values);
  invert_regularized(model.weights, lambda, threads);
  precision_to_weights(model.weights);
  model.lambda = lambda;
  model.gram_mode = gram.mode;
  model.column_means = std::move(gram.column_means);
  model.column_stds = std::move(gram.column_stds);
  model.items = std::move(gram.items);
  model.variant = Variant::full;
  return model;
}

WeightModel solve(const GramMatrix& gram, double lambda, unsigned threads) {
  GramMatrix copy = gram;
  return solve(std::move(copy), lambda, threads);
}

DenseMatrix precision_matrix(const GramMatrix& gram, double lambda, unsigned threads) {
  check_lambda(lambda);
  DenseMatrix p = gram.values;
  invert_regularized(p, lambda, threads);
  return p;
}

WeightModel clamp_nonneg(const WeightModel& model) {
  WeightModel out = model;
  for (double& w : out.weights.values()) {
    if (w < 0.0) w = 0.0;
  }
  out.variant = Variant::clamped_nonneg;
  return out;
}

double negative_fraction(const DenseMatrix& weights) {
  const auto n = weights.rows();
  if (n < 2) return 0.0;
  std::size_t negative = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && weights(i, j) < 0.0) ++negative;
    }
  }
  return static_cast<double>(negative) / static_cast<double>(n * (n - 1));
}

SolveDiagnostics solve_diagnostics(const GramMatrix& gram, double lambda, unsigned threads) {
  check_lambda(lambda);
  SolveDiagnostics diag;
  DenseMatrix p = gram.values;
  diag.min_pivot = invert_regularized(p, lambda, threads);
  diag.gamma_tilde.resize(p.rows());
  for (std::size_t j = 0; j < p.rows(); ++j) diag.gamma_tilde[j] = 1.0 / p(j, j);
  precision_to_weights(p);
  diag.negative_fraction = negative_fraction(p);
  return diag;
}

}  // namespace ease
