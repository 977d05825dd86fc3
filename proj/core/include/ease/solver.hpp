#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ease/dense_matrix.hpp"
#include "ease/gram.hpp"
#include "ease/types.hpp"
#include "ease/vocabulary.hpp"

namespace ease {

enum class Variant : std::uint8_t { full = 0, clamped_nonneg = 1 };

std::string_view to_string(Variant variant);

/// Item-item weight matrix B with an exactly zero diagonal. Scores are
/// S = x·B. Column statistics are carried over from the Gram matrix so that
/// histories can be mapped into the same column space at scoring time.
struct WeightModel {
  DenseMatrix weights;
  double lambda = 0.0;
  GramMode gram_mode = GramMode::cooccurrence;
  std::vector<double> column_means;
  std::vector<double> column_stds;
  Vocabulary items;
  Variant variant = Variant::full;

  std::size_t n_items() const noexcept { return weights.rows(); }
};

/// Closed-form solution of
///   min_B ||X − XB||²_F + λ||B||²_F   s.t. diag(B) = 0
/// from the Gram matrix alone:
///   P = (G + λI)⁻¹,   B_ij = −P_ij / P_jj (i ≠ j),   B_jj = 0.
///
/// P is obtained through a Cholesky factorization followed by the inverse
/// from that factor. Throws std::invalid_argument unless lambda > 0 and
/// NumericalError (carrying the failing pivot) if G + λI is not positive
/// definite.
WeightModel solve(const GramMatrix& gram, double lambda, unsigned threads = 0);

/// Same as above but reuses the Gram matrix storage for P and then B.
WeightModel solve(GramMatrix&& gram, double lambda, unsigned threads = 0);

/// (G + λI)⁻¹, fully populated (both triangles).
DenseMatrix precision_matrix(const GramMatrix& gram, double lambda, unsigned threads = 0);

/// Copy of the model with every negative weight replaced by 0.
WeightModel clamp_nonneg(const WeightModel& model);

struct SolveDiagnostics {
  /// Lagrange-multiplier vector γ̃ = 1 ⊘ diag(P); equals λ + γ.
  std::vector<double> gamma_tilde;
  /// Smallest Cholesky pivot of G + λI (square of the factor's diagonal).
  double min_pivot = 0.0;
  /// Share of strictly negative off-diagonal weights.
  double negative_fraction = 0.0;
};

SolveDiagnostics solve_diagnostics(const GramMatrix& gram, double lambda, unsigned threads = 0);

/// Share of strictly negative entries among the off-diagonal weights.
double negative_fraction(const DenseMatrix& weights);

}  // namespace ease
