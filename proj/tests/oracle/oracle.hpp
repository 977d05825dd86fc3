#pragma once

// Reference implementations used only by tests. Nothing here calls into the
// ease solver, Gram builder or metric code: the linear algebra is plain
// Gaussian elimination and loops over nested vectors.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

Matrix zeros(std::size_t rows, std::size_t cols);
Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);

/// Solves A·x = b with partial pivoting. Throws std::runtime_error on a
/// singular system.
std::vector<double> gaussian_solve(Matrix a, std::vector<double> b);

/// Column j of the constrained ridge solution:
///   argmin_w ||X_j − X_{−j} w||² + λ||w||², with w_j = 0.
std::vector<double> ridge_column(const Matrix& x, std::size_t j, double lambda);

/// XᵀX by explicit triple loop.
Matrix dense_gram(const Matrix& x);
/// (X − 1μᵀ)ᵀ(X − 1μᵀ) with X densified and centered explicitly.
Matrix dense_centered_gram(const Matrix& x);

/// ||X − XB||²_F + λ||B||²_F evaluated on the data.
double objective_from_data(const Matrix& x, const Matrix& b, double lambda);
/// Same objective expressed through G: tr(G) − 2 tr(GB) + tr(BᵀGB) + λ||B||².
double objective_from_gram(const Matrix& g, const Matrix& b, double lambda);

class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DescentOptions {
  std::size_t steps = 10000;
  /// 0 picks 1 / L with L a Gershgorin bound on the gradient's Lipschitz constant.
  double rate = 0.0;
  /// Stop once the largest update entry drops below this.
  double tolerance = 0.0;
};

struct DescentResult {
  Matrix weights;
  std::vector<double> objective;  ///< value after each step, [0] = initial
  double max_update = 0.0;        ///< largest |ΔB| entry over the whole run
  std::size_t steps = 0;
};

/// Projected gradient descent on the G-form objective; the diagonal is
/// reset to 0 after each step. Throws DivergenceError once the objective
/// has increased on 10 consecutive steps.
DescentResult gd_descent(const Matrix& g, double lambda, const Matrix& init,
                         const DescentOptions& options = {});

/// Random binary users x items matrix with the given density; every column
/// and every row gets at least one entry.
Matrix random_binary(std::size_t users, std::size_t items, double density, std::uint64_t seed);

}  // namespace oracle
