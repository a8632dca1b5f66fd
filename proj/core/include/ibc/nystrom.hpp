#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "ibc/spectra.hpp"

namespace ibc {

/// Quadrature rule on [0, 1]: strictly increasing nodes, positive weights
/// summing to 1 (within 1e-12).
class QuadratureGrid {
 public:
  QuadratureGrid(std::vector<double> nodes, std::vector<double> weights);

  /// Composite midpoint rule with m cells.
  static QuadratureGrid midpoint(int m);

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Symmetrically weighted kernel matrix M_ij = sqrt(w_i w_j) K1(x_i, x_j).
Eigen::MatrixXd nystrom_matrix(const KernelSpec& spec, const QuadratureGrid& grid);

/// `count` largest eigenvalues of the Nystrom matrix, nonincreasing. These
/// approximate the spectrum of the integral operator with kernel K1 on
/// L2([0, 1]), i.e. of W = S*S for L2 approximation.
/// Throws InvalidParameter when count exceeds the grid size, NumericError
/// when the eigensolver fails or the matrix is materially indefinite.
EigenSequence nystrom_spectrum(const KernelSpec& spec, const QuadratureGrid& grid, int count);

struct RefinedSpectrum {
  /// Extrapolated eigenvalues, nonincreasing.
  EigenSequence estimates;
  /// Per eigenvalue: |lambda_j(finest) - lambda_j(second finest)|.
  std::vector<double> error_estimates;
  /// Raw midpoint spectra per level, in the order of `sizes`.
  std::vector<std::vector<double>> levels;
};

/// Midpoint Nystrom spectra on each grid size, combined by Richardson
/// extrapolation of the two finest levels assuming O(m^-2) convergence.
/// `sizes` must hold at least two strictly increasing grid sizes.
RefinedSpectrum richardson_refine(const KernelSpec& spec, int count, std::span<const int> sizes);

}  // namespace ibc
