#include "ibc/nystrom.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

#include "ibc/errors.hpp"

namespace ibc {

QuadratureGrid::QuadratureGrid(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw InvalidInput("QuadratureGrid: nodes and weights must be nonempty and equal length");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(nodes_[i] >= 0.0 && nodes_[i] <= 1.0)) {
      throw InvalidInput("QuadratureGrid: nodes must lie in [0, 1]");
    }
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw InvalidInput("QuadratureGrid: nodes must be strictly increasing");
    }
    if (!(weights_[i] > 0.0)) throw InvalidInput("QuadratureGrid: weights must be positive");
    total += weights_[i];
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidInput("QuadratureGrid: weights must sum to 1");
}

QuadratureGrid QuadratureGrid::midpoint(int m) {
  if (m < 1) throw InvalidParameter("midpoint grid needs at least one cell");
  std::vector<double> nodes(static_cast<std::size_t>(m));
  std::vector<double> weights(static_cast<std::size_t>(m), 1.0 / m);
  for (int i = 0; i < m; ++i) nodes[static_cast<std::size_t>(i)] = (i + 0.5) / m;
  return QuadratureGrid(std::move(nodes), std::move(weights));
}

Eigen::MatrixXd nystrom_matrix(const KernelSpec& spec, const QuadratureGrid& grid) {
  const auto x = grid.nodes();
  const auto w = grid.weights();
  const Eigen::Index n = grid.size();
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      m(i, j) = m(j, i) = std::sqrt(w[i] * w[j]) * kernel_eval(spec, x[i], x[j]);
    }
  }
  return m;
}

EigenSequence nystrom_spectrum(const KernelSpec& spec, const QuadratureGrid& grid, int count) {
  if (count < 1 || count > grid.size()) {
    throw InvalidParameter("nystrom_spectrum: count must lie in [1, grid size]");
  }
  const Eigen::MatrixXd m = nystrom_matrix(spec, grid);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("nystrom_spectrum: symmetric eigensolver did not converge");
  }
  // Eigen returns ascending order.
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double top = ev(ev.size() - 1);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    double v = ev(ev.size() - 1 - k);
    if (v < 0.0) {
      if (v < -1e-10 * std::abs(top)) {
        throw NumericError("nystrom_spectrum: kernel matrix is not positive semidefinite");
      }
      v = 0.0;
    }
    values.push_back(v);
  }
  return EigenSequence(std::move(values), SpectrumSource::Numeric);
}

RefinedSpectrum richardson_refine(const KernelSpec& spec, int count, std::span<const int> sizes) {
  if (sizes.size() < 2) throw InvalidParameter("richardson_refine: need at least two grid sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) {
      throw InvalidParameter("richardson_refine: grid sizes must be strictly increasing");
    }
  }
  std::vector<std::vector<double>> levels;
  levels.reserve(sizes.size());
  for (const int m : sizes) {
    const auto seq = nystrom_spectrum(spec, QuadratureGrid::midpoint(m), count);
    levels.emplace_back(seq.values().begin(), seq.values().end());
  }
  const auto& coarse = levels[levels.size() - 2];
  const auto& fine = levels.back();
  const double r = static_cast<double>(sizes.back()) / sizes[sizes.size() - 2];
  const double r2 = r * r;

  std::vector<double> estimates(static_cast<std::size_t>(count));
  std::vector<double> errors(static_cast<std::size_t>(count));
  for (std::size_t j = 0; j < estimates.size(); ++j) {
    estimates[j] = std::max(0.0, (r2 * fine[j] - coarse[j]) / (r2 - 1.0));
    errors[j] = std::abs(fine[j] - coarse[j]);
  }
  // Extrapolation can reorder values that were tied to rounding.
  std::vector<std::size_t> order(estimates.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return estimates[a] > estimates[b]; });
  std::vector<double> sorted_est;
  std::vector<double> sorted_err;
  for (const auto j : order) {
    sorted_est.push_back(estimates[j]);
    sorted_err.push_back(errors[j]);
  }
  return RefinedSpectrum{EigenSequence(std::move(sorted_est), SpectrumSource::Numeric),
                         std::move(sorted_err), std::move(levels)};
}

}  // namespace ibc
