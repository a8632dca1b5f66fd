#include "ibc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ibc/cosine_series.hpp"
#include "ibc/errors.hpp"

namespace ibc {

// ---------------------------------------------------------------------------
// EigenSequence

EigenSequence::EigenSequence(std::vector<double> values, SpectrumSource source,
                             std::optional<double> exact_decay, bool exhaustive)
    : values_(std::move(values)),
      source_(source),
      exact_decay_(exact_decay),
      exhaustive_(exhaustive) {
  if (values_.empty()) throw InvalidInput("EigenSequence: empty");
  if (!(values_.front() > 0.0) || !std::isfinite(values_.front())) {
    throw InvalidInput("EigenSequence: lambda1 must be positive and finite");
  }
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!(values_[j] >= 0.0) || !std::isfinite(values_[j])) {
      throw InvalidInput("EigenSequence: eigenvalues must be finite and nonnegative");
    }
    if (j > 0 && values_[j] > values_[j - 1]) {
      throw InvalidInput("EigenSequence: eigenvalues must be nonincreasing");
    }
  }
  if (exact_decay_ && !(*exact_decay_ >= 0.0)) {
    throw InvalidInput("EigenSequence: decay must be nonnegative");
  }
}

double EigenSequence::lambda2() const {
  if (values_.size() >= 2) return values_[1];
  if (exhaustive_) return 0.0;
  throw TruncationError("EigenSequence: lambda2 not listed", 2);
}

EigenSequence EigenSequence::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidParameter("scale must be positive");
  std::vector<double> v(values_);
  for (double& x : v) x *= c;
  return EigenSequence(std::move(v), source_, exact_decay_, exhaustive_);
}

// ---------------------------------------------------------------------------
// KernelSpec

KernelSpec KernelSpec::sobolev_min() { return KernelSpec(SobolevMinParams{}); }
KernelSpec KernelSpec::sobolev_cosh() { return KernelSpec(SobolevCoshParams{}); }

KernelSpec KernelSpec::korobov(double alpha, double beta) {
  if (!(alpha > 0.5) || !std::isfinite(alpha)) {
    throw InvalidParameter("korobov: alpha must exceed 1/2");
  }
  if (!(beta > 0.0 && beta <= 1.0)) throw InvalidParameter("korobov: beta must lie in (0, 1]");
  return KernelSpec(
      KorobovParams{alpha, beta, std::make_shared<const CosineZetaSeries>(2.0 * alpha)});
}

KernelSpec KernelSpec::sobolev_distance(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw InvalidParameter("sobolev-distance: a must lie in [0, 1]");
  return KernelSpec(SobolevDistanceParams{a});
}

KernelSpec KernelSpec::brownian_min() { return KernelSpec(BrownianMinParams{}); }

KernelSpec KernelSpec::discrete(Eigen::MatrixXd gram) {
  if (gram.rows() == 0 || gram.rows() != gram.cols()) {
    throw DimensionError("discrete kernel: Gram matrix must be square and nonempty");
  }
  const double scale = std::max(1.0, gram.cwiseAbs().maxCoeff());
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidInput("discrete kernel: Gram matrix must be symmetric");
  }
  return KernelSpec(DiscreteParams{std::make_shared<const Eigen::MatrixXd>(std::move(gram))});
}

KernelFamily KernelSpec::family() const noexcept {
  return static_cast<KernelFamily>(params_.index());
}

std::string KernelSpec::name() const {
  switch (family()) {
    case KernelFamily::SobolevMin: return "sobolev-min";
    case KernelFamily::SobolevCosh: return "sobolev-cosh";
    case KernelFamily::Korobov: return "korobov";
    case KernelFamily::SobolevDistance: return "sobolev-distance";
    case KernelFamily::BrownianMin: return "brownian-min";
    case KernelFamily::Discrete: return "discrete";
  }
  return "unknown";
}

KernelSpec kernel_from_name(std::string_view name, double alpha, double beta, double anchor) {
  if (name == "sobolev-min") return KernelSpec::sobolev_min();
  if (name == "sobolev-cosh") return KernelSpec::sobolev_cosh();
  if (name == "korobov") return KernelSpec::korobov(alpha, beta);
  if (name == "sobolev-distance") return KernelSpec::sobolev_distance(anchor);
  if (name == "brownian-min") return KernelSpec::brownian_min();
  throw InvalidParameter("unknown kernel family '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// CosineMode

double CosineMode::operator()(double x) const {
  return amplitude * std::cos(frequency * x + phase);
}

double CosineMode::derivative(double x) const {
  return -amplitude * frequency * std::sin(frequency * x + phase);
}

// ---------------------------------------------------------------------------
// Kernel evaluation

namespace {

void require_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("kernel argument outside [0, 1]");
}

Eigen::Index discrete_label(double x, Eigen::Index m) {
  const double r = std::round(x);
  if (r != x || r < 0.0 || r >= static_cast<double>(m)) {
    throw DomainError("discrete kernel argument is not a point label");
  }
  return static_cast<Eigen::Index>(r);
}

}  // namespace

double kernel_eval(const KernelSpec& spec, double x, double y) {
  return std::visit(
      [&](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, KernelSpec::DiscreteParams>) {
          const auto m = p.gram->rows();
          return (*p.gram)(discrete_label(x, m), discrete_label(y, m));
        } else {
          require_unit_interval(x);
          require_unit_interval(y);
          if constexpr (std::is_same_v<P, KernelSpec::SobolevMinParams>) {
            return 1.0 + std::min(x, y);
          } else if constexpr (std::is_same_v<P, KernelSpec::SobolevCoshParams>) {
            return std::cosh(1.0 - std::max(x, y)) * std::cosh(std::min(x, y)) / std::sinh(1.0);
          } else if constexpr (std::is_same_v<P, KernelSpec::KorobovParams>) {
            const double theta = 2.0 * std::numbers::pi * (x - y);
            return 1.0 + 2.0 * p.beta * (*p.series)(theta);
          } else if constexpr (std::is_same_v<P, KernelSpec::SobolevDistanceParams>) {
            return 1.0 + 0.5 * (std::abs(x - p.anchor) + std::abs(y - p.anchor) - std::abs(x - y));
          } else {
            static_assert(std::is_same_v<P, KernelSpec::BrownianMinParams>);
            return std::min(x, y);
          }
        }
      },
      spec.params());
}

double tensor_kernel_eval(const KernelSpec& spec, std::span<const double> x,
                          std::span<const double> y) {
  if (x.empty() || x.size() != y.size()) {
    throw DimensionError("tensor_kernel_eval: points must have equal positive dimension");
  }
  double product = 1.0;
  for (std::size_t k = 0; k < x.size(); ++k) product *= kernel_eval(spec, x[k], y[k]);
  return product;
}

Eigen::MatrixXd gram_matrix(const KernelSpec& spec, std::span<const double> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      gram(i, j) = gram(j, i) = kernel_eval(spec, points[i], points[j]);
    }
  }
  return gram;
}

}  // namespace ibc
