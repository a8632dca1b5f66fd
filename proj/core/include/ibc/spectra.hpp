#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "ibc/cosine_series.hpp"

namespace ibc {

enum class SpectrumSource { AnalyticRule, Numeric, UserSupplied };

/// Nonincreasing list of nonnegative eigenvalues of W = S*S, possibly a
/// truncation of an infinite sequence.
///
/// Invariants (checked on construction, InvalidInput otherwise):
///   values nonempty, values[0] > 0, values[j] >= values[j+1] >= 0.
/// A non-exhaustive sequence lists the true leading eigenvalues only; an
/// exhaustive one lists every eigenvalue of a finite-dimensional space and
/// everything past the end is zero.
class EigenSequence {
 public:
  EigenSequence(std::vector<double> values, SpectrumSource source,
                std::optional<double> exact_decay = std::nullopt,
                bool exhaustive = false);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const { return values_[j]; }
  double lambda1() const noexcept { return values_.front(); }
  /// Second eigenvalue; 0 when an exhaustive sequence has a single entry.
  double lambda2() const;

  SpectrumSource source() const noexcept { return source_; }
  std::optional<double> exact_decay() const noexcept { return exact_decay_; }
  bool is_exhaustive() const noexcept { return exhaustive_; }

  /// Same sequence multiplied by c > 0.
  EigenSequence scaled(double c) const;

 private:
  std::vector<double> values_;
  SpectrumSource source_;
  std::optional<double> exact_decay_;
  bool exhaustive_;
};

enum class KernelFamily {
  SobolevMin,       ///< 1 + min(x, y)
  SobolevCosh,      ///< cosh(1 - max(x, y)) cosh(min(x, y)) / sinh(1)
  Korobov,          ///< 1 + 2 beta sum_k cos(2 pi k (x - y)) / k^(2 alpha)
  SobolevDistance,  ///< 1 + (|x - a| + |y - a| - |x - y|) / 2
  BrownianMin,      ///< min(x, y)
  Discrete,         ///< explicit Gram matrix on points 0..m-1
};

/// Closed set of univariate reproducing kernels on [0, 1] (or on a finite
/// point set for Discrete).
class KernelSpec {
 public:
  struct SobolevMinParams {};
  struct SobolevCoshParams {};
  struct KorobovParams {
    double alpha;
    double beta;
    std::shared_ptr<const CosineZetaSeries> series;  ///< sum_k cos(k theta) / k^(2 alpha)
  };
  struct SobolevDistanceParams {
    double anchor;
  };
  struct BrownianMinParams {};
  struct DiscreteParams {
    std::shared_ptr<const Eigen::MatrixXd> gram;
  };
  using Params = std::variant<SobolevMinParams, SobolevCoshParams, KorobovParams,
                              SobolevDistanceParams, BrownianMinParams, DiscreteParams>;

  static KernelSpec sobolev_min();
  static KernelSpec sobolev_cosh();
  /// Requires alpha > 1/2 and beta in (0, 1].
  static KernelSpec korobov(double alpha, double beta);
  /// Requires a in [0, 1].
  static KernelSpec sobolev_distance(double a);
  static KernelSpec brownian_min();
  /// Symmetric Gram matrix; points are the integer labels 0..m-1.
  static KernelSpec discrete(Eigen::MatrixXd gram);

  KernelFamily family() const noexcept;
  const Params& params() const noexcept { return params_; }
  /// Stable lowercase name used by the CLI and reports ("sobolev-min", ...).
  std::string name() const;

  bool is_discrete() const noexcept { return family() == KernelFamily::Discrete; }

 private:
  explicit KernelSpec(Params p) : params_(std::move(p)) {}
  Params params_;
};

/// Parses a CLI family name; korobov/sobolev-distance take their parameters
/// from the arguments. Throws InvalidParameter on unknown names.
KernelSpec kernel_from_name(std::string_view name, double alpha = 1.0, double beta = 1.0,
                            double anchor = 0.0);

/// amplitude * cos(frequency * x + phase). Every analytic eigenfunction in
/// the supported families has this form.
struct CosineMode {
  double amplitude = 1.0;
  double frequency = 0.0;
  double phase = 0.0;

  double operator()(double x) const;
  double derivative(double x) const;
};

struct Eigenpair {
  int index = 1;  ///< 1-based position j in the nonincreasing order
  double value = 0.0;
  CosineMode eigenfunction;
};

/// K1(x, y). Throws DomainError when x or y is outside [0, 1] (or not a
/// valid label for Discrete).
double kernel_eval(const KernelSpec& spec, double x, double y);

/// prod_k K1(x_k, y_k). Throws DimensionError when sizes differ or are 0.
double tensor_kernel_eval(const KernelSpec& spec, std::span<const double> x,
                          std::span<const double> y);

/// Gram matrix K1(points[i], points[j]).
Eigen::MatrixXd gram_matrix(const KernelSpec& spec, std::span<const double> points);

}  // namespace ibc
