#pragma once

#include <vector>

namespace ibc {

/// sum_{k >= 1} cos(k * theta) / k^s for a fixed s > 1.
///
/// Evaluated in closed form to near machine precision: Bernoulli polynomials
/// for even integer s, the polylogarithm expansion around theta = 0 for other
/// s < 8 (with its log-limit at odd integers), and a short direct sum for
/// s >= 8 where the series converges fast. Coefficients depending only on s
/// are computed once in the constructor.
class CosineZetaSeries {
 public:
  /// Throws InvalidParameter for s <= 1 or non-finite s.
  explicit CosineZetaSeries(double s);

  double operator()(double theta) const;
  double exponent() const noexcept { return s_; }

 private:
  enum class Mode { EvenInteger, OddInteger, General, Direct };

  double regular_part(double theta) const;

  double s_;
  Mode mode_;
  int integer_ = 0;
  double zeta_s_ = 0.0;           // value at theta = 0
  double singular_coeff_ = 0.0;   // coefficient of the non-analytic term
  double harmonic_ = 0.0;         // H_{s-1} for odd integer s
  long direct_terms_ = 0;
  std::vector<double> series_;    // (-1)^m zeta(s - 2m), or Bernoulli-polynomial coefficients
};

/// Convenience wrapper constructing a CosineZetaSeries per call.
double cosine_zeta_series(double s, double theta);

}  // namespace ibc
