#include "ibc/cosine_series.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "ibc/errors.hpp"

namespace ibc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIntegerSnap = 1e-9;
constexpr int kExpansionTerms = 40;  // (theta / 2pi)^(2m) <= 4^-m for theta <= pi

// Bernoulli number B_k with the B_1 = -1/2 convention.
double bernoulli(int k) {
  if (k == 0) return 1.0;
  if (k == 1) return -0.5;
  if (k % 2 == 1) return 0.0;
  return boost::math::bernoulli_b2n<double>(k / 2);
}

// Reduce to theta in [0, pi] using evenness and 2 pi periodicity.
double fold_angle(double theta) {
  theta = std::fmod(std::abs(theta), 2.0 * kPi);
  return theta > kPi ? 2.0 * kPi - theta : theta;
}

}  // namespace

CosineZetaSeries::CosineZetaSeries(double s) : s_(s), mode_(Mode::General) {
  if (!(s > 1.0) || !std::isfinite(s)) {
    throw InvalidParameter("cosine series exponent must be finite and exceed 1");
  }
  if (s >= 8.0) {
    mode_ = Mode::Direct;
    // Tail after N terms is below N^(1-s)/(s-1).
    direct_terms_ = static_cast<long>(std::ceil(std::pow(1e17 / (s - 1.0), 1.0 / (s - 1.0))));
    return;
  }
  const double nearest = std::round(s);
  if (std::abs(s - nearest) < kIntegerSnap) {
    integer_ = static_cast<int>(nearest);
    s_ = nearest;
  }

  if (integer_ != 0 && integer_ % 2 == 0) {
    // sum cos(2 pi k u)/k^(2n) = (-1)^(n+1) (2 pi)^(2n) B_2n(u) / (2 (2n)!)
    mode_ = Mode::EvenInteger;
    const int n2 = integer_;
    const double sign = ((n2 / 2) % 2 == 1) ? 1.0 : -1.0;
    const double prefactor =
        sign * std::pow(2.0 * kPi, n2) / (2.0 * boost::math::factorial<double>(n2));
    series_.assign(static_cast<std::size_t>(n2 + 1), 0.0);
    for (int k = 0; k <= n2; ++k) {
      series_[static_cast<std::size_t>(n2 - k)] =
          prefactor * boost::math::binomial_coefficient<double>(n2, k) * bernoulli(k);
    }
    return;
  }

  series_.resize(kExpansionTerms);
  for (int m = 0; m < kExpansionTerms; ++m) {
    const double arg = s_ - 2.0 * m;
    const bool pole = integer_ != 0 && arg == 1.0;
    series_[static_cast<std::size_t>(m)] =
        pole ? 0.0 : ((m % 2 == 0) ? 1.0 : -1.0) * boost::math::zeta(arg);
  }

  if (integer_ != 0) {
    mode_ = Mode::OddInteger;
    zeta_s_ = integer_ > 1 ? boost::math::zeta(s_) : INFINITY;
    for (int k = 1; k <= integer_ - 1; ++k) harmonic_ += 1.0 / k;
    const int half = (integer_ - 1) / 2;
    singular_coeff_ = ((half % 2 == 0) ? 1.0 : -1.0) /
                      boost::math::factorial<double>(static_cast<unsigned>(integer_ - 1));
  } else {
    mode_ = Mode::General;
    zeta_s_ = boost::math::zeta(s_);
    singular_coeff_ = boost::math::tgamma(1.0 - s_) * std::sin(kPi * s_ / 2.0);
  }
}

double CosineZetaSeries::regular_part(double theta) const {
  // Sum from the smallest terms upward for accuracy.
  const double t2 = theta * theta;
  std::array<double, kExpansionTerms> powers{};
  double p = 1.0;
  for (std::size_t m = 0; m < series_.size(); ++m) {
    if (m > 0) p *= t2 / ((2.0 * m - 1.0) * (2.0 * m));
    powers[m] = p;
  }
  double sum = 0.0;
  for (std::size_t m = series_.size(); m-- > 0;) sum += series_[m] * powers[m];
  return sum;
}

double CosineZetaSeries::operator()(double theta) const {
  if (!std::isfinite(theta)) throw DomainError("cosine series: non-finite angle");
  theta = fold_angle(theta);
  switch (mode_) {
    case Mode::Direct: {
      double sum = 0.0;
      for (long k = direct_terms_; k >= 1; --k) {
        const double kd = static_cast<double>(k);
        sum += std::cos(kd * theta) / std::pow(kd, s_);
      }
      return sum;
    }
    case Mode::EvenInteger: {
      const double u = theta / (2.0 * kPi);
      double acc = 0.0;
      for (std::size_t p = series_.size(); p-- > 0;) acc = acc * u + series_[p];
      return acc;
    }
    case Mode::OddInteger: {
      if (theta == 0.0) return zeta_s_;
      const double singular =
          singular_coeff_ * std::pow(theta, integer_ - 1) * (harmonic_ - std::log(theta));
      return singular + regular_part(theta);
    }
    case Mode::General: {
      if (theta == 0.0) return zeta_s_;
      return singular_coeff_ * std::pow(theta, s_ - 1.0) + regular_part(theta);
    }
  }
  return 0.0;
}

double cosine_zeta_series(double s, double theta) { return CosineZetaSeries(s)(theta); }

}  // namespace ibc
