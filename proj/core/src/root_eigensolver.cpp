#include "ibc/root_eigensolver.hpp"

#include <cmath>
#include <numbers>

#include "ibc/errors.hpp"
#include "ibc/tolerances.hpp"

namespace ibc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBracketInset = 1e-9;
constexpr double kRootTol = 1e-13;

// Same zeros as cot(x) - x inside each ((j-1) pi, j pi), without the poles.
double secular(double x) { return std::cos(x) - x * std::sin(x); }
double secular_derivative(double x) { return -2.0 * std::sin(x) - x * std::cos(x); }

void require_index(int j) {
  if (j < 1) throw InvalidParameter("eigen index must be >= 1");
}

void require_count(int count) {
  if (count < 1) throw InvalidParameter("eigenvalue count must be >= 1");
}

// Eigenvalue bound used to stop analytic_eigenvalues_down_to: every
// eigenvalue after index j is <= this value.
double sobolev_min_value(int j) {
  const double a = solve_cot_root(j);
  return 1.0 / (a * a);
}

}  // namespace

double solve_cot_root(int j) {
  require_index(j);
  double lo = (j - 1) * kPi + kBracketInset;
  double hi = j * kPi - kBracketInset;
  double f_lo = secular(lo);
  const double f_hi = secular(hi);
  if (!(f_lo * f_hi < 0.0)) {
    throw InternalError("solve_cot_root: bracket has no sign change");
  }
  for (int iter = 0; iter < 200 && hi - lo > kRootTol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = secular(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double bracket_lo = lo - kRootTol;
  const double bracket_hi = hi + kRootTol;
  double x = 0.5 * (lo + hi);
  for (int step = 0; step < 2; ++step) {
    const double next = x - secular(x) / secular_derivative(x);
    if (!(next > bracket_lo && next < bracket_hi)) break;
    x = next;
  }
  return x;
}

Eigenpair sobolev_min_eigenpair(int j) {
  const double a = solve_cot_root(j);
  const double c = std::cos(a);
  const double norm_sq = c * c + 0.5 * a * (a - 0.5 * std::sin(2.0 * a));
  return Eigenpair{j, 1.0 / (a * a), CosineMode{1.0 / std::sqrt(norm_sq), a, -a}};
}

EigenSequence sobolev_min_eigenvalues(int count) {
  require_count(count);
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(count));
  for (int j = 1; j <= count; ++j) v.push_back(sobolev_min_value(j));
  return EigenSequence(std::move(v), SpectrumSource::AnalyticRule, 2.0);
}

Eigenpair sobolev_cosh_eigenpair(int j) {
  require_index(j);
  const double omega = (j - 1) * kPi;
  const double value = 1.0 / (1.0 + omega * omega);
  if (j == 1) return Eigenpair{1, value, CosineMode{1.0, 0.0, 0.0}};
  // ||cos(omega x)||^2 = 1/2 + omega^2/2 in the H1 norm.
  return Eigenpair{j, value, CosineMode{std::sqrt(2.0 / (1.0 + omega * omega)), omega, 0.0}};
}

EigenSequence sobolev_cosh_eigenvalues(int count) {
  require_count(count);
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(count));
  for (int j = 1; j <= count; ++j) {
    const double omega = (j - 1) * kPi;
    v.push_back(1.0 / (1.0 + omega * omega));
  }
  return EigenSequence(std::move(v), SpectrumSource::AnalyticRule, 2.0);
}

Eigenpair korobov_eigenpair(double alpha, double beta, int j) {
  (void)KernelSpec::korobov(alpha, beta);
  require_index(j);
  if (j == 1) return Eigenpair{1, 1.0, CosineMode{1.0, 0.0, 0.0}};
  const int k = j / 2;
  const double value = beta * std::pow(static_cast<double>(k), -2.0 * alpha);
  // F-norm of cos(2 pi k x) is k^(2 alpha) / (2 beta); sine modes likewise.
  const double amplitude = std::sqrt(2.0 * value);
  const double phase = (j % 2 == 0) ? 0.0 : -0.5 * kPi;
  return Eigenpair{j, value, CosineMode{amplitude, 2.0 * kPi * k, phase}};
}

EigenSequence korobov_eigenvalues(double alpha, double beta, int count) {
  (void)KernelSpec::korobov(alpha, beta);
  require_count(count);
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(count));
  v.push_back(1.0);
  for (int j = 2; j <= count; ++j) {
    v.push_back(beta * std::pow(static_cast<double>(j / 2), -2.0 * alpha));
  }
  return EigenSequence(std::move(v), SpectrumSource::AnalyticRule, 2.0 * alpha);
}

bool has_analytic_spectrum(const KernelSpec& spec) {
  switch (spec.family()) {
    case KernelFamily::SobolevMin:
    case KernelFamily::SobolevCosh:
    case KernelFamily::Korobov:
      return true;
    default:
      return false;
  }
}

int top_multiplicity(std::span<const double> values) {
  if (values.empty()) return 0;
  int m = 1;
  while (m < static_cast<int>(values.size()) &&
         values[m] >= values[0] * (1.0 - kRelTie)) {
    ++m;
  }
  return m;
}

FamilySpectrum family_spectrum(const KernelSpec& spec, int count) {
  require_count(count);
  std::vector<Eigenpair> pairs;
  pairs.reserve(static_cast<std::size_t>(count));
  std::optional<double> decay;
  for (int j = 1; j <= count; ++j) {
    switch (spec.family()) {
      case KernelFamily::SobolevMin:
        pairs.push_back(sobolev_min_eigenpair(j));
        decay = 2.0;
        break;
      case KernelFamily::SobolevCosh:
        pairs.push_back(sobolev_cosh_eigenpair(j));
        decay = 2.0;
        break;
      case KernelFamily::Korobov: {
        const auto& p = std::get<KernelSpec::KorobovParams>(spec.params());
        pairs.push_back(korobov_eigenpair(p.alpha, p.beta, j));
        decay = 2.0 * p.alpha;
        break;
      }
      default:
        throw InvalidParameter("no closed-form spectrum for family " + spec.name());
    }
  }
  std::vector<double> values;
  values.reserve(pairs.size());
  for (const auto& p : pairs) values.push_back(p.value);
  EigenSequence seq(std::move(values), SpectrumSource::AnalyticRule, decay);
  const int mult = top_multiplicity(seq.values());
  return FamilySpectrum{spec, std::move(seq), std::move(pairs), mult};
}

EigenSequence analytic_eigenvalues_down_to(const KernelSpec& spec, double ratio,
                                           std::size_t max_terms) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw InvalidParameter("analytic_eigenvalues_down_to: ratio must lie in (0, 1)");
  }
  std::vector<double> v;
  std::optional<double> decay;
  const auto push_until = [&](auto&& value_of) {
    for (int j = 1;; ++j) {
      if (v.size() >= max_terms) {
        throw ResourceLimit("analytic eigenvalue list would exceed the term limit");
      }
      const double value = value_of(j);
      v.push_back(value);
      if (value <= ratio * v.front()) break;
    }
  };
  switch (spec.family()) {
    case KernelFamily::SobolevMin:
      decay = 2.0;
      push_until(sobolev_min_value);
      break;
    case KernelFamily::SobolevCosh:
      decay = 2.0;
      push_until([](int j) {
        const double omega = (j - 1) * kPi;
        return 1.0 / (1.0 + omega * omega);
      });
      break;
    case KernelFamily::Korobov: {
      const auto& p = std::get<KernelSpec::KorobovParams>(spec.params());
      decay = 2.0 * p.alpha;
      push_until([&](int j) {
        if (j == 1) return 1.0;
        return p.beta * std::pow(static_cast<double>(j / 2), -2.0 * p.alpha);
      });
      // Sine partner of the last cosine mode has the same value; list it too
      // so the list ends on a complete level.
      if (v.size() % 2 == 0) v.push_back(v.back());
      break;
    }
    default:
      throw InvalidParameter("no closed-form spectrum for family " + spec.name());
  }
  return EigenSequence(std::move(v), SpectrumSource::AnalyticRule, decay);
}

}  // namespace ibc
