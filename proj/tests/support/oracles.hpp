#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library, so agreement is a genuine cross-check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Core>

namespace oracle {

// Values frozen from 50-digit mpmath runs.
inline constexpr double kAlpha1 = 0.86033358901937976;
inline constexpr double kLambda1 = 1.3510338868783786;
inline constexpr double kAlpha2 = 3.4256184594817281;
inline constexpr double kLambda2 = 0.085216171650906028;
inline constexpr double kLambda3 = 0.024131968363530744;
inline constexpr double kBeta1 = 1.3099519956401814;
inline constexpr double kSecAlpha1 = 1.5333081513115290;
inline constexpr double kRatioBase = 1.0132754151587840;
inline constexpr double kLambda50Scaled = 1.0411449509958388;  // lambda_50 pi^2 50^2
inline constexpr double kCoth1 = 1.3130352854993313;
inline constexpr double kCosh3 = 0.024704523031857640;  // 1/(1+4 pi^2)
inline constexpr double kCosh2 = 0.091999668350375232;  // 1/(1+pi^2)
inline constexpr double kLambda1Squared = 1.8252925634936996;
inline constexpr double kSqrtFourThirds = 1.1547005383792515;

inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
  double flo = f(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Root of cot x = x in ((j-1) pi, j pi) by plain bisection on cot x - x.
inline double cot_root(int j) {
  const double pi = std::numbers::pi;
  return bisect([](double x) { return std::cos(x) / std::sin(x) - x; }, (j - 1) * pi + 1e-9,
                j * pi - 1e-9);
}

inline double simpson(const std::function<double(double)>& f, double a, double b, int nodes) {
  const int n = nodes - 1;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// Adaptive Simpson with a kink-safe split list.
inline double integrate(const std::function<double(double)>& f, std::vector<double> breaks,
                        int nodes_per_piece = 2001) {
  std::sort(breaks.begin(), breaks.end());
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] > breaks[i]) s += simpson(f, breaks[i], breaks[i + 1], nodes_per_piece);
  }
  return s;
}

// Cyclic Jacobi eigenvalues of a symmetric matrix, sorted nonincreasing.
inline std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30 * std::max(1.0, a.squaredNorm())) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

// Hand-rolled lower Cholesky factor.
inline Eigen::MatrixXd cholesky(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = a(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    l(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

// Inverse of a lower triangular matrix by forward substitution.
inline Eigen::MatrixXd lower_inverse(const Eigen::MatrixXd& l) {
  const Eigen::Index n = l.rows();
  Eigen::MatrixXd inv = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index i = 0; i < n; ++i) {
      double s = i == c ? 1.0 : 0.0;
      for (Eigen::Index k = 0; k < i; ++k) s -= l(i, k) * inv(k, c);
      inv(i, c) = s / l(i, i);
    }
  }
  return inv;
}

// Eigenvalues of A v = lambda B v (A symmetric, B SPD), nonincreasing.
inline std::vector<double> generalized_eigenvalues(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::MatrixXd li = lower_inverse(cholesky(b));
  Eigen::MatrixXd c = li * a * li.transpose();
  c = 0.5 * (c + c.transpose());
  return jacobi_eigenvalues(c);
}

// Number of d-tuples over `values` whose product exceeds threshold * (1 + tie).
inline std::uint64_t brute_count(const std::vector<double>& values, int d, double threshold,
                                 double tie = 1e-12) {
  std::uint64_t count = 0;
  std::function<void(int, double)> rec = [&](int depth, double prod) {
    if (depth == d) {
      if (prod > threshold * (1.0 + tie)) ++count;
      return;
    }
    for (const double v : values) rec(depth + 1, prod * v);
  };
  rec(0, 1.0);
  return count;
}

// All d-fold products, sorted nonincreasing.
inline std::vector<double> all_products(const std::vector<double>& values, int d) {
  std::vector<double> out{1.0};
  for (int k = 0; k < d; ++k) {
    std::vector<double> next;
    for (const double p : out)
      for (const double v : values) next.push_back(p * v);
    out.swap(next);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace oracle
