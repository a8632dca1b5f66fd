#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ibc/errors.hpp"
#include "ibc/root_eigensolver.hpp"
#include "oracles.hpp"

using namespace ibc;
using std::numbers::pi;

TEST_CASE("solve_cot_root agrees with plain bisection and frozen values") {
  CHECK(solve_cot_root(1) == doctest::Approx(oracle::kAlpha1).epsilon(1e-14));
  CHECK(solve_cot_root(2) == doctest::Approx(oracle::kAlpha2).epsilon(1e-14));
  for (const int j : {1, 2, 3, 7, 50, 1000, 100000}) {
    const double a = solve_cot_root(j);
    CHECK(std::abs(a - oracle::cot_root(j)) <= 1e-12 * std::max(1.0, a));
    CHECK(a > (j - 1) * pi);
    CHECK(a < j * pi);
  }
  CHECK_THROWS_AS(solve_cot_root(0), InvalidParameter);
}

TEST_CASE("min-kernel eigenvalues") {
  const double a1 = solve_cot_root(1), a2 = solve_cot_root(2);
  CHECK(std::abs(1.0 / (a1 * a1) - 1.35103388) <= 1e-7);
  CHECK(std::abs(1.0 / (a2 * a2) - 0.08521617) <= 1e-7);
  const EigenSequence s = sobolev_min_eigenvalues(3);
  CHECK(s[0] == doctest::Approx(oracle::kLambda1).epsilon(1e-14));
  CHECK(s[1] == doctest::Approx(oracle::kLambda2).epsilon(1e-13));
  CHECK(s[2] == doctest::Approx(oracle::kLambda3).epsilon(1e-13));
  CHECK(s.exact_decay() == 2.0);
  CHECK(s.source() == SpectrumSource::AnalyticRule);
}

TEST_CASE("min-kernel lambda_j pi^2 j^2 approaches 1 from above") {
  const EigenSequence s = sobolev_min_eigenvalues(400);
  const double p50 = s[49] * pi * pi * 50 * 50;
  CHECK(p50 == doctest::Approx(oracle::kLambda50Scaled).epsilon(1e-12));
  double prev = 1e9;
  for (const int j : {10, 50, 100, 200, 400}) {
    const double p = s[static_cast<std::size_t>(j - 1)] * pi * pi * j * j;
    CHECK(p > 1.0);
    CHECK(p < prev);
    prev = p;
  }
  CHECK(prev < 1.011);
}

TEST_CASE("min-kernel eigenfunctions are F-orthonormal") {
  // <f, h>_F = f(0) h(0) + int f' h'.
  for (int j = 1; j <= 4; ++j) {
    for (int k = j; k <= 4; ++k) {
      const Eigenpair ej = sobolev_min_eigenpair(j), ek = sobolev_min_eigenpair(k);
      const double ip = ej.eigenfunction(0) * ek.eigenfunction(0) +
                        oracle::simpson([&](double x) {
                          return ej.eigenfunction.derivative(x) * ek.eigenfunction.derivative(x);
                        }, 0.0, 1.0, 4001);
      CHECK(ip == doctest::Approx(j == k ? 1.0 : 0.0).epsilon(1e-9).scale(1.0));
    }
  }
  const Eigenpair e1 = sobolev_min_eigenpair(1);
  CHECK(e1.eigenfunction.amplitude == doctest::Approx(oracle::kBeta1).epsilon(1e-13));
}

// int_0^1 K(x, y) eta(y) dy = lambda eta(x), checked at a few x.
static void check_integral_equation(const KernelSpec& spec, const Eigenpair& e, double tol) {
  for (const double x : {0.0, 0.17, 0.5, 0.83, 1.0}) {
    const double lhs = oracle::integrate(
        [&](double y) { return kernel_eval(spec, x, y) * e.eigenfunction(y); }, {0.0, x, 1.0}, 4001);
    CHECK(lhs == doctest::Approx(e.value * e.eigenfunction(x)).epsilon(tol).scale(1.0));
  }
}

TEST_CASE("analytic eigenpairs solve the integral equation") {
  for (int j = 1; j <= 4; ++j) {
    check_integral_equation(KernelSpec::sobolev_min(), sobolev_min_eigenpair(j), 1e-9);
    check_integral_equation(KernelSpec::sobolev_cosh(), sobolev_cosh_eigenpair(j), 1e-9);
  }
  for (int j = 1; j <= 5; ++j) {
    check_integral_equation(KernelSpec::korobov(1.0, 0.5), korobov_eigenpair(1.0, 0.5, j), 1e-9);
    check_integral_equation(KernelSpec::korobov(1.5, 0.8), korobov_eigenpair(1.5, 0.8, j), 1e-9);
  }
}

TEST_CASE("eigenfunction L2 norm squared equals the eigenvalue") {
  // ||S eta||^2 = <W eta, eta>_F = lambda for F-normalized eta.
  const auto l2 = [](const Eigenpair& e) {
    return oracle::simpson([&](double x) { return e.eigenfunction(x) * e.eigenfunction(x); }, 0, 1, 4001);
  };
  for (int j = 1; j <= 5; ++j) {
    CHECK(l2(sobolev_min_eigenpair(j)) == doctest::Approx(sobolev_min_eigenpair(j).value).epsilon(1e-10));
    CHECK(l2(sobolev_cosh_eigenpair(j)) == doctest::Approx(sobolev_cosh_eigenpair(j).value).epsilon(1e-10));
    const Eigenpair k = korobov_eigenpair(0.75, 0.4, j);
    CHECK(l2(k) == doctest::Approx(k.value).epsilon(1e-10));
  }
}

TEST_CASE("cosh-kernel eigenvalues") {
  const EigenSequence s = sobolev_cosh_eigenvalues(3);
  CHECK(s[0] == 1.0);
  CHECK(s[1] == doctest::Approx(oracle::kCosh2).epsilon(1e-15));
  CHECK(std::abs(s[1] - 0.091999668) <= 1e-9);
  CHECK(s[2] == doctest::Approx(oracle::kCosh3).epsilon(1e-15));
  CHECK(s.exact_decay() == 2.0);
}

TEST_CASE("Korobov eigenvalues and ordering") {
  const EigenSequence a = korobov_eigenvalues(2.0, 0.5, 3);
  CHECK(a[0] == 1.0);
  CHECK(a[1] == 0.5);
  CHECK(a[2] == 0.5);
  const EigenSequence b = korobov_eigenvalues(1.0, 1.0, 3);
  CHECK(b[0] == 1.0);
  CHECK(b[1] == 1.0);
  const EigenSequence c = korobov_eigenvalues(1.0, 0.5, 40);
  CHECK(c[3] == doctest::Approx(0.125));
  CHECK(c[4] == doctest::Approx(0.125));
  // Brute-force sort of the closed-form values.
  std::vector<double> brute{1.0};
  for (int k = 1; k <= 40; ++k) {
    brute.push_back(0.5 / (k * k));
    brute.push_back(0.5 / (k * k));
  }
  std::sort(brute.begin(), brute.end(), std::greater<>());
  for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == doctest::Approx(brute[j]).epsilon(1e-15));
  CHECK(c.exact_decay() == 2.0);
  CHECK(korobov_eigenvalues(0.75, 0.5, 2).exact_decay() == 1.5);
  CHECK_THROWS_AS(korobov_eigenvalues(0.4, 0.5, 2), InvalidParameter);
}

TEST_CASE("family_spectrum and multiplicity") {
  const FamilySpectrum k = family_spectrum(KernelSpec::korobov(1.0, 1.0), 5);
  CHECK(k.multiplicity_of_top == 3);
  CHECK(k.eigensequence[0] == k.eigenpairs[0].value);
  CHECK(family_spectrum(KernelSpec::sobolev_min(), 3).multiplicity_of_top == 1);
  CHECK_THROWS_AS(family_spectrum(KernelSpec::brownian_min(), 3), InvalidParameter);
  CHECK_FALSE(has_analytic_spectrum(KernelSpec::sobolev_distance(0.3)));
  const std::vector<double> v{2.0, 2.0 * (1 - 1e-14), 1.0};
  CHECK(top_multiplicity(v) == 2);
}

TEST_CASE("analytic_eigenvalues_down_to stops at the first value below the ratio") {
  const EigenSequence s = analytic_eigenvalues_down_to(KernelSpec::sobolev_min(), 0.01);
  const double cut = 0.01 * s.lambda1();
  CHECK(s[s.size() - 1] <= cut);
  for (std::size_t j = 0; j + 1 < s.size(); ++j) CHECK(s[j] > cut);
  // Korobov lists both members of a tied pair.
  const EigenSequence k = analytic_eigenvalues_down_to(KernelSpec::korobov(1.0, 0.5), 0.2);
  CHECK(k.size() == 5);
  CHECK_THROWS_AS(analytic_eigenvalues_down_to(KernelSpec::korobov(0.51, 1.0), 1e-12, 1000),
                  ResourceLimit);
}
