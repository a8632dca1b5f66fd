#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "ibc/errors.hpp"
#include "ibc/nystrom.hpp"
#include "ibc/root_eigensolver.hpp"
#include "oracles.hpp"

using namespace ibc;

TEST_CASE("QuadratureGrid validation") {
  CHECK_NOTHROW(QuadratureGrid({0.25, 0.75}, {0.5, 0.5}));
  CHECK_THROWS_AS(QuadratureGrid({0.25, 0.75}, {0.5}), InvalidInput);
  CHECK_THROWS_AS(QuadratureGrid({0.75, 0.25}, {0.5, 0.5}), InvalidInput);
  CHECK_THROWS_AS(QuadratureGrid({0.25, 1.5}, {0.5, 0.5}), InvalidInput);
  CHECK_THROWS_AS(QuadratureGrid({0.25, 0.75}, {0.6, 0.6}), InvalidInput);
  CHECK_THROWS_AS(QuadratureGrid({0.25, 0.75}, {1.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(QuadratureGrid::midpoint(0), InvalidParameter);
  const QuadratureGrid g = QuadratureGrid::midpoint(4);
  CHECK(g.size() == 4);
  CHECK(g.nodes()[0] == 0.125);
  CHECK(g.weights()[3] == 0.25);
}

TEST_CASE("Nystrom matrix matches an independent Jacobi spectrum on a small grid") {
  const auto grid = QuadratureGrid::midpoint(12);
  const Eigen::MatrixXd m = nystrom_matrix(KernelSpec::sobolev_min(), grid);
  CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
  const auto ref = oracle::jacobi_eigenvalues(m);
  const EigenSequence got = nystrom_spectrum(KernelSpec::sobolev_min(), grid, 12);
  for (std::size_t j = 0; j < 12; ++j) CHECK(got[j] == doctest::Approx(ref[j]).epsilon(1e-12).scale(1e-12));
  CHECK(got.source() == SpectrumSource::Numeric);
}

TEST_CASE("Nystrom spectra agree with the analytic families") {
  const auto big = QuadratureGrid::midpoint(2000);
  const EigenSequence sm = nystrom_spectrum(KernelSpec::sobolev_min(), big, 2);
  CHECK(sm[0] == doctest::Approx(oracle::kLambda1).epsilon(1e-3));
  CHECK(sm[1] == doctest::Approx(oracle::kLambda2).epsilon(1e-3));
  const EigenSequence ch = nystrom_spectrum(KernelSpec::sobolev_cosh(), big, 2);
  CHECK(ch[0] == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(ch[1] == doctest::Approx(oracle::kCosh2).epsilon(1e-3));
  const EigenSequence ko = nystrom_spectrum(KernelSpec::korobov(1.0, 0.5), QuadratureGrid::midpoint(512), 3);
  CHECK(ko[0] == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(ko[1] == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(ko[2] == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("Richardson refinement") {
  const std::array<int, 3> sizes{500, 1000, 2000};
  const RefinedSpectrum r = richardson_refine(KernelSpec::sobolev_min(), 2, sizes);
  CHECK(std::abs(r.estimates[0] - 1.35103388) <= 1e-5);
  CHECK(r.levels.size() == 3);
  // Extrapolation beats the finest raw level.
  CHECK(std::abs(r.estimates[1] - oracle::kLambda2) < std::abs(r.levels[2][1] - oracle::kLambda2));

  const std::array<int, 2> coarse{10, 20};
  const RefinedSpectrum c = richardson_refine(KernelSpec::sobolev_min(), 1, coarse);
  CHECK(c.error_estimates[0] > 0.0);

  const RefinedSpectrum ch = richardson_refine(KernelSpec::sobolev_cosh(), 3, sizes);
  CHECK(std::abs(ch.estimates[2] - oracle::kCosh3) <= 1e-5);

  const std::array<int, 1> one{100};
  CHECK_THROWS_AS(richardson_refine(KernelSpec::sobolev_min(), 1, one), InvalidParameter);
  const std::array<int, 2> bad{200, 100};
  CHECK_THROWS_AS(richardson_refine(KernelSpec::sobolev_min(), 1, bad), InvalidParameter);
}

TEST_CASE("nystrom_spectrum argument checks") {
  const auto grid = QuadratureGrid::midpoint(5);
  CHECK_THROWS_AS(nystrom_spectrum(KernelSpec::sobolev_min(), grid, 6), InvalidParameter);
  CHECK_THROWS_AS(nystrom_spectrum(KernelSpec::sobolev_min(), grid, 0), InvalidParameter);
}

TEST_CASE("kernels without closed forms still get a spectrum") {
  // Brownian motion covariance: lambda_j = 1 / ((j - 1/2)^2 pi^2).
  const EigenSequence b = nystrom_spectrum(KernelSpec::brownian_min(), QuadratureGrid::midpoint(1000), 3);
  const double pi = std::numbers::pi;
  for (int j = 1; j <= 3; ++j) {
    CHECK(b[static_cast<std::size_t>(j - 1)] ==
          doctest::Approx(1.0 / ((j - 0.5) * (j - 0.5) * pi * pi)).epsilon(1e-3));
  }
  // At anchor 0 the distance kernel is the min kernel.
  const EigenSequence d = nystrom_spectrum(KernelSpec::sobolev_distance(0.0), QuadratureGrid::midpoint(800), 2);
  CHECK(d[0] == doctest::Approx(oracle::kLambda1).epsilon(1e-3));
}
