#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ibc/errors.hpp"
#include "ibc/root_eigensolver.hpp"
#include "ibc/tensor_complexity.hpp"
#include "oracles.hpp"

using namespace ibc;

namespace {

std::vector<double> as_vector(const EigenSequence& s) { return {s.values().begin(), s.values().end()}; }

std::uint64_t count_all(const EigenSequence& s, double eps, int d) {
  return count_info_complexity_all(s, ComplexityQuery(eps, d)).count;
}

}  // namespace

TEST_CASE("ComplexityQuery validation") {
  CHECK_THROWS_AS(ComplexityQuery(0.0, 1), InvalidParameter);
  CHECK_THROWS_AS(ComplexityQuery(1.0, 1), InvalidParameter);
  CHECK_THROWS_AS(ComplexityQuery(0.5, 0), InvalidParameter);
  const ComplexityQuery q(0.5, 3, InfoClass::Std);
  CHECK(q.info_class() == InfoClass::Std);
  CHECK_THROWS_AS(count_info_complexity_all(sobolev_min_eigenvalues(5), q), PreconditionError);
}

TEST_CASE("counting examples") {
  const EigenSequence k = analytic_eigenvalues_down_to(KernelSpec::korobov(1.0, 0.5), 0.36);
  CHECK(count_all(k, 0.6, 1) == 3);

  const EigenSequence trivial({2.0}, SpectrumSource::UserSupplied, std::nullopt, true);
  for (const int d : {1, 5, 40}) {
    for (const double eps : {0.01, 0.5, 0.99}) {
      const ComplexityResult r = count_info_complexity_all(trivial, ComplexityQuery(eps, d));
      CHECK(r.count == 1);
      CHECK(r.method == CountMethod::Formula);
    }
  }

  // Min-kernel, d = 2, eps = 0.25: brute force over pairs of the univariate list.
  const EigenSequence sm = analytic_eigenvalues_down_to(KernelSpec::sobolev_min(), 0.0625);
  const std::uint64_t expected = oracle::brute_count(as_vector(sm), 2, 0.0625 * sm[0] * sm[0]);
  CHECK(expected == 3);
  CHECK(count_all(sm, 0.25, 2) == expected);
  CHECK(count_info_complexity_all(sm, ComplexityQuery(0.25, 2)).truncation_index == 2);
  CHECK(count_all(sm, 0.25, 1) == 2);
  CHECK(count_all(sm, 0.25, 3) == 4);
}

TEST_CASE("Korobov beta = 1 count is at least 2^d") {
  for (const double eps : {0.1, 0.5, 0.9}) {
    const EigenSequence k = analytic_eigenvalues_down_to(KernelSpec::korobov(1.0, 1.0), eps * eps);
    for (int d = 1; d <= 12; ++d) CHECK(count_all(k, eps, d) >= (std::uint64_t{1} << d));
    CHECK(brute_force_count(k, ComplexityQuery(eps, 3)).count >= 8);
  }
}

TEST_CASE("DFS count equals the independent brute force") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    // Random spectra with deliberate ties.
    std::vector<double> v{1.0};
    const int n = 2 + static_cast<int>(u(rng) * 12);
    for (int i = 0; i < n; ++i) v.push_back(u(rng) < 0.3 ? v.back() : v.back() * (0.3 + 0.7 * u(rng)));
    v.push_back(0.0);
    const EigenSequence s(v, SpectrumSource::UserSupplied, std::nullopt, true);
    const int d = 1 + trial % 4;
    const double eps = 0.1 + 0.8 * u(rng);
    const std::uint64_t expected = oracle::brute_count(v, d, eps * eps);
    CHECK(count_all(s, eps, d) == expected);
    CHECK(brute_force_count(s, ComplexityQuery(eps, d)).count == expected);
  }
}

TEST_CASE("products exactly at the threshold are not counted") {
  // 0.25 * 1 = eps^2 with eps = 0.5: the tuple (2) lies on the boundary.
  const EigenSequence s({1.0, 0.25, 0.0}, SpectrumSource::UserSupplied, std::nullopt, true);
  CHECK(count_all(s, 0.5, 1) == 1);
  CHECK(brute_force_count(s, ComplexityQuery(0.5, 1)).count == 1);
  // 0.5 * 0.5 = 0.25 in d = 2 is also on the boundary.
  const EigenSequence t({1.0, 0.5, 0.0}, SpectrumSource::UserSupplied, std::nullopt, true);
  CHECK(count_all(t, 0.5, 2) == 3);
}

TEST_CASE("truncated lists that end above the threshold are rejected") {
  const EigenSequence s({1.0, 0.9, 0.8}, SpectrumSource::UserSupplied);
  CHECK_THROWS_AS(count_all(s, 0.5, 2), TruncationError);
  CHECK_THROWS_AS(brute_force_count(s, ComplexityQuery(0.5, 2)), TruncationError);
  CHECK_THROWS_AS(brute_force_count(sobolev_min_eigenvalues(50), ComplexityQuery(0.5, 5)), ResourceLimit);
}

TEST_CASE("large dimensions saturate instead of overflowing") {
  const EigenSequence k = analytic_eigenvalues_down_to(KernelSpec::korobov(1.0, 1.0), 0.01);
  const ComplexityResult r = count_info_complexity_all(k, ComplexityQuery(0.1, 60));
  CHECK(r.saturated);
  CHECK(r.count == kCountSaturation);
  const ComplexityResult s = information_complexity(k, ComplexityQuery(0.1, 3, InfoClass::Std));
  CHECK(s.lower_bound_only);
  CHECK(s.count == count_all(k, 0.1, 3));
}

TEST_CASE("estimate_decay") {
  std::vector<double> v;
  for (int j = 1; j <= 120; ++j) v.push_back(1.0 / (double(j) * j));
  const EigenSequence s(v, SpectrumSource::UserSupplied);
  CHECK(estimate_decay(s, {10, 100}) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(estimate_decay(sobolev_min_eigenvalues(200)) - 2.0) <= 0.05);
  CHECK(std::abs(estimate_decay(korobov_eigenvalues(1.5, 0.5, 200), {10, 200}) - 3.0) <= 0.05);
  CHECK_THROWS_AS(estimate_decay(s, {10, 12}), InvalidInput);
  CHECK_THROWS_AS(estimate_decay(s, {10, 121}), InvalidInput);
}

TEST_CASE("qpt_exponent") {
  CHECK(qpt_exponent(1.35103388, 0.08521617, 2.0) == 1.0);
  CHECK(2.0 / std::log(oracle::kLambda1 / oracle::kLambda2) == doctest::Approx(0.7237).epsilon(1e-3));
  CHECK(qpt_exponent(1.0, 0.0, 2.0) == 0.0);
  CHECK(qpt_exponent(1.0, std::exp(-1.0), 2.0) == doctest::Approx(2.0).epsilon(1e-15));
  for (const double alpha : {0.6, 1.0, 2.5}) {
    for (const double beta : {0.01, 0.3, 0.95}) {
      CHECK(qpt_exponent(1.0, beta, 2 * alpha) ==
            doctest::Approx(std::max(1 / alpha, 2 / std::log(1 / beta))).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(qpt_exponent(1.0, 1.0, 2.0), PreconditionError);
  CHECK_THROWS_AS(qpt_exponent(1.0, 0.5, 0.0), PreconditionError);
}

TEST_CASE("goodcase checker") {
  CHECK(check_goodcase_sobolev_min(sobolev_min_eigenpair(1)));
  CHECK(check_goodcase_sobolev_min(sobolev_min_eigenpair(2)));
  for (const double t : {0.0, 0.25, 0.5, 1.0, 0.731}) {
    const double norm = std::sqrt(1.0 + t);  // ||1 + min(., t)||_F^2 = 1 + t
    CHECK_FALSE(check_goodcase_sobolev_min([&](double x) { return (1.0 + std::min(x, t)) / norm; }));
  }
  CHECK_FALSE(check_goodcase_sobolev_min([](double) { return 1.0; }));
  CHECK(check_goodcase_sobolev_min([](double x) { return 1.0 + x * x; }));
}

TEST_CASE("classification") {
  const TractabilityReport sm = classify_family(KernelSpec::sobolev_min());
  CHECK(sm.classification_all == AllClassification::QptNotPt);
  CHECK(sm.qpt_exponent == 1.0);
  CHECK(sm.classification_std == StdClassification::Curse);
  CHECK(sm.goodcase_holds == true);

  const TractabilityReport k1 = classify_family(KernelSpec::korobov(1.0, 1.0));
  CHECK(k1.classification_all == AllClassification::Curse);
  CHECK(k1.classification_std == StdClassification::Curse);

  const TractabilityReport k = classify_family(KernelSpec::korobov(2.0, 0.1));
  CHECK(k.classification_all == AllClassification::QptNotPt);
  CHECK(*k.qpt_exponent == doctest::Approx(std::max(0.5, 2 / std::log(10.0))));
  CHECK(k.classification_std == StdClassification::Unknown);

  const TractabilityReport zero = classify(1.0, 0.0, 0.0, false);
  CHECK(zero.classification_all == AllClassification::QptTrivialFunctional);
  CHECK(zero.qpt_exponent == 0.0);
  CHECK(zero.classification_std == StdClassification::Trivial);
  CHECK(classify(1.0, 0.0, 0.0, std::nullopt).classification_std == StdClassification::Unknown);
  CHECK(classify(1.0, 0.5, 0.0, std::nullopt).classification_all == AllClassification::NotQpt);
  CHECK_THROWS_AS(classify(1.0, 2.0, 1.0, std::nullopt), PreconditionError);
  CHECK(to_string(AllClassification::QptNotPt) == "qpt-not-pt");
}

TEST_CASE("en_all") {
  const EigenSequence sm = sobolev_min_eigenvalues(50);
  CHECK(en_all(sm, 4, 0) == doctest::Approx(oracle::kLambda1Squared).epsilon(1e-14));
  CHECK(en_all(korobov_eigenvalues(1.3, 0.4, 10), 7, 0) == 1.0);
  CHECK(en_all(analytic_eigenvalues_down_to(KernelSpec::korobov(1.0, 1.0), 0.01), 2, 3) ==
        doctest::Approx(1.0));

  // Against sorted products of a finite spectrum.
  const std::vector<double> v{1.0, 0.6, 0.6, 0.2, 0.05};
  const EigenSequence f(v, SpectrumSource::UserSupplied, std::nullopt, true);
  const auto products = oracle::all_products(v, 3);
  for (std::uint64_t n = 0; n < products.size(); n += 7) {
    CHECK(en_all(f, 3, n) == doctest::Approx(std::sqrt(products[n])).epsilon(1e-12));
  }
  CHECK(en_all(f, 3, products.size()) == 0.0);
  CHECK_THROWS_AS(en_all(EigenSequence({1.0, 0.5}, SpectrumSource::UserSupplied), 3, 5), TruncationError);
}

TEST_CASE("initial errors of integration and approximation") {
  const InitialErrors e1 = initial_error_ratio_integration(1);
  CHECK(e1.integration == doctest::Approx(oracle::kSqrtFourThirds).epsilon(1e-15));
  const InitialErrors e2 = initial_error_ratio_integration(2);
  CHECK(e2.ratio == doctest::Approx(oracle::kRatioBase).epsilon(1e-14));
  CHECK(e2.approximation == doctest::Approx(oracle::kLambda1).epsilon(1e-14));
  CHECK_THROWS_AS(initial_error_ratio_integration(0), InvalidParameter);
}
