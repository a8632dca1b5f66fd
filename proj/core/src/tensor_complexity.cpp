#include "ibc/tensor_complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ibc/errors.hpp"
#include "ibc/root_eigensolver.hpp"
#include "ibc/tolerances.hpp"

namespace ibc {

ComplexityQuery::ComplexityQuery(double eps, int d, InfoClass info_class)
    : eps_(eps), d_(d), info_class_(info_class) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidParameter("eps must lie in (0, 1)");
  if (d < 1) throw InvalidParameter("dimension d must be >= 1");
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a > kCountSaturation - b) ? kCountSaturation : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCountSaturation / b) return kCountSaturation;
  return a * b;
}

__extension__ using u128 = unsigned __int128;

// C(n, k), saturating. The partial products C(n, 1..k) with k <= n/2 are
// increasing, so once saturated the final value is saturated too.
std::uint64_t binomial(int n, int k) {
  k = std::min(k, n - k);
  if (k < 0) return 0;
  u128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (c > kCountSaturation) return kCountSaturation;
  }
  return static_cast<std::uint64_t>(c);
}

// Log-space budget: a tuple is counted iff sum of weights < budget.
double log_budget(double eps) { return -2.0 * std::log(eps) - std::log1p(kRelTie); }

struct Weights {
  std::vector<double> w;  // nondecreasing, w[0] == 0
};

// Weights of the univariate eigenvalues strictly inside the budget.
Weights participating_weights(const EigenSequence& eigs, double budget) {
  Weights out;
  const double l1 = eigs.lambda1();
  for (const double v : eigs.values()) {
    if (v <= 0.0) break;
    const double w = std::log(l1 / v);
    if (!(w < budget)) break;
    out.w.push_back(w);
  }
  if (!eigs.is_exhaustive() && out.w.size() == eigs.size()) {
    throw TruncationError(
        "eigenvalue list ends above the counting threshold; supply more eigenvalues",
        eigs.size() + 1);
  }
  return out;
}

class MultisetCounter {
 public:
  explicit MultisetCounter(const std::vector<double>& w) : w_(w) {}

  // Ordered tuples filling `remaining` slots from indices >= i with weight
  // sum < residual.
  std::uint64_t count(std::size_t i, int remaining, double residual) {
    if (remaining == 0) return residual > 0.0 ? 1 : 0;
    if (i == w_.size()) return 0;
    if (residual - remaining * w_[i] <= 0.0) return 0;
    if (i + 1 == w_.size()) return 1;  // every slot takes index i
    std::uint64_t total = 0;
    for (int c = 0; c <= remaining; ++c) {
      const double left = residual - c * w_[i];
      if (c > 0 && left <= 0.0) break;
      const std::uint64_t sub = count(i + 1, remaining - c, left);
      if (sub == 0) continue;
      total = sat_add(total, sat_mul(binomial(remaining, c), sub));
      if (total == kCountSaturation) return total;
    }
    return total;
  }

 private:
  const std::vector<double>& w_;
};

// Product levels (weight sum, multiplicity) for all tuples with sum <= limit.
class LevelCollector {
 public:
  LevelCollector(const std::vector<double>& w, double limit, std::size_t max_levels)
      : w_(w), limit_(limit), max_levels_(max_levels) {}

  void collect(std::size_t i, int remaining, double sum, std::uint64_t mult) {
    if (remaining == 0) {
      if (levels_.size() >= max_levels_) {
        throw ResourceLimit("en_all: too many product levels to enumerate");
      }
      levels_.emplace_back(sum, mult);
      return;
    }
    if (i == w_.size()) return;
    if (sum + remaining * w_[i] > limit_) return;
    for (int c = 0; c <= remaining; ++c) {
      const double next = sum + c * w_[i];
      if (next > limit_) break;
      collect(i + 1, remaining - c, next, sat_mul(mult, binomial(remaining, c)));
    }
  }

  std::vector<std::pair<double, std::uint64_t>>& levels() { return levels_; }

 private:
  const std::vector<double>& w_;
  double limit_;
  std::size_t max_levels_;
  std::vector<std::pair<double, std::uint64_t>> levels_;
};

}  // namespace

ComplexityResult count_info_complexity_all(const EigenSequence& eigs, const ComplexityQuery& query) {
  if (query.info_class() != InfoClass::All) {
    throw PreconditionError("count_info_complexity_all: query must use the class Lambda^all");
  }
  const double budget = log_budget(query.eps());
  const Weights weights = participating_weights(eigs, budget);

  ComplexityResult result;
  result.truncation_index = weights.w.size();
  result.tie_tolerance = kRelTie;
  if (weights.w.size() == 1) {
    // Only lambda1 clears the threshold: the single tuple (1, ..., 1).
    result.count = 1;
    result.method = CountMethod::Formula;
    return result;
  }
  MultisetCounter counter(weights.w);
  result.count = counter.count(0, query.d(), budget);
  result.saturated = result.count == kCountSaturation;
  result.method = CountMethod::DfsMultiset;
  return result;
}

ComplexityResult information_complexity(const EigenSequence& eigs, const ComplexityQuery& query) {
  ComplexityResult r =
      count_info_complexity_all(eigs, ComplexityQuery(query.eps(), query.d(), InfoClass::All));
  r.lower_bound_only = query.info_class() == InfoClass::Std;
  return r;
}

ComplexityResult brute_force_count(const EigenSequence& eigs, const ComplexityQuery& query) {
  const int d = query.d();
  if (d > 4) throw ResourceLimit("brute_force_count: d must be <= 4");
  const double l1 = eigs.lambda1();
  const double eps2 = query.eps() * query.eps();

  std::vector<double> lam;
  for (const double v : eigs.values()) {
    if (!(v > eps2 * l1 * (1.0 + kRelTie))) break;
    lam.push_back(v);
  }
  if (!eigs.is_exhaustive() && lam.size() == eigs.size()) {
    throw TruncationError("brute_force_count: eigenvalue list too short", eigs.size() + 1);
  }
  const double cells = std::pow(static_cast<double>(lam.size()), d);
  if (cells > 1e8) throw ResourceLimit("brute_force_count: more than 1e8 tuples");

  const double threshold = eps2 * std::pow(l1, d) * (1.0 + kRelTie);
  const std::size_t t = lam.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  std::uint64_t count = 0;
  while (true) {
    double product = 1.0;
    for (const auto j : idx) product *= lam[j];
    if (product > threshold) ++count;
    int k = d - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == t) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  ComplexityResult r;
  r.count = count;
  r.truncation_index = t;
  r.tie_tolerance = kRelTie;
  r.method = CountMethod::DirectEnum;
  return r;
}

double estimate_decay(const EigenSequence& eigs, IndexWindow window) {
  if (window.first < 1 || window.last < window.first || window.last - window.first + 1 < 8) {
    throw InvalidInput("estimate_decay: window must hold at least 8 indices");
  }
  if (window.last > eigs.size()) throw InvalidInput("estimate_decay: window past end of list");
  const auto n = static_cast<double>(window.last - window.first + 1);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t j = window.first; j <= window.last; ++j) {
    const double v = eigs[j - 1];
    if (!(v > 0.0)) throw InvalidInput("estimate_decay: zero eigenvalue in window");
    const double x = std::log(static_cast<double>(j));
    const double y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return -slope;
}

double qpt_exponent(double lambda1, double lambda2, double decay) {
  if (!(lambda1 > 0.0)) throw PreconditionError("qpt_exponent: lambda1 must be positive");
  if (!(lambda2 >= 0.0)) throw PreconditionError("qpt_exponent: lambda2 must be nonnegative");
  if (lambda2 >= lambda1 * (1.0 - kRelTie)) {
    throw PreconditionError("qpt_exponent: lambda2 == lambda1 is the curse regime");
  }
  if (lambda2 == 0.0) return 0.0;
  if (!(decay > 0.0)) throw PreconditionError("qpt_exponent: decay must be positive");
  return std::max(2.0 / decay, 2.0 / std::log(lambda1 / lambda2));
}

bool check_goodcase_sobolev_min(const std::function<double(double)>& eta) {
  constexpr int kGrid = 1000;
  constexpr double kShapeTol = 1e-9;
  std::vector<double> values(kGrid + 1);
  for (int k = 0; k <= kGrid; ++k) values[static_cast<std::size_t>(k)] = eta(k / double(kGrid));
  const double a = values[0];
  for (int ti = 0; ti <= kGrid; ++ti) {
    const double t = ti / double(kGrid);
    bool matches = true;
    for (int k = 0; k <= kGrid && matches; ++k) {
      const double x = k / double(kGrid);
      matches = std::abs(values[static_cast<std::size_t>(k)] - a * (1.0 + std::min(x, t))) <=
                kShapeTol;
    }
    if (matches) return false;
  }
  return true;
}

bool check_goodcase_sobolev_min(const Eigenpair& eta1) {
  return check_goodcase_sobolev_min([&](double x) { return eta1.eigenfunction(x); });
}

std::string_view to_string(AllClassification c) {
  switch (c) {
    case AllClassification::Curse: return "curse";
    case AllClassification::QptNotPt: return "qpt-not-pt";
    case AllClassification::QptTrivialFunctional: return "qpt-trivial-functional";
    case AllClassification::NotQpt: return "not-qpt";
  }
  return "?";
}

std::string_view to_string(StdClassification c) {
  switch (c) {
    case StdClassification::Curse: return "curse";
    case StdClassification::Unknown: return "unknown";
    case StdClassification::Trivial: return "trivial";
  }
  return "?";
}

TractabilityReport classify(double lambda1, double lambda2, double decay,
                            std::optional<bool> goodcase) {
  if (!(lambda1 > 0.0)) throw PreconditionError("classify: lambda1 must be positive");
  if (!(lambda2 >= 0.0)) throw PreconditionError("classify: lambda2 must be nonnegative");
  const bool tied = std::abs(lambda2 - lambda1) <= kRelTie * lambda1;
  if (lambda2 > lambda1 && !tied) throw PreconditionError("classify: lambda2 exceeds lambda1");
  if (!(decay >= 0.0)) throw PreconditionError("classify: decay must be nonnegative");

  TractabilityReport r;
  r.lambda1 = lambda1;
  r.lambda2 = lambda2;
  r.decay = decay;
  r.goodcase_holds = goodcase;

  if (tied) {
    r.classification_all = AllClassification::Curse;
    r.classification_std = StdClassification::Curse;
    return r;
  }
  if (lambda2 == 0.0) {
    r.classification_all = AllClassification::QptTrivialFunctional;
    r.qpt_exponent = 0.0;
  } else if (decay > 0.0) {
    r.classification_all = AllClassification::QptNotPt;
    r.qpt_exponent = qpt_exponent(lambda1, lambda2, decay);
  } else {
    r.classification_all = AllClassification::NotQpt;
  }

  if (goodcase.has_value() && *goodcase) {
    r.classification_std = StdClassification::Curse;
  } else if (goodcase.has_value() && lambda2 == 0.0) {
    // eta1 is a kernel section and S_d is a multiple of point evaluation.
    r.classification_std = StdClassification::Trivial;
  } else {
    r.classification_std = StdClassification::Unknown;
  }
  return r;
}

TractabilityReport classify_family(const KernelSpec& spec) {
  const FamilySpectrum fs = family_spectrum(spec, 2);
  std::optional<bool> goodcase;
  if (spec.family() == KernelFamily::SobolevMin) {
    goodcase = check_goodcase_sobolev_min(fs.eigenpairs.front());
  }
  const double decay = fs.eigensequence.exact_decay().value_or(0.0);
  return classify(fs.eigensequence.lambda1(), fs.eigensequence[1], decay, goodcase);
}

double en_all(const EigenSequence& eigs, int d, std::uint64_t n) {
  if (d < 1) throw InvalidParameter("en_all: d must be >= 1");
  const double l1 = eigs.lambda1();
  if (n == 0) return std::pow(l1, 0.5 * d);

  std::vector<double> w;
  for (const double v : eigs.values()) {
    if (v <= 0.0) break;
    w.push_back(std::log(l1 / v));
  }
  const bool has_zero_tail = eigs.is_exhaustive() || w.size() < eigs.size();
  const double max_sum = d * w.back();

  for (double limit = std::max(1.0, w.size() > 1 ? w[1] : 1.0);; limit *= 2.0) {
    // Every univariate weight <= limit must be listed to trust the levels.
    if (!has_zero_tail && w.back() <= limit) {
      throw TruncationError("en_all: eigenvalue list too short to resolve the requested rank",
                            0);
    }
    std::vector<double> usable;
    for (const double x : w) {
      if (x > limit) break;
      usable.push_back(x);
    }
    LevelCollector collector(usable, limit, 20'000'000);
    collector.collect(0, d, 0.0, 1);
    auto& levels = collector.levels();
    std::uint64_t total = 0;
    for (const auto& [s, m] : levels) total = sat_add(total, m);
    const bool everything = has_zero_tail && limit >= max_sum;
    if (total > n || everything) {
      std::sort(levels.begin(), levels.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::uint64_t seen = 0;
      for (const auto& [s, m] : levels) {
        seen = sat_add(seen, m);
        if (seen > n) return std::sqrt(std::pow(l1, d) * std::exp(-s));
      }
      return 0.0;  // rank beyond the number of nonzero product eigenvalues
    }
  }
}

InitialErrors initial_error_ratio_integration(int d) {
  if (d < 1) throw InvalidParameter("initial_error_ratio_integration: d must be >= 1");
  const double lambda1 = sobolev_min_eigenpair(1).value;
  const double integration = std::pow(4.0 / 3.0, 0.5 * d);
  const double approximation = std::pow(lambda1, 0.5 * d);
  return InitialErrors{integration, approximation, approximation / integration};
}

}  // namespace ibc
