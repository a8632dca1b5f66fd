#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "ibc/spectra.hpp"

namespace ibc {

enum class InfoClass { All, Std };

/// (eps, d, information class) with eps in (0, 1) and d >= 1.
class ComplexityQuery {
 public:
  /// Throws InvalidParameter when eps is outside (0, 1) or d < 1.
  ComplexityQuery(double eps, int d, InfoClass info_class = InfoClass::All);

  double eps() const noexcept { return eps_; }
  int d() const noexcept { return d_; }
  InfoClass info_class() const noexcept { return info_class_; }

 private:
  double eps_;
  int d_;
  InfoClass info_class_;
};

enum class CountMethod { DirectEnum, DfsMultiset, Formula };

/// Largest representable count; larger counts saturate here.
inline constexpr std::uint64_t kCountSaturation = 0x7fff'ffff'ffff'ffffULL;

struct ComplexityResult {
  /// n(eps, S_d, Lambda^all) exactly, or kCountSaturation when `saturated`.
  /// For Lambda^std this is the Lambda^all value, a lower bound only.
  std::uint64_t count = 0;
  bool saturated = false;
  bool lower_bound_only = false;
  /// Number of univariate eigenvalues that can appear in a counted tuple.
  std::size_t truncation_index = 0;
  double tie_tolerance = 0.0;
  CountMethod method = CountMethod::DfsMultiset;
};

/// Number of index tuples (j_1..j_d) with prod lambda_{j_k} > eps^2 lambda_1^d,
/// where products within relative kRelTie of the threshold count as equal (not
/// exceeding). Works on weights w_j = ln(lambda_1 / lambda_j) and a depth-first
/// search over nondecreasing index multisets with multinomial multiplicities.
///
/// Throws PreconditionError for a Std query, TruncationError when a
/// non-exhaustive list ends above the threshold.
ComplexityResult count_info_complexity_all(const EigenSequence& eigs, const ComplexityQuery& query);

/// n(eps, S_d, Lambda) for either class: exact for All, the All count flagged
/// as a lower bound for Std (e_n(S, std) >= e_n(S, all)).
ComplexityResult information_complexity(const EigenSequence& eigs, const ComplexityQuery& query);

/// Literal enumeration of all d-tuples over the truncated list, products
/// formed directly. Requires d <= 4 and truncation_index^d <= 1e8, otherwise
/// ResourceLimit.
ComplexityResult brute_force_count(const EigenSequence& eigs, const ComplexityQuery& query);

/// 1-based inclusive index range.
struct IndexWindow {
  std::size_t first = 20;
  std::size_t last = 200;
};

/// Minus the least-squares slope of ln(lambda_n) against ln(n) over the
/// window. When eigs.exact_decay() is set, prefer that value; this estimator
/// exists to cross-check it. Throws InvalidInput for windows shorter than 8,
/// past the end of the list, or containing a zero eigenvalue.
double estimate_decay(const EigenSequence& eigs, IndexWindow window = {});

/// Exponent of quasi-polynomial tractability:
///   t* = max(2/decay, 2/ln(lambda1/lambda2)), and 0 when lambda2 = 0.
/// Throws PreconditionError unless 0 <= lambda2 < lambda1 (within kRelTie)
/// and decay > 0.
double qpt_exponent(double lambda1, double lambda2, double decay);

/// True iff eta is NOT of the form a (1 + min(., t)) for any real a and t in
/// [0, 1]. For each t on a 1001-point grid the only candidate is a = eta(0);
/// the candidate is affine with slope a on [0, t] and constant a (1 + t) on
/// [t, 1]. A t survives when eta matches it to 1e-9 at 1001 test points.
bool check_goodcase_sobolev_min(const std::function<double(double)>& eta);
bool check_goodcase_sobolev_min(const Eigenpair& eta1);

enum class AllClassification { Curse, QptNotPt, QptTrivialFunctional, NotQpt };
enum class StdClassification { Curse, Unknown, Trivial };

std::string_view to_string(AllClassification c);
std::string_view to_string(StdClassification c);

struct TractabilityReport {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double decay = 0.0;  ///< may be +infinity
  std::optional<double> qpt_exponent;
  AllClassification classification_all = AllClassification::Curse;
  StdClassification classification_std = StdClassification::Unknown;
  std::optional<bool> goodcase_holds;  ///< nullopt: not applicable
};

/// Tractability of the unweighted tensor product problem from the univariate
/// lambda1, lambda2, decay and (optionally) the kernel-translate condition:
///  - lambda2 == lambda1 (within kRelTie): curse for both classes;
///  - lambda2 == 0: trivial functional for All (t* = 0);
///  - 0 < lambda2 < lambda1: QPT and not PT for All iff decay > 0;
///  - lambda2 < lambda1 and goodcase: curse for Std; goodcase false and
///    lambda2 == 0: trivial for Std; otherwise Std is Unknown.
/// Throws PreconditionError for lambda2 > lambda1 or lambda1 <= 0.
TractabilityReport classify(double lambda1, double lambda2, double decay,
                            std::optional<bool> goodcase);

/// classify() fed from an analytic family: exact lambda1, lambda2, decay and,
/// for sobolev-min, the goodcase check on eta1.
TractabilityReport classify_family(const KernelSpec& spec);

/// e_n(S_d, Lambda^all) = sqrt of the (n+1)-th largest product eigenvalue;
/// n = 0 gives lambda1^(d/2). Throws TruncationError when the list is too
/// short to resolve rank n+1.
double en_all(const EigenSequence& eigs, int d, std::uint64_t n);

struct InitialErrors {
  double integration;    ///< e0(INT_d) = (4/3)^(d/2)
  double approximation;  ///< e0(APP_d) = lambda1^(d/2)
  double ratio;          ///< approximation / integration
};

/// Initial errors of integration and L2 approximation on the min-kernel
/// Sobolev space in dimension d.
InitialErrors initial_error_ratio_integration(int d);

}  // namespace ibc
