#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace ibc {

/// Finite-dimensional RKHS model on m domain points.
///
/// F is spanned by the kernel sections K(., p_i); an element f is stored by
/// its kernel-basis coefficients c, so f(p_i) = (K c)_i and
/// <f, h>_F = c^T K c_h with K = gram_F. operator_S maps coefficients to
/// G-coordinates and gram_G is the G inner product.
class DiscreteProblem {
 public:
  /// Throws DimensionError on shape mismatch and InvalidInput when a Gram
  /// matrix is not symmetric positive definite (smallest eigenvalue must exceed
  /// 1e-12 times the largest) or S is zero.
  DiscreteProblem(Eigen::MatrixXd gram_F, Eigen::MatrixXd operator_S, Eigen::MatrixXd gram_G,
                  std::vector<Eigen::VectorXd> points = {});

  Eigen::Index m() const noexcept { return gram_F_.rows(); }
  Eigen::Index k() const noexcept { return gram_G_.rows(); }
  const Eigen::MatrixXd& gram_F() const noexcept { return gram_F_; }
  const Eigen::MatrixXd& operator_S() const noexcept { return operator_S_; }
  const Eigen::MatrixXd& gram_G() const noexcept { return gram_G_; }
  /// Coordinates of each domain point (labels i when built from a file).
  const std::vector<Eigen::VectorXd>& points() const noexcept { return points_; }

  Eigen::VectorXd function_values(const Eigen::VectorXd& coeffs) const { return gram_F_ * coeffs; }
  double inner_F(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  double norm_F(const Eigen::VectorXd& a) const;
  double inner_G(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  double norm_G(const Eigen::VectorXd& a) const;

  /// Coefficients of S*g, i.e. K^-1 S^T M g.
  Eigen::VectorXd adjoint(const Eigen::VectorXd& g) const;
  /// S^T M S, the matrix of <Sf, Sh>_G in coefficient space.
  Eigen::MatrixXd w_form() const;

 private:
  Eigen::MatrixXd gram_F_;
  Eigen::MatrixXd operator_S_;
  Eigen::MatrixXd gram_G_;
  std::vector<Eigen::VectorXd> points_;
};

/// Spectrum of W = S*S in the F inner product.
struct WSpectrum {
  Eigen::VectorXd eigenvalues;   ///< nonincreasing, length m
  Eigen::MatrixXd eigenvectors;  ///< F-orthonormal columns, same order
  int multiplicity = 1;          ///< of eigenvalues(0), within kRelTie

  double lambda1() const { return eigenvalues(0); }
  Eigen::VectorXd eta1() const { return eigenvectors.col(0); }
  /// F-orthonormal basis of the lambda1 eigenspace.
  Eigen::MatrixXd top_eigenspace() const { return eigenvectors.leftCols(multiplicity); }
};

/// Generalized symmetric eigenproblem (S^T M S) v = lambda K v.
/// Throws NumericError when the solver fails.
WSpectrum top_eigenpair(const DiscreteProblem& problem);

/// I_g f = <f, S*g>_F = <Sf, g>_G for a unit g in G.
struct Functional {
  Eigen::VectorXd representer;  ///< kernel-basis coefficients of S*g
  Eigen::VectorXd g_coords;

  double apply(const DiscreteProblem& problem, const Eigen::VectorXd& f) const;
  /// e0(I_g) = ||S*g||_F.
  double initial_error(const DiscreteProblem& problem) const;
};

/// Builds I_g. g must have unit G-norm within 1e-10; g within 1e-6 of unit
/// norm is renormalized; anything else throws InvalidInput.
Functional build_Ig(const DiscreteProblem& problem, const Eigen::VectorXd& g_coords);

/// Approximating S itself.
struct OperatorTarget {};
using Target = std::variant<OperatorTarget, Functional>;

/// Radius of information for fixed sample points:
///   sup { ||Target f|| : ||f||_F <= 1, f(p) = 0 for p in points },
/// the worst-case error of the optimal algorithm using those samples.
/// Points are indices into the domain; duplicates or out-of-range indices
/// throw InvalidInput.
double fixed_info_radius(const DiscreteProblem& problem, const Target& target,
                         std::span<const int> points);

struct MinimalError {
  double error = 0.0;
  std::vector<int> best_points;  ///< one minimizing subset, sorted
};

/// e_n(Target, Lambda^std) by exhaustive search over all n-subsets of the
/// domain. Requires n <= m and C(m, n) <= 1e6 (ResourceLimit otherwise).
MinimalError minimal_error_std(const DiscreteProblem& problem, const Target& target, int n);

struct DominationReport {
  double functional_error = 0.0;  ///< e_n(I_g, std)
  double operator_error = 0.0;    ///< e_n(S, std)
  bool exact_ok = false;
  int trials = 0;
  int pointwise_violations = 0;
  double worst_slack = -std::numeric_limits<double>::infinity();  ///< max of |I_g f - B_n f| - ||Sf - A_n f||
  std::optional<std::string> counterexample;

  bool passed() const { return exact_ok && pointwise_violations == 0; }
};

/// Checks e_n(I_g, std) <= e_n(S, std) exactly, and the pointwise identity
/// |I_g f - B_n f| <= ||Sf - A_n f||_G for `trials` random linear algorithms
/// A_n f = sum f(t_j) S f_j with B_n f = sum f(t_j) <f_j, S*g>_F.
DominationReport verify_domination(const DiscreteProblem& problem, const Eigen::VectorXd& g_coords,
                                   int n, int trials, std::uint64_t seed);

struct E0Report {
  double lambda1 = 0.0;
  int multiplicity = 0;
  double forward_norm_error = 0.0;   ///< max | ||g||_G - 1 |
  double forward_value_error = 0.0;  ///< max | ||S*g||_F - sqrt(lambda1) |
  int samples = 0;
  int maximizers_found = 0;
  double max_maximizer_distance = 0.0;
  double best_value = 0.0;           ///< largest ||S*g||_F seen
  int strictness_checks = 0;
  int strictness_violations = 0;
  std::optional<std::string> counterexample;

  bool passed() const;
};

/// Checks that e0(I_g) = e0(S) with ||g||_G = 1 holds exactly for
/// g = lambda1^-1/2 S eta with eta a unit lambda1-eigenvector: forward on 10
/// random eta; converse by maximizing ||S*g||_F from `samples` random starts
/// (power iteration on S S*) and measuring G-distance of every maximizer to
/// that set; strictness on g with a component orthogonal to S(eigenspace).
E0Report verify_e0_characterization(const DiscreteProblem& problem, int samples,
                                    std::uint64_t seed);

/// Piecewise constant functions on the 2^d dyadic sub-cubes of [0,1]^d with
/// the L2 norm; S = identity, G = F. Kernel is 2^d on the diagonal. Domain
/// points are the sub-cube corners in {0, 1}^d. Requires 1 <= d <= 12.
DiscreteProblem example2_instance(int d);

/// G-coordinates of the element of G = F (problems shaped like example2_instance) with the
/// given function values at the domain points.
Eigen::VectorXd g_from_values(const DiscreteProblem& problem, const Eigen::VectorXd& values);

/// Random well-conditioned problem: Gram matrices A^T A + 0.1 I from seeded
/// standard normal A, S standard normal.
DiscreteProblem random_problem(int m, int k, std::uint64_t seed);

/// Random problem whose W has top eigenvalue 1 with the given multiplicity
/// and remaining nonzero eigenvalues in [0.1, 0.8]. Requires
/// 1 <= multiplicity <= min(m, k).
DiscreteProblem problem_with_top_multiplicity(int m, int k, int multiplicity, std::uint64_t seed);

/// Plain-text format: "m k", then gram_F, operator_S and gram_G row-major,
/// whitespace separated, 17 significant digits.
void write_problem(std::ostream& os, const DiscreteProblem& problem);
/// Throws InvalidInput on malformed input.
DiscreteProblem read_problem(std::istream& is);

}  // namespace ibc
