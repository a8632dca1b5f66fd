#pragma once

#include <vector>

#include "ibc/spectra.hpp"

namespace ibc {

/// alpha_j: the unique root of cot(x) = x in ((j-1) pi, j pi), to absolute
/// accuracy 1e-13. Bisection on cos(x) - x sin(x) followed by two Newton
/// polish steps. Throws InvalidParameter for j < 1.
double solve_cot_root(int j);

/// j-th eigenpair of W = S*S for L2 approximation on the min-kernel Sobolev
/// space (kernel 1 + min(x, y), norm f(0)^2 + int f'^2):
///   lambda_j = alpha_j^-2,  eta_j(x) = beta_j cos(alpha_j x - alpha_j),
///   beta_j = (cos^2 alpha_j + (alpha_j/2)(alpha_j - sin(2 alpha_j)/2))^-1/2.
Eigenpair sobolev_min_eigenpair(int j);
EigenSequence sobolev_min_eigenvalues(int count);

/// Kernel cosh(1-max) cosh(min)/sinh(1), i.e. the H1 norm int f^2 + int f'^2:
/// lambda_j = 1 / (1 + pi^2 (j-1)^2) with eta_j proportional to cos((j-1) pi x).
Eigenpair sobolev_cosh_eigenpair(int j);
EigenSequence sobolev_cosh_eigenvalues(int count);

/// Korobov space: {1} and beta k^(-2 alpha) twice (cosine and sine modes) for
/// k = 1, 2, ...; eigenvalue decay is 2 alpha.
Eigenpair korobov_eigenpair(double alpha, double beta, int j);
EigenSequence korobov_eigenvalues(double alpha, double beta, int count);

/// True for the families whose eigenpairs are known in closed form.
bool has_analytic_spectrum(const KernelSpec& spec);

struct FamilySpectrum {
  KernelSpec family;
  EigenSequence eigensequence;
  std::vector<Eigenpair> eigenpairs;
  int multiplicity_of_top = 1;
};

/// First `count` eigenpairs of an analytic family. Throws InvalidParameter for
/// families without a closed-form spectrum.
FamilySpectrum family_spectrum(const KernelSpec& spec, int count);

/// Leading eigenvalues of an analytic family, continued until the first value
/// <= ratio * lambda1 has been listed. Anything after the returned list is
/// provably <= ratio * lambda1, which is what the counting code needs.
/// Throws ResourceLimit if more than max_terms values would be required.
EigenSequence analytic_eigenvalues_down_to(const KernelSpec& spec, double ratio,
                                           std::size_t max_terms = 50'000'000);

/// Number of leading values equal to values[0] within kRelTie.
int top_multiplicity(std::span<const double> values);

}  // namespace ibc
