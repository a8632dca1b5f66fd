#include "ibc/functional_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "ibc/errors.hpp"
#include "ibc/tolerances.hpp"

namespace ibc {
namespace {

void require_spd(const Eigen::MatrixXd& a, const char* name) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw DimensionError(std::string(name) + " must be square and nonempty");
  }
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidInput(std::string(name) + " must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  if (es.info() != Eigen::Success || !(ev(0) > 1e-12 * ev(ev.size() - 1))) {
    throw InvalidInput(std::string(name) + " must be positive definite");
  }
}

Eigen::MatrixXd standard_normal(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd a(rows, cols);
  // Fill column-major explicitly so the draw order is fixed.
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = normal(rng);
  }
  return a;
}

Eigen::VectorXd standard_normal(Eigen::Index n, std::mt19937_64& rng) {
  return standard_normal(n, 1, rng).col(0);
}

Eigen::MatrixXd random_spd(Eigen::Index n, std::mt19937_64& rng) {
  const Eigen::MatrixXd a = standard_normal(n, n, rng);
  Eigen::MatrixXd g = a.transpose() * a + 0.1 * Eigen::MatrixXd::Identity(n, n);
  return 0.5 * (g + g.transpose());
}

Eigen::MatrixXd random_orthogonal(Eigen::Index n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(standard_normal(n, n, rng));
  Eigen::MatrixXd q = qr.householderQ();
  return q;
}

// F-orthonormal basis of the F-orthogonal complement of span{e_i : i in
// points}, computed by Gram-Schmidt (two passes) over the sections first and
// then all unit vectors.
Eigen::MatrixXd annihilator_basis(const Eigen::MatrixXd& gram, std::span<const int> points) {
  const Eigen::Index m = gram.rows();
  std::vector<Eigen::VectorXd> basis;
  std::vector<Eigen::VectorXd> gram_basis;  // K q for each basis vector q
  basis.reserve(static_cast<std::size_t>(m));
  gram_basis.reserve(static_cast<std::size_t>(m));
  const auto orthonormalize = [&](Eigen::VectorXd v) -> bool {
    const double original = std::sqrt(v.dot(gram * v));
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < basis.size(); ++j) v -= gram_basis[j].dot(v) * basis[j];
    }
    Eigen::VectorXd kv = gram * v;
    const double norm = std::sqrt(std::max(0.0, v.dot(kv)));
    if (!(norm > 1e-10 * original)) return false;
    basis.push_back(v / norm);
    gram_basis.push_back(kv / norm);
    return true;
  };
  for (const int p : points) orthonormalize(Eigen::VectorXd::Unit(m, p));
  const std::size_t section_count = basis.size();
  for (Eigen::Index i = 0; i < m && static_cast<Eigen::Index>(basis.size()) < m; ++i) {
    orthonormalize(Eigen::VectorXd::Unit(m, i));
  }
  Eigen::MatrixXd q(m, static_cast<Eigen::Index>(basis.size() - section_count));
  for (std::size_t j = section_count; j < basis.size(); ++j) {
    q.col(static_cast<Eigen::Index>(j - section_count)) = basis[j];
  }
  return q;
}

double binomial_double(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

std::string describe(const Eigen::VectorXd& v) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? " " : "") << v(i);
  os << ']';
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// DiscreteProblem

DiscreteProblem::DiscreteProblem(Eigen::MatrixXd gram_F, Eigen::MatrixXd operator_S,
                                 Eigen::MatrixXd gram_G, std::vector<Eigen::VectorXd> points)
    : gram_F_(std::move(gram_F)),
      operator_S_(std::move(operator_S)),
      gram_G_(std::move(gram_G)),
      points_(std::move(points)) {
  require_spd(gram_F_, "gram_F");
  require_spd(gram_G_, "gram_G");
  if (operator_S_.rows() != gram_G_.rows() || operator_S_.cols() != gram_F_.rows()) {
    throw DimensionError("operator_S must be k x m");
  }
  if (operator_S_.cwiseAbs().maxCoeff() == 0.0) throw InvalidInput("operator_S must be nonzero");
  if (points_.empty()) {
    for (Eigen::Index i = 0; i < m(); ++i) points_.push_back(Eigen::VectorXd::Constant(1, double(i)));
  } else if (static_cast<Eigen::Index>(points_.size()) != m()) {
    throw DimensionError("need one coordinate vector per domain point");
  }
}

double DiscreteProblem::inner_F(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  return a.dot(gram_F_ * b);
}

double DiscreteProblem::norm_F(const Eigen::VectorXd& a) const {
  return std::sqrt(std::max(0.0, inner_F(a, a)));
}

double DiscreteProblem::inner_G(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  return a.dot(gram_G_ * b);
}

double DiscreteProblem::norm_G(const Eigen::VectorXd& a) const {
  return std::sqrt(std::max(0.0, inner_G(a, a)));
}

Eigen::VectorXd DiscreteProblem::adjoint(const Eigen::VectorXd& g) const {
  return gram_F_.llt().solve(operator_S_.transpose() * (gram_G_ * g));
}

Eigen::MatrixXd DiscreteProblem::w_form() const {
  Eigen::MatrixXd w = operator_S_.transpose() * gram_G_ * operator_S_;
  return 0.5 * (w + w.transpose());
}

// ---------------------------------------------------------------------------
// Spectrum of W

WSpectrum top_eigenpair(const DiscreteProblem& problem) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      problem.w_form(), problem.gram_F(), Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) {
    throw NumericError("top_eigenpair: generalized eigensolver failed");
  }
  const Eigen::Index m = problem.m();
  WSpectrum out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index j = 0; j < m; ++j) {
    if (out.eigenvalues(j) < 0.0) out.eigenvalues(j) = 0.0;  // rounding on a PSD form
  }
  int mult = 1;
  while (mult < m && out.eigenvalues(mult) >= out.eigenvalues(0) * (1.0 - kRelTie)) ++mult;
  out.multiplicity = mult;
  return out;
}

// ---------------------------------------------------------------------------
// Functionals

double Functional::apply(const DiscreteProblem& problem, const Eigen::VectorXd& f) const {
  return problem.inner_F(f, representer);
}

double Functional::initial_error(const DiscreteProblem& problem) const {
  return problem.norm_F(representer);
}

Functional build_Ig(const DiscreteProblem& problem, const Eigen::VectorXd& g_coords) {
  if (g_coords.size() != problem.k()) throw DimensionError("build_Ig: g must have k coordinates");
  Eigen::VectorXd g = g_coords;
  const double norm = problem.norm_G(g);
  if (std::abs(norm - 1.0) > 1e-6) throw InvalidInput("build_Ig: g must have unit G-norm");
  if (std::abs(norm - 1.0) > 1e-10) g /= norm;
  return Functional{problem.adjoint(g), g};
}

// ---------------------------------------------------------------------------
// Radius of information

double fixed_info_radius(const DiscreteProblem& problem, const Target& target,
                         std::span<const int> points) {
  const Eigen::Index m = problem.m();
  std::vector<int> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= m) throw InvalidInput("sample point index out of range");
    if (i > 0 && sorted[i] == sorted[i - 1]) throw InvalidInput("duplicate sample point");
  }
  const Eigen::MatrixXd q = annihilator_basis(problem.gram_F(), points);
  if (q.cols() == 0) return 0.0;

  if (std::holds_alternative<OperatorTarget>(target)) {
    Eigen::MatrixXd restricted = q.transpose() * problem.w_form() * q;
    restricted = 0.5 * (restricted + restricted.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(restricted, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericError("fixed_info_radius: eigensolver failed");
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  }
  const auto& functional = std::get<Functional>(target);
  const Eigen::VectorXd components = q.transpose() * (problem.gram_F() * functional.representer);
  return components.norm();
}

MinimalError minimal_error_std(const DiscreteProblem& problem, const Target& target, int n) {
  const int m = static_cast<int>(problem.m());
  if (n < 0 || n > m) throw InvalidParameter("minimal_error_std: need 0 <= n <= m");
  if (binomial_double(m, n) > 1e6) throw ResourceLimit("minimal_error_std: more than 1e6 subsets");

  std::vector<int> subset(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) subset[static_cast<std::size_t>(i)] = i;
  MinimalError best{std::numeric_limits<double>::infinity(), {}};
  while (true) {
    const double r = fixed_info_radius(problem, target, subset);
    if (r < best.error) best = MinimalError{r, subset};
    // Next combination in lexicographic order.
    int i = n - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == m - n + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Property checks

DominationReport verify_domination(const DiscreteProblem& problem, const Eigen::VectorXd& g_coords,
                                   int n, int trials, std::uint64_t seed) {
  constexpr double kSlack = 1e-12;
  const Functional ig = build_Ig(problem, g_coords);
  DominationReport report;
  report.functional_error = minimal_error_std(problem, ig, n).error;
  report.operator_error = minimal_error_std(problem, OperatorTarget{}, n).error;
  report.exact_ok = report.functional_error <= report.operator_error + kSlack;
  if (!report.exact_ok) {
    report.counterexample = "e_n(I_g)=" + std::to_string(report.functional_error) +
                            " > e_n(S)=" + std::to_string(report.operator_error) +
                            " for g=" + describe(ig.g_coords);
  }

  std::mt19937_64 rng(seed);
  const Eigen::Index m = problem.m();
  std::vector<int> labels(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = i;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int t = 0; t < trials; ++t) {
    std::shuffle(labels.begin(), labels.end(), rng);
    const std::span<const int> pts(labels.data(), static_cast<std::size_t>(n));
    const Eigen::MatrixXd fj = standard_normal(m, n, rng);
    Eigen::VectorXd f = standard_normal(m, rng);
    f *= unit(rng) / problem.norm_F(f);

    const Eigen::VectorXd values = problem.function_values(f);
    Eigen::VectorXd a_n = Eigen::VectorXd::Zero(problem.k());
    double b_n = 0.0;
    for (int j = 0; j < n; ++j) {
      const double sample = values(pts[static_cast<std::size_t>(j)]);
      a_n += sample * (problem.operator_S() * fj.col(j));
      b_n += sample * problem.inner_F(fj.col(j), ig.representer);
    }
    const double lhs = std::abs(ig.apply(problem, f) - b_n);
    const double rhs = problem.norm_G(problem.operator_S() * f - a_n);
    report.worst_slack = std::max(report.worst_slack, lhs - rhs);
    if (lhs > rhs + kSlack) {
      ++report.pointwise_violations;
      if (!report.counterexample) {
        report.counterexample = "pointwise bound fails for f=" + describe(f);
      }
    }
    ++report.trials;
  }
  return report;
}

bool E0Report::passed() const {
  return forward_norm_error <= 1e-10 && forward_value_error <= 1e-10 && maximizers_found > 0 &&
         max_maximizer_distance <= 1e-6 && strictness_violations == 0 && !counterexample;
}

E0Report verify_e0_characterization(const DiscreteProblem& problem, int samples,
                                    std::uint64_t seed) {
  const WSpectrum spec = top_eigenpair(problem);
  const double lambda1 = spec.lambda1();
  const double root = std::sqrt(lambda1);
  const Eigen::MatrixXd top = spec.top_eigenspace();
  const int mult = spec.multiplicity;
  const double next = mult < problem.m() ? spec.eigenvalues(mult) : 0.0;

  E0Report report;
  report.lambda1 = lambda1;
  report.multiplicity = mult;
  std::mt19937_64 rng(seed);

  // Forward direction.
  for (int i = 0; i < 10; ++i) {
    Eigen::VectorXd z = standard_normal(mult, rng);
    z.normalize();
    const Eigen::VectorXd eta = top * z;
    const Eigen::VectorXd g = problem.operator_S() * eta / root;
    report.forward_norm_error = std::max(report.forward_norm_error, std::abs(problem.norm_G(g) - 1.0));
    const double value = problem.norm_F(problem.adjoint(g));
    report.forward_value_error = std::max(report.forward_value_error, std::abs(value - root));
  }

  // G-orthonormal basis of S(top eigenspace): columns S eta_j / sqrt(lambda1).
  const Eigen::MatrixXd basis = problem.operator_S() * top / root;
  const auto distance_to_set = [&](const Eigen::VectorXd& g) {
    const Eigen::VectorXd coeff = basis.transpose() * (problem.gram_G() * g);
    const Eigen::VectorXd proj = basis * coeff;
    const double pn = problem.norm_G(proj);
    const double off = problem.norm_G(g - proj);
    return std::sqrt(off * off + (pn - 1.0) * (pn - 1.0));
  };

  // Converse: maximize ||S*g||_F over unit g by power iteration on S S*.
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd g = standard_normal(problem.k(), rng);
    g /= problem.norm_G(g);
    double value = problem.norm_F(problem.adjoint(g));
    for (int it = 0; it < 20000; ++it) {
      Eigen::VectorXd next_g = problem.operator_S() * problem.adjoint(g);
      const double norm = problem.norm_G(next_g);
      if (!(norm > 0.0)) break;
      next_g /= norm;
      const double next_value = problem.norm_F(problem.adjoint(next_g));
      const bool settled = std::abs(next_value - value) <= 1e-16 * root && it > 10 &&
                           distance_to_set(next_g) < 1e-9;
      g = std::move(next_g);
      value = next_value;
      if (settled) break;
    }
    ++report.samples;
    report.best_value = std::max(report.best_value, value);
    if (value > root * (1.0 + 1e-12)) {
      report.counterexample = "||S*g||_F exceeds sqrt(lambda1) for g=" + describe(g);
    }
    if (std::abs(value - root) <= 1e-8) {
      ++report.maximizers_found;
      const double dist = distance_to_set(g);
      report.max_maximizer_distance = std::max(report.max_maximizer_distance, dist);
      if (dist > 1e-6 && !report.counterexample) {
        report.counterexample = "maximizer outside lambda1^-1/2 S(eigenspace): g=" + describe(g);
      }
    }
  }

  // Strictness: any component orthogonal to S(eigenspace) loses norm.
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd h = standard_normal(problem.k(), rng);
    h -= basis * (basis.transpose() * (problem.gram_G() * h));
    const double hn = problem.norm_G(h);
    if (!(hn > 1e-8)) break;  // S(eigenspace) is all of G
    h /= hn;
    Eigen::VectorXd z = standard_normal(mult, rng);
    z.normalize();
    const double weight = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
    const Eigen::VectorXd g = std::sqrt(1.0 - weight * weight) * (basis * z) + weight * h;
    const double value = problem.norm_F(problem.adjoint(g));
    // ||S*g||^2 <= lambda1 (1 - (1 - lambda_{m+1}/lambda1) ||h||^2)
    const double bound = std::sqrt(lambda1 * (1.0 - (1.0 - next / lambda1) * weight * weight));
    ++report.strictness_checks;
    if (!(value < root) || value > bound * (1.0 + 1e-12) + 1e-14) {
      ++report.strictness_violations;
      if (!report.counterexample) report.counterexample = "strictness fails for g=" + describe(g);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Instances

DiscreteProblem example2_instance(int d) {
  if (d < 1) throw InvalidParameter("example2_instance: d must be >= 1");
  if (d > 12) throw ResourceLimit("example2_instance: d must be <= 12");
  const Eigen::Index m = Eigen::Index{1} << d;
  const double cells = static_cast<double>(m);
  std::vector<Eigen::VectorXd> corners;
  corners.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::VectorXd x(d);
    for (int b = 0; b < d; ++b) x(b) = static_cast<double>((i >> (d - 1 - b)) & 1);
    corners.push_back(std::move(x));
  }
  const Eigen::MatrixXd kernel = cells * Eigen::MatrixXd::Identity(m, m);
  return DiscreteProblem(kernel, Eigen::MatrixXd::Identity(m, m), kernel, std::move(corners));
}

Eigen::VectorXd g_from_values(const DiscreteProblem& problem, const Eigen::VectorXd& values) {
  if (problem.k() != problem.m() || values.size() != problem.m()) {
    throw DimensionError("g_from_values: needs G = F coordinates");
  }
  return problem.gram_G().llt().solve(values);
}

DiscreteProblem random_problem(int m, int k, std::uint64_t seed) {
  if (m < 1 || k < 1) throw InvalidParameter("random_problem: sizes must be positive");
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd gram_f = random_spd(m, rng);
  Eigen::MatrixXd gram_g = random_spd(k, rng);
  Eigen::MatrixXd s = standard_normal(k, m, rng);
  return DiscreteProblem(std::move(gram_f), std::move(s), std::move(gram_g));
}

DiscreteProblem problem_with_top_multiplicity(int m, int k, int multiplicity, std::uint64_t seed) {
  if (m < 1 || k < 1 || multiplicity < 1 || multiplicity > std::min(m, k)) {
    throw InvalidParameter("problem_with_top_multiplicity: need 1 <= multiplicity <= min(m, k)");
  }
  std::mt19937_64 rng(seed);
  const Eigen::MatrixXd gram_f = random_spd(m, rng);
  const Eigen::MatrixXd gram_g = random_spd(k, rng);
  const int rank = std::min(m, k);

  std::uniform_real_distribution<double> tail(0.1, 0.8);
  std::vector<double> lambda(static_cast<std::size_t>(rank), 1.0);
  for (int j = multiplicity; j < rank; ++j) lambda[static_cast<std::size_t>(j)] = tail(rng);
  std::sort(lambda.begin() + multiplicity, lambda.end(), std::greater<>());

  // F-orthonormal V = L^-T Q where gram_F = L L^T.
  const Eigen::LLT<Eigen::MatrixXd> llt_f(gram_f);
  const Eigen::MatrixXd q = random_orthogonal(m, rng);
  const Eigen::MatrixXd v = llt_f.matrixU().solve(q);

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, m);
  for (int j = 0; j < rank; ++j) {
    t.row(j) = std::sqrt(lambda[static_cast<std::size_t>(j)]) * (gram_f * v.col(j)).transpose();
  }
  t = random_orthogonal(k, rng) * t;
  // S = C^-1 T with gram_G = C^T C, so S^T M S = T^T T = K V Lambda V^T K.
  const Eigen::LLT<Eigen::MatrixXd> llt_g(gram_g);
  Eigen::MatrixXd s = llt_g.matrixU().solve(t);
  return DiscreteProblem(gram_f, std::move(s), gram_g);
}

}  // namespace ibc
