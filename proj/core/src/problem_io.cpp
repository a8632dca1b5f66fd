#include <cmath>
#include <istream>
#include <ostream>

#include "ibc/errors.hpp"
#include "ibc/functional_reduction.hpp"

namespace ibc {
namespace {

void write_matrix(std::ostream& os, const Eigen::MatrixXd& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
    os << '\n';
  }
}

Eigen::MatrixXd read_matrix(std::istream& is, Eigen::Index rows, Eigen::Index cols,
                            const char* what) {
  Eigen::MatrixXd a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      double x = 0.0;
      if (!(is >> x) || !std::isfinite(x)) {
        throw InvalidInput(std::string("read_problem: bad or missing entry in ") + what);
      }
      a(i, j) = x;
    }
  }
  return a;
}

}  // namespace

void write_problem(std::ostream& os, const DiscreteProblem& problem) {
  const auto old_precision = os.precision(17);
  os << problem.m() << ' ' << problem.k() << '\n';
  write_matrix(os, problem.gram_F());
  write_matrix(os, problem.operator_S());
  write_matrix(os, problem.gram_G());
  os.precision(old_precision);
}

DiscreteProblem read_problem(std::istream& is) {
  long long m = 0;
  long long k = 0;
  if (!(is >> m >> k)) throw InvalidInput("read_problem: missing header 'm k'");
  if (m < 1 || k < 1 || m > 4096 || k > 4096) {
    throw InvalidInput("read_problem: sizes must lie in [1, 4096]");
  }
  Eigen::MatrixXd gram_f = read_matrix(is, m, m, "gram_F");
  Eigen::MatrixXd s = read_matrix(is, k, m, "operator_S");
  Eigen::MatrixXd gram_g = read_matrix(is, k, k, "gram_G");
  std::string extra;
  if (is >> extra) throw InvalidInput("read_problem: trailing data");
  return DiscreteProblem(std::move(gram_f), std::move(s), std::move(gram_g));
}

}  // namespace ibc
