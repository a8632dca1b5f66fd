#include "ibc/reports/cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ibc/errors.hpp"
#include "ibc/functional_reduction.hpp"
#include "ibc/nystrom.hpp"
#include "ibc/reports/acceptance.hpp"
#include "ibc/reports/density.hpp"
#include "ibc/reports/format.hpp"
#include "ibc/root_eigensolver.hpp"
#include "ibc/tensor_complexity.hpp"

namespace ibc::reports {
namespace {

struct RunConfig {
  std::string family = "sobolev-min";
  double alpha = 1.0;
  double beta = 1.0;
  double anchor = 0.0;
  int count = 5;
  int points = 2000;
  bool richardson = false;
  int d = 1;
  double eps = 0.1;
  std::string info = "all";
  int samples = 1025;
  std::string problem;
  int m = 5;
  int k = 3;
  int n = 2;
  int trials = 200;
  std::vector<int> perturb;
  std::vector<int> only;
  std::uint64_t seed = 20240601;
  std::string out;
  std::string format = "csv";
};

// Writes to --out when given, else to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw Error("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw Error("write failed for '" + path + "'");
}

void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
  const OutputFormat fmt = parse_format(cfg.format);
  if (fmt == OutputFormat::Svg) throw InvalidParameter("svg output is only available for density");
  Sink sink(cfg.out, out);
  if (fmt == OutputFormat::Json) table.write_json(sink.stream());
  else table.write_csv(sink.stream());
  sink.finish();
}

KernelSpec family_of(const RunConfig& cfg) {
  return kernel_from_name(cfg.family, cfg.alpha, cfg.beta, cfg.anchor);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string_view method_name(CountMethod m) {
  switch (m) {
    case CountMethod::DirectEnum: return "direct";
    case CountMethod::DfsMultiset: return "dfs-multiset";
    case CountMethod::Formula: return "formula";
  }
  return "unknown";
}

int cmd_eigs(const RunConfig& cfg, std::ostream& out) {
  if (cfg.count < 1) throw InvalidParameter("--count must be >= 1");
  if (cfg.count > 1'000'000) throw ResourceLimit("--count must be <= 1000000");
  const KernelSpec spec = family_of(cfg);
  if (!has_analytic_spectrum(spec)) {
    throw InvalidParameter("eigs: no analytic eigenpairs for family '" + cfg.family + "'");
  }
  const FamilySpectrum fs = family_spectrum(spec, cfg.count);
  Table t({"j", "alpha", "lambda", "beta"});
  for (const auto& e : fs.eigenpairs) {
    t.add_row({std::to_string(e.index), format_number(e.eigenfunction.frequency),
               format_number(e.value), format_number(e.eigenfunction.amplitude)});
  }
  emit(t, cfg, out);
  return kExitOk;
}

int cmd_oracle_eigs(const RunConfig& cfg, std::ostream& out) {
  if (cfg.count < 1) throw InvalidParameter("--count must be >= 1");
  if (cfg.points < 2 || cfg.count > cfg.points) {
    throw InvalidParameter("oracle-eigs: need 2 <= --points and --count <= --points");
  }
  if (cfg.points > 5000) throw ResourceLimit("oracle-eigs: --points must be <= 5000");
  const KernelSpec spec = family_of(cfg);
  const EigenSequence numeric = nystrom_spectrum(spec, QuadratureGrid::midpoint(cfg.points), cfg.count);
  std::optional<EigenSequence> exact;
  if (has_analytic_spectrum(spec)) exact = family_spectrum(spec, cfg.count).eigensequence;
  std::optional<RefinedSpectrum> refined;
  if (cfg.richardson) {
    const std::array<int, 2> sizes{cfg.points / 2, cfg.points};
    refined = richardson_refine(spec, cfg.count, sizes);
  }
  std::vector<std::string> header{"j", "nystrom", "analytic", "rel_err"};
  if (refined) {
    header.push_back("refined");
    header.push_back("error_estimate");
  }
  Table t(header);
  for (int j = 0; j < cfg.count; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    std::vector<std::string> row{std::to_string(j + 1), format_number(numeric[jj]), "", ""};
    if (exact) {
      row[2] = format_number((*exact)[jj]);
      row[3] = format_number(std::abs(numeric[jj] - (*exact)[jj]) / (*exact)[jj]);
    }
    if (refined) {
      row.push_back(format_number(refined->estimates[jj]));
      row.push_back(format_number(refined->error_estimates[jj]));
    }
    t.add_row(std::move(row));
  }
  emit(t, cfg, out);
  return kExitOk;
}

int cmd_complexity(const RunConfig& cfg, std::ostream& out) {
  InfoClass info = InfoClass::All;
  if (cfg.info == "std") info = InfoClass::Std;
  else if (cfg.info != "all") throw InvalidParameter("--info must be 'all' or 'std'");
  const ComplexityQuery q(cfg.eps, cfg.d, info);
  const KernelSpec spec = family_of(cfg);
  if (!has_analytic_spectrum(spec)) {
    throw InvalidParameter("complexity: no analytic spectrum for family '" + cfg.family + "'");
  }
  const EigenSequence eigs = analytic_eigenvalues_down_to(spec, cfg.eps * cfg.eps);
  const ComplexityResult r = information_complexity(eigs, q);
  Table t({"family", "d", "eps", "info", "count", "saturated", "lower_bound_only",
           "truncation_index", "tie_tolerance", "method"});
  t.add_row({cfg.family, std::to_string(cfg.d), format_number(cfg.eps), cfg.info,
             std::to_string(r.count), yes_no(r.saturated), yes_no(r.lower_bound_only),
             std::to_string(r.truncation_index), format_number(r.tie_tolerance),
             std::string(method_name(r.method))});
  emit(t, cfg, out);
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const KernelSpec spec = family_of(cfg);
  if (!has_analytic_spectrum(spec)) {
    throw InvalidParameter("classify: no analytic spectrum for family '" + cfg.family + "'");
  }
  const TractabilityReport r = classify_family(spec);
  Table t({"family", "lambda1", "lambda2", "decay", "qpt_exponent", "all", "std", "goodcase"});
  t.add_row({cfg.family, format_number(r.lambda1), format_number(r.lambda2), format_number(r.decay),
             r.qpt_exponent ? format_number(*r.qpt_exponent) : "",
             std::string(to_string(r.classification_all)),
             std::string(to_string(r.classification_std)),
             r.goodcase_holds ? yes_no(*r.goodcase_holds) : ""});
  emit(t, cfg, out);
  return kExitOk;
}

int cmd_density(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family != "sobolev-min") {
    throw InvalidParameter("density: only the sobolev-min family is supported");
  }
  if (cfg.samples > 1'000'000) throw ResourceLimit("density: --samples must be <= 1000000");
  const OutputFormat fmt = parse_format(cfg.format);
  const DensityArtifacts a = render_density(cfg.samples);
  const std::string prefix = cfg.out.empty() ? "density" : cfg.out;
  write_file(prefix + ".csv", a.csv);
  write_file(prefix + ".svg", a.svg);
  Table summary({"samples", "integral_g2", "direction", "endpoint_ratio", "csv", "svg"});
  summary.add_row({std::to_string(cfg.samples), format_number(a.table.integral_g2),
                   std::to_string(a.table.direction), format_number(a.table.endpoint_ratio),
                   prefix + ".csv", prefix + ".svg"});
  if (fmt == OutputFormat::Json) summary.write_json(out);
  else summary.write_csv(out);
  return kExitOk;
}

int cmd_verify_thm1(const RunConfig& cfg, std::ostream& out) {
  std::optional<DiscreteProblem> problem;
  if (!cfg.problem.empty()) {
    std::ifstream in(cfg.problem);
    if (!in) throw InvalidParameter("cannot open problem file '" + cfg.problem + "'");
    problem = read_problem(in);
  } else {
    if (cfg.m < 1 || cfg.k < 1) throw InvalidParameter("--m and --k must be >= 1");
    if (cfg.m > 64 || cfg.k > 64) throw ResourceLimit("--m and --k must be <= 64");
    problem = random_problem(cfg.m, cfg.k, cfg.seed);
  }
  if (cfg.trials < 0 || cfg.samples < 1) throw InvalidParameter("need --trials >= 0, --samples >= 1");
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal;
  Eigen::VectorXd g(problem->k());
  for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = normal(rng);
  g /= problem->norm_G(g);

  const DominationReport dom = verify_domination(*problem, g, cfg.n, cfg.trials, rng());
  const E0Report e0 = verify_e0_characterization(*problem, std::min(cfg.samples, 200), rng());
  Table t({"check", "value", "pass"});
  t.add_row({"e_n(I_g)", format_number(dom.functional_error), yes_no(dom.exact_ok)});
  t.add_row({"e_n(S)", format_number(dom.operator_error), yes_no(dom.exact_ok)});
  t.add_row({"pointwise_violations", std::to_string(dom.pointwise_violations),
             yes_no(dom.pointwise_violations == 0)});
  t.add_row({"lambda1", format_number(e0.lambda1), yes_no(e0.passed())});
  t.add_row({"multiplicity", std::to_string(e0.multiplicity), yes_no(e0.passed())});
  t.add_row({"maximizers_found", std::to_string(e0.maximizers_found), yes_no(e0.maximizers_found > 0)});
  t.add_row({"max_maximizer_distance", format_number(e0.max_maximizer_distance),
             yes_no(e0.max_maximizer_distance <= 1e-6)});
  t.add_row({"strictness_violations", std::to_string(e0.strictness_violations),
             yes_no(e0.strictness_violations == 0)});
  emit(t, cfg, out);
  return dom.passed() && e0.passed() ? kExitOk : kExitAcceptanceFailure;
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const OutputFormat fmt = parse_format(cfg.format);
  if (fmt == OutputFormat::Svg) throw InvalidParameter("reproduce: use --format csv or json");
  AcceptanceOptions opts;
  opts.seed = cfg.seed;
  opts.perturb.insert(cfg.perturb.begin(), cfg.perturb.end());
  opts.only.insert(cfg.only.begin(), cfg.only.end());
  const auto results = run_acceptance(opts, [&](const CriterionResult& r) { err << result_line(r) << '\n'; });
  Sink sink(cfg.out, out);
  if (fmt == OutputFormat::Json) write_results_json(sink.stream(), results);
  else write_results_csv(sink.stream(), results);
  sink.finish();
  return all_passed(results) ? kExitOk : kExitAcceptanceFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra, information complexity and tractability of tensor product problems", "ibc"};
  app.set_config("--config", "", "key=value file supplying option values; flags win");
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--family", cfg.family, "sobolev-min, sobolev-cosh, korobov, sobolev-distance, brownian-min");
  app.add_option("--alpha", cfg.alpha, "Korobov smoothness alpha > 1/2");
  app.add_option("--beta", cfg.beta, "Korobov weight beta in (0, 1]");
  app.add_option("--anchor", cfg.anchor, "sobolev-distance anchor a in [0, 1]");
  app.add_option("--count", cfg.count, "number of eigenvalues");
  app.add_option("--points", cfg.points, "Nystrom midpoint grid size");
  app.add_flag("--richardson", cfg.richardson, "add Richardson-refined estimates (grids points/2, points)");
  app.add_option("--d", cfg.d, "dimension");
  app.add_option("--eps", cfg.eps, "error threshold in (0, 1)");
  app.add_option("--info", cfg.info, "information class: all or std");
  app.add_option("--samples", cfg.samples, "density grid points / e0 maximization starts");
  app.add_option("--problem", cfg.problem, "discrete problem file (m k, gram_F, S, gram_G)");
  app.add_option("--m", cfg.m, "random problem: domain size");
  app.add_option("--k", cfg.k, "random problem: target dimension");
  app.add_option("--n", cfg.n, "number of function evaluations");
  app.add_option("--trials", cfg.trials, "random algorithms for the pointwise check");
  app.add_option("--perturb", cfg.perturb, "criterion ids to perturb (negative control)")->group("");
  app.add_option("--only", cfg.only, "criterion ids to run");
  app.add_option("--seed", cfg.seed, "seed for randomized operations");
  app.add_option("--out", cfg.out, "output file (density: output prefix)");
  app.add_option("--format", cfg.format, "json, csv or svg");

  const std::array<std::pair<const char*, const char*>, 7> commands{{
      {"eigs", "analytic eigenpairs j, alpha_j, lambda_j, beta_j"},
      {"oracle-eigs", "Nystrom eigenvalues next to the analytic ones"},
      {"complexity", "information complexity n(eps, S_d)"},
      {"classify", "tractability classification of a family"},
      {"density", "density g1 as CSV and SVG"},
      {"verify-thm1", "functional-vs-operator checks on a finite problem"},
      {"reproduce", "run the acceptance suite"},
  }};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ibc: " << e.what() << '\n';
    return kExitInvalidArguments;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "eigs") return cmd_eigs(cfg, out);
    if (command == "oracle-eigs") return cmd_oracle_eigs(cfg, out);
    if (command == "complexity") return cmd_complexity(cfg, out);
    if (command == "classify") return cmd_classify(cfg, out);
    if (command == "density") return cmd_density(cfg, out);
    if (command == "verify-thm1") return cmd_verify_thm1(cfg, out);
    return cmd_reproduce(cfg, out, err);
  } catch (const InvalidParameter& e) {
    err << "ibc: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const InvalidInput& e) {
    err << "ibc: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const DomainError& e) {
    err << "ibc: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const ResourceLimit& e) {
    err << "ibc: " << e.what() << '\n';
    return kExitResourceGuard;
  } catch (const TruncationError& e) {
    err << "ibc: " << e.what() << '\n';
    return kExitResourceGuard;
  } catch (const std::exception& e) {
    err << "ibc: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace ibc::reports
