// Copyright 2026 The opmivp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include "opmivp/bernoulli_basis.hpp"
#include "opmivp/diagnostics.hpp"
#include "opmivp/error.hpp"
#include "opmivp/expr.hpp"
#include "opmivp/ivp_solver.hpp"
#include "opmivp/op_matrix.hpp"
#include "opmivp/oracle.hpp"
#include "opmivp/problem_config.hpp"
#include "opmivp/projection.hpp"
#include "opmivp/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace opmivp::cli {
namespace {

struct SolveArgs {
  std::string config;
  std::optional<int> n;
  ProductMode mode = ProductMode::Paper;
  int grid = 201;
  double oracle_tol = kDefaultOracleTolerance;
  std::string out;
};

struct ApproxArgs {
  std::string f;
  int n = 6;
  int grid = 201;
  std::string out;
};

struct OracleArgs {
  std::string config;
  double tol = kDefaultOracleTolerance;
  int grid = 201;
  std::string out;
};

struct StudyArgs {
  std::string config;
  std::vector<int> n_list{4, 6, 8, 10};
  ProductMode mode = ProductMode::Paper;
  int grid = 201;
  double oracle_tol = kDefaultOracleTolerance;
  std::string out;
};

const std::map<std::string, ProductMode> kModes{{"paper", ProductMode::Paper},
                                                {"direct", ProductMode::Direct}};

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  return f;
}

ParsedProblem load(const std::string& path, std::optional<int> n_override = std::nullopt) {
  auto parsed = build_problem(load_problem_config(path));
  if (n_override) parsed.problem.n = *n_override;
  return parsed;
}

void print_metrics(std::ostream& out, const char* label, const ErrorMetrics& m) {
  out << label << ": Linf = " << format_full(m.linf) << ", L2 = " << format_full(m.l2) << '\n';
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const auto parsed = load(a.config, a.n);
  const auto& p = parsed.problem;
  SolveOptions opts;
  opts.product_mode = a.mode;
  const auto sol = solve(p, opts);
  const auto oracle = rk_solve(p, a.oracle_tol, a.grid);
  std::optional<SampleSet> exact;
  if (parsed.exact) exact = eval_exact(*parsed.exact, oracle.x);

  const bool constant = p.P.is_constant() && p.Q.is_constant();
  out << "problem: " << sol.problem_echo << '\n';
  out << "case: " << (constant ? "constant coefficients" : "variable coefficients");
  if (!constant) out << " (product mode " << (a.mode == ProductMode::Paper ? "paper" : "direct") << ')';
  out << '\n';
  out << "condition estimate: " << format_full(sol.condition_estimate) << '\n';
  out << "C = " << display_vector(sol.c.values) << '\n';
  out << "C (full) =";
  for (double c : sol.c.values) out << ' ' << format_full(c);
  out << '\n';
  out << "y(x) ~ " << display_polynomial(sol.y_poly) << '\n';
  out << "y power coefficients (full) =";
  for (double c : sol.y_poly) out << ' ' << format_full(c);
  out << '\n';
  out << "residual Linf (" << a.grid << " points): " << format_full(residual_norm(sol, p, a.grid)) << '\n';
  if (exact) print_metrics(out, "error vs exact", error_report(sol, *exact));
  print_metrics(out, "error vs RK oracle", error_report(sol, oracle));
  if (!a.out.empty()) {
    emit_plot_data(make_plot_data(sol, p, &oracle, exact ? &*exact : nullptr), a.out);
    out << "wrote " << a.out << '\n';
  }
  return kExitOk;
}

int cmd_approx(const ApproxArgs& a, std::ostream& out) {
  const Expr e = parse(a.f);
  const auto f = IntegrableFunction::from_expr(e);
  const auto basis = gram_schmidt_basis(a.n);
  const auto c = project(f, basis);
  out << "c = " << display_vector(c.values) << '\n';
  out << "c (full) =";
  for (double v : c.values) out << ' ' << format_full(v);
  out << '\n';

  std::ofstream file;
  if (!a.out.empty()) file = open_output(a.out);
  std::ostream& csv = a.out.empty() ? out : file;
  csv << "x,f,f_hat,error\n";
  for (double x : uniform_grid({0.0, 1.0}, a.grid)) {
    const double fx = f(x);
    const double fh = reconstruct(c, basis, x);
    csv << format_full(x) << ',' << format_full(fx) << ',' << format_full(fh) << ','
        << format_full(std::abs(fx - fh)) << '\n';
  }
  if (!a.out.empty()) out << "wrote " << a.out << '\n';
  return kExitOk;
}

int cmd_basis(int n, std::ostream& out) {
  const auto basis = gram_schmidt_basis(n);
  for (std::size_t k = 0; k < basis.size(); ++k) out << "phi_" << k << " = " << basis.member(k).to_string() << '\n';
  out << '\n' << "x";
  for (std::size_t k = 0; k < basis.size(); ++k) out << ",phi_" << k;
  out << '\n';
  for (double x : uniform_grid({0.0, 1.0}, 11)) {
    out << format_full(x);
    for (double v : basis.eval(x)) out << ',' << format_full(v);
    out << '\n';
  }
  return kExitOk;
}

int cmd_opmat(int n, const std::string& path, std::ostream& out) {
  const auto theta = build_theta(n);
  std::ofstream file;
  if (!path.empty()) file = open_output(path);
  std::ostream& csv = path.empty() ? out : file;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) csv << (j ? "," : "") << format_full(theta(i, j));
    csv << '\n';
  }
  return kExitOk;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const auto parsed = load(a.config);
  const auto sol = rk_solve(parsed.problem, a.tol, a.grid);
  std::ofstream file;
  if (!a.out.empty()) file = open_output(a.out);
  std::ostream& csv = a.out.empty() ? out : file;
  csv << "x,y,dy\n";
  for (std::size_t i = 0; i < sol.x.size(); ++i)
    csv << format_full(sol.x[i]) << ',' << format_full(sol.y[i]) << ',' << format_full(sol.dy[i]) << '\n';
  if (!a.out.empty()) out << "wrote " << a.out << '\n';
  return kExitOk;
}

int cmd_study(const StudyArgs& a, std::ostream& out) {
  const auto parsed = load(a.config);
  const auto& p = parsed.problem;
  SampleSet reference = rk_solve(p, a.oracle_tol, a.grid);
  const char* against = "oracle";
  if (parsed.exact) {
    reference = eval_exact(*parsed.exact, reference.x);
    against = "exact";
  }
  SolveOptions opts;
  opts.product_mode = a.mode;
  const auto rows = convergence_study(p, a.n_list, &reference, opts);

  std::ofstream file;
  if (!a.out.empty()) file = open_output(a.out);
  std::ostream& csv = a.out.empty() ? out : file;
  csv << "n,residual_linf,err_vs_" << against << "_linf\n";
  for (const auto& r : rows) csv << r.n << ',' << format_full(r.residual_linf) << ',' << format_full(*r.err_linf) << '\n';
  if (!a.out.empty()) out << "wrote " << a.out << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operational-matrix spectral solver for linear second-order IVPs"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve the problem in a config file");
  solve_cmd->add_option("--config", solve_args.config, "Problem file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--n", solve_args.n, "Truncation order (overrides the file)")->check(CLI::Range(1, kDefaultMaxOrder));
  solve_cmd->add_option("--product-mode", solve_args.mode, "paper | direct")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  solve_cmd->add_option("--grid", solve_args.grid, "Output grid points")->check(CLI::Range(2, 1000000));
  solve_cmd->add_option("--oracle-tol", solve_args.oracle_tol, "RK oracle tolerance")->check(CLI::Range(1e-13, 1e-3));
  solve_cmd->add_option("--out", solve_args.out, "CSV with x, y_approx, y_oracle, [y_exact], abs_error, residual");

  ApproxArgs approx_args;
  auto* approx_cmd = app.add_subcommand("approx", "Project a function onto the basis");
  approx_cmd->add_option("--f", approx_args.f, "Expression in x")->required();
  approx_cmd->add_option("--n", approx_args.n, "Truncation order")->check(CLI::Range(0, kDefaultMaxOrder));
  approx_cmd->add_option("--grid", approx_args.grid, "Output grid points")->check(CLI::Range(2, 1000000));
  approx_cmd->add_option("--out", approx_args.out, "CSV with x, f, f_hat, error");

  int basis_n = 9;
  auto* basis_cmd = app.add_subcommand("basis", "Print the orthonormal basis");
  basis_cmd->add_option("--n", basis_n, "Truncation order")->check(CLI::Range(0, kDefaultMaxOrder));

  int opmat_n = 6;
  std::string opmat_out;
  auto* opmat_cmd = app.add_subcommand("opmat", "Print the integration operational matrix as CSV");
  opmat_cmd->add_option("--n", opmat_n, "Truncation order")->check(CLI::Range(0, 1000));
  opmat_cmd->add_option("--out", opmat_out, "CSV output path");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Runge-Kutta reference solution");
  oracle_cmd->add_option("--config", oracle_args.config, "Problem file")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--tol", oracle_args.tol, "Local error tolerance")->check(CLI::Range(1e-13, 1e-3));
  oracle_cmd->add_option("--grid", oracle_args.grid, "Output grid points")->check(CLI::Range(2, 1000000));
  oracle_cmd->add_option("--out", oracle_args.out, "CSV with x, y, dy");

  StudyArgs study_args;
  auto* study_cmd = app.add_subcommand("study", "Convergence over several truncation orders");
  study_cmd->add_option("--config", study_args.config, "Problem file")->required()->check(CLI::ExistingFile);
  study_cmd->add_option("--n-list", study_args.n_list, "Ascending orders, comma separated")
      ->delimiter(',')
      ->check(CLI::Range(1, kDefaultMaxOrder));
  study_cmd->add_option("--product-mode", study_args.mode, "paper | direct")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  study_cmd->add_option("--grid", study_args.grid, "Reference grid points")->check(CLI::Range(2, 1000000));
  study_cmd->add_option("--oracle-tol", study_args.oracle_tol, "RK oracle tolerance")->check(CLI::Range(1e-13, 1e-3));
  study_cmd->add_option("--out", study_args.out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const auto previous = set_warning_handler([&err](std::string_view msg) { err << "warning: " << msg << '\n'; });
  int code = kExitOk;
  try {
    if (*solve_cmd) code = cmd_solve(solve_args, out);
    else if (*approx_cmd) code = cmd_approx(approx_args, out);
    else if (*basis_cmd) code = cmd_basis(basis_n, out);
    else if (*opmat_cmd) code = cmd_opmat(opmat_n, opmat_out, out);
    else if (*oracle_cmd) code = cmd_oracle(oracle_args, out);
    else if (*study_cmd) code = cmd_study(study_args, out);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    code = kExitNumericalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = kExitInputError;
  }
  set_warning_handler(previous);
  return code;
}

}  // namespace opmivp::cli
