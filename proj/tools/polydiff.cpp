// polydiff: differentiation matrices, barycentric weights, the invariant
// suite and the stability experiments from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "polydiff/experiments.hpp"
#include "polydiff/io.hpp"
#include "polydiff/request.hpp"
#include "polydiff/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kUsage = 2;

std::vector<std::string> list_or_empty(const std::string& text) {
  return text.empty() ? std::vector<std::string>{} : polydiff::split_list(text);
}

struct MatrixFlags {
  std::string basis;
  std::optional<std::size_t> degree;
  std::string nodes;
  std::string confluency;
  std::string alpha;
  std::string beta;
  std::string gamma;
  std::string field = "rational";
  std::string format = "csv";
  bool pinv = false;
  std::string out;
};

struct WeightFlags {
  std::string nodes;
  std::string confluency;
  std::string field = "rational";
};

struct VerifyFlags {
  std::string basis;
  bool inject_fault = false;
};

struct ExperimentFlags {
  std::string which;
  std::string nodes = "chebyshev";
  std::size_t confluency = 3;
  std::string n_list;
  std::string out;
};

// Writes to --out when given, otherwise standard output.
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot open " + path + " for writing");
  write(file);
}

int run_matrix(const MatrixFlags& f) {
  polydiff::MatrixRequest r;
  r.basis = f.basis;
  r.degree = f.degree;
  r.nodes = list_or_empty(f.nodes);
  r.confluency = list_or_empty(f.confluency);
  r.alpha = list_or_empty(f.alpha);
  r.beta = list_or_empty(f.beta);
  r.gamma = list_or_empty(f.gamma);
  r.field = polydiff::parse_field(f.field);
  r.pinv = f.pinv;
  const auto format = polydiff::parse_format(f.format);
  const polydiff::AnyMatrix m = polydiff::build_matrix(r);
  if (f.pinv && r.field != polydiff::Field::rational) {
    std::cerr << "note: generalized inverse computed in floating point; entries are approximate\n";
  }
  emit(f.out, [&](std::ostream& os) { polydiff::write_matrix(os, m, f.basis, format); });
  return 0;
}

int run_weights(const WeightFlags& f) {
  const auto rows =
      polydiff::build_weights(list_or_empty(f.nodes), list_or_empty(f.confluency), polydiff::parse_field(f.field));
  for (const auto& w : rows) std::cout << w.i << ',' << w.j << ',' << w.value << '\n';
  return 0;
}

int run_verify(const VerifyFlags& f) {
  polydiff::VerifyOptions opts;
  if (!f.basis.empty()) opts.basis = f.basis;
  opts.inject_fault = f.inject_fault;
  bool all = true;
  for (const auto& c : polydiff::run_verify(opts)) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    all = all && c.passed;
  }
  std::cout << (all ? "all checks passed" : "verification FAILED") << '\n';
  return all ? 0 : 1;
}

int run_experiment(const ExperimentFlags& f) {
  const auto kind = polydiff::parse_experiment(f.which);
  const auto family = polydiff::parse_node_family(f.nodes);
  std::vector<std::size_t> ns(polydiff::kFibonacciN.begin(), polydiff::kFibonacciN.end());
  if (!f.n_list.empty()) {
    ns.clear();
    for (const auto& s : polydiff::split_list(f.n_list)) ns.push_back(std::stoul(s));
  }
  const auto rows = polydiff::run_experiment(kind, family, f.confluency, ns);
  emit(f.out, [&](std::ostream& os) { polydiff::write_experiment_csv(os, kind, rows); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentiation matrices for polynomial bases"};
  app.require_subcommand(1);

  MatrixFlags mf;
  auto* matrix = app.add_subcommand("matrix", "Emit a differentiation matrix");
  matrix->add_option("--basis", mf.basis, "monomial|chebyshev|legendre|newton|lagrange|hermite|bernstein|recurrence")
      ->required();
  matrix->add_option("--degree", mf.degree, "Polynomial degree n (degree-graded and Bernstein bases)");
  matrix->add_option("--nodes", mf.nodes, "Comma list or @file");
  matrix->add_option("--confluency", mf.confluency, "Comma list, one per node");
  matrix->add_option("--alpha", mf.alpha, "Recurrence alpha_0..alpha_{n-1}");
  matrix->add_option("--beta", mf.beta, "Recurrence beta_0..beta_{n-1}");
  matrix->add_option("--gamma", mf.gamma, "Recurrence gamma_0..gamma_{n-1}");
  matrix->add_option("--field", mf.field, "rational|real|complex")->capture_default_str();
  matrix->add_option("--format", mf.format, "csv|json")->capture_default_str();
  matrix->add_flag("--pinv", mf.pinv, "Emit the antiderivative / generalized inverse instead");
  matrix->add_option("--out", mf.out, "Output file");

  WeightFlags wf;
  auto* weights = app.add_subcommand("weights", "Emit (generalized) barycentric weights as i,j,beta rows");
  weights->add_option("--nodes", wf.nodes, "Comma list or @file")->required();
  weights->add_option("--confluency", wf.confluency, "Comma list, one per node");
  weights->add_option("--field", wf.field, "rational|real|complex")->capture_default_str();

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--basis", vf.basis, "Restrict to one basis family");
  verify->add_flag("--inject-fault", vf.inject_fault)->group("");

  ExperimentFlags ef;
  auto* experiment = app.add_subcommand("experiment", "Run a stability experiment and write CSV");
  experiment->add_option("--which", ef.which, "hermite-norms|hermite-error|lagrange-error")->required();
  experiment->add_option("--nodes", ef.nodes, "chebyshev|equispaced")->capture_default_str();
  experiment->add_option("--confluency", ef.confluency, "Confluency at every node")->capture_default_str();
  experiment->add_option("--n", ef.n_list, "Comma list of n (default 3,5,8,13,21,34,55)");
  experiment->add_option("--out", ef.out, "Output CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*matrix) return run_matrix(mf);
    if (*weights) return run_weights(wf);
    if (*verify) return run_verify(vf);
    return run_experiment(ef);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
