#include "polydiff/experiments.hpp"

#include "polydiff/hermite.hpp"
#include "polydiff/lagrange.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <string>

namespace polydiff {

std::string_view node_family_name(NodeFamily f) {
  return f == NodeFamily::chebyshev ? "chebyshev" : "equispaced";
}

NodeFamily parse_node_family(std::string_view name) {
  if (name == "chebyshev") return NodeFamily::chebyshev;
  if (name == "equispaced") return NodeFamily::equispaced;
  throw std::invalid_argument("unknown node family: " + std::string(name));
}

std::string_view experiment_name(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::hermite_norms: return "hermite-norms";
    case ExperimentKind::hermite_error: return "hermite-error";
    case ExperimentKind::lagrange_error: return "lagrange-error";
  }
  return "?";
}

ExperimentKind parse_experiment(std::string_view name) {
  if (name == "hermite-norms") return ExperimentKind::hermite_norms;
  if (name == "hermite-error") return ExperimentKind::hermite_error;
  if (name == "lagrange-error") return ExperimentKind::lagrange_error;
  throw std::invalid_argument("unknown experiment: " + std::string(name));
}

std::vector<double> experiment_nodes(NodeFamily family, std::size_t n) {
  if (n == 0) throw std::invalid_argument("experiments need n >= 1");
  std::vector<double> tau(n + 1);
  const double nn = static_cast<double>(n);
  for (std::size_t j = 0; j <= n; ++j) {
    const double jj = static_cast<double>(j);
    tau[j] = family == NodeFamily::chebyshev ? std::cos(std::numbers::pi * (nn - jj) / nn) : -1.0 + 2.0 * jj / nn;
  }
  return tau;
}

namespace {

std::vector<double> grid(std::size_t points) {
  std::vector<double> z(points);
  if (points == 1) {
    z[0] = 0.0;
    return z;
  }
  for (std::size_t k = 0; k < points; ++k) z[k] = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(points - 1);
  return z;
}

}  // namespace

ExperimentRecord run_experiment_row(ExperimentKind kind, NodeFamily family, std::size_t confluency, std::size_t n,
                                    std::size_t grid_points) {
  if (kind == ExperimentKind::lagrange_error) confluency = 1;
  if (confluency == 0) throw std::invalid_argument("confluency must be at least 1");

  NodeSet<double> nodes{experiment_nodes(family, n), {}};
  nodes.confluency.assign(nodes.size(), confluency);

  // data of the constant 1: value 1, every scaled derivative 0
  std::vector<double> ones(nodes.total_dimension(), 0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) ones[i * confluency] = 1.0;

  ExperimentRecord rec{n, family, confluency, 0.0, 0.0, 0.0};
  const auto weights = gen_bary_weights(nodes);
  const Matrix<double> d = diff_matrix_hermite(weights);
  rec.norm_D = inf_norm(d);
  const auto z = mat_apply(d, ones);
  rec.norm_Z = inf_norm(std::span<const double>(z));

  for (double x : grid(grid_points)) {
    const double p = kind == ExperimentKind::lagrange_error
                         ? eval_first_form(bary_weights(nodes), std::span<const double>(ones), x)
                         : hermite_eval(weights, std::span<const double>(ones), x);
    rec.max_interp_error = std::max(rec.max_interp_error, std::abs(p - 1.0));
  }
  return rec;
}

std::vector<ExperimentRecord> run_experiment(ExperimentKind kind, NodeFamily family, std::size_t confluency,
                                             std::span<const std::size_t> ns, std::size_t grid_points) {
  std::vector<std::future<ExperimentRecord>> pending;
  pending.reserve(ns.size());
  for (std::size_t n : ns) {
    pending.push_back(std::async(std::launch::async, run_experiment_row, kind, family, confluency, n, grid_points));
  }
  std::vector<ExperimentRecord> rows;
  rows.reserve(ns.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

void write_experiment_csv(std::ostream& out, ExperimentKind kind, std::span<const ExperimentRecord> rows,
                          std::size_t grid_points) {
  out << "# experiment=" << experiment_name(kind) << " grid=" << grid_points << " uniform points on [-1,1]\n";
  out << "n,node_family,confluency,norm_D,norm_Z,max_err\n";
  for (const auto& r : rows) {
    out << r.n << ',' << node_family_name(r.node_family) << ',' << r.confluency << ',' << to_string(r.norm_D) << ','
        << to_string(r.norm_Z) << ',' << to_string(r.max_interp_error) << '\n';
  }
}

}  // namespace polydiff
