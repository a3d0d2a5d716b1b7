#pragma once

// Double-precision stability experiments: interpolating the constant 1 with
// Lagrange or confluent Hermite data on Chebyshev or equispaced nodes.

#include <array>
#include <cstddef>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

namespace polydiff {

enum class NodeFamily { chebyshev, equispaced };
enum class ExperimentKind { hermite_norms, hermite_error, lagrange_error };

inline constexpr std::array<std::size_t, 7> kFibonacciN{3, 5, 8, 13, 21, 34, 55};
inline constexpr std::size_t kDefaultGridPoints = 1001;

std::string_view node_family_name(NodeFamily f);
NodeFamily parse_node_family(std::string_view name);
std::string_view experiment_name(ExperimentKind k);
ExperimentKind parse_experiment(std::string_view name);

/// The n+1 nodes: cos(pi (n-j)/n) or -1 + 2j/n, ascending.
std::vector<double> experiment_nodes(NodeFamily family, std::size_t n);

struct ExperimentRecord {
  std::size_t n = 0;
  NodeFamily node_family = NodeFamily::chebyshev;
  std::size_t confluency = 1;
  double norm_D = 0.0;
  double norm_Z = 0.0;            ///< ||D * data(1)||_inf, exactly zero in exact arithmetic
  double max_interp_error = 0.0;  ///< max |p(z) - 1| over the grid
};

/// One row. lagrange_error forces confluency 1.
ExperimentRecord run_experiment_row(ExperimentKind kind, NodeFamily family, std::size_t confluency, std::size_t n,
                                    std::size_t grid_points = kDefaultGridPoints);

/// Rows for every n, computed concurrently, returned in the order of `ns`.
std::vector<ExperimentRecord> run_experiment(ExperimentKind kind, NodeFamily family, std::size_t confluency,
                                             std::span<const std::size_t> ns,
                                             std::size_t grid_points = kDefaultGridPoints);

/// '#' comment line, then the header "n,node_family,confluency,norm_D,norm_Z,max_err".
void write_experiment_csv(std::ostream& out, ExperimentKind kind, std::span<const ExperimentRecord> rows,
                          std::size_t grid_points = kDefaultGridPoints);

}  // namespace polydiff
