#pragma once

// Basis descriptors: node sets with confluencies, three-term recurrences and
// the tagged BasisSpec covering every supported family.

#include "polydiff/field.hpp"

#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace polydiff {

/// Interpolation nodes tau_i, each carrying a confluency s_i >= 1.
template <Scalar T>
struct NodeSet {
  std::vector<T> nodes;
  std::vector<std::size_t> confluency;

  static NodeSet simple(std::vector<T> nodes) {
    NodeSet ns{std::move(nodes), {}};
    ns.confluency.assign(ns.nodes.size(), 1);
    return ns;
  }

  std::size_t size() const noexcept { return nodes.size(); }

  std::size_t total_dimension() const {
    return std::accumulate(confluency.begin(), confluency.end(), std::size_t{0});
  }

  /// Offset of node i's first slot in the node-major data layout.
  std::size_t offset(std::size_t i) const {
    return std::accumulate(confluency.begin(), confluency.begin() + static_cast<std::ptrdiff_t>(i), std::size_t{0});
  }

  /// Each node repeated s_i times, in order.
  std::vector<T> expanded() const {
    std::vector<T> out;
    out.reserve(total_dimension());
    for (std::size_t i = 0; i < nodes.size(); ++i) out.insert(out.end(), confluency[i], nodes[i]);
    return out;
  }

  /// Throws std::invalid_argument unless nodes are pairwise distinct and every s_i >= 1.
  void validate() const {
    if (confluency.size() != nodes.size()) throw std::invalid_argument("confluency list length differs from node count");
    for (std::size_t s : confluency) {
      if (s == 0) throw std::invalid_argument("confluency must be at least 1");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (nodes[i] == nodes[j]) {
          throw std::invalid_argument("duplicate nodes at positions " + std::to_string(i) + " and " + std::to_string(j));
        }
      }
    }
  }
};

/// x phi_j = alpha_j phi_{j+1} + beta_j phi_j + gamma_j phi_{j-1}.
template <Scalar T>
struct RecurrenceSpec {
  std::vector<T> alpha;
  std::vector<T> beta;
  std::vector<T> gamma;

  /// Throws unless the first n entries of each array exist and alpha_0..alpha_{n-1} are nonzero.
  void validate(std::size_t n) const {
    if (alpha.size() < n || beta.size() < n || gamma.size() < n) {
      throw std::invalid_argument("recurrence needs at least " + std::to_string(n) + " coefficients per array");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(alpha[j])) throw std::invalid_argument("alpha_" + std::to_string(j) + " is zero");
    }
  }
};

enum class GradedFamily { monomial, chebyshev, legendre, newton, general };

template <Scalar T>
struct DegreeGradedBasis {
  GradedFamily family = GradedFamily::general;
  RecurrenceSpec<T> recurrence;
  std::size_t degree = 0;
};

template <Scalar T>
struct LagrangeBasis {
  NodeSet<T> nodes;
};

template <Scalar T>
struct HermiteBasis {
  NodeSet<T> nodes;
};

struct BernsteinBasis {
  std::size_t degree = 0;
};

template <Scalar T>
using BasisSpec = std::variant<DegreeGradedBasis<T>, LagrangeBasis<T>, HermiteBasis<T>, BernsteinBasis>;

template <Scalar T>
std::size_t dimension(const BasisSpec<T>& basis) {
  struct {
    std::size_t operator()(const DegreeGradedBasis<T>& b) const { return b.degree + 1; }
    std::size_t operator()(const LagrangeBasis<T>& b) const { return b.nodes.size(); }
    std::size_t operator()(const HermiteBasis<T>& b) const { return b.nodes.total_dimension(); }
    std::size_t operator()(const BernsteinBasis& b) const { return b.degree + 1; }
  } visitor;
  return std::visit(visitor, basis);
}

std::string family_name(GradedFamily f);

template <Scalar T>
std::string basis_name(const BasisSpec<T>& basis) {
  struct {
    std::string operator()(const DegreeGradedBasis<T>& b) const { return family_name(b.family); }
    std::string operator()(const LagrangeBasis<T>&) const { return "lagrange"; }
    std::string operator()(const HermiteBasis<T>&) const { return "hermite"; }
    std::string operator()(const BernsteinBasis&) const { return "bernstein"; }
  } visitor;
  return std::visit(visitor, basis);
}

}  // namespace polydiff
