#pragma once

// Barycentric Lagrange interpolation and the Lagrange differentiation matrix.

#include "polydiff/basis.hpp"
#include "polydiff/matrix.hpp"

#include <cmath>
#include <optional>
#include <span>

namespace polydiff {

template <Scalar T>
struct BaryWeights {
  NodeSet<T> nodes;
  std::vector<T> weights;
};

namespace detail {

// Running product kept as mantissa * 2^exponent so long node lists neither
// overflow nor underflow before the final reciprocal.
template <Scalar T>
struct ScaledProduct {
  T mantissa = from_int<T>(1);
  long exponent = 0;

  void multiply(const T& factor) {
    mantissa *= factor;
    if constexpr (!is_exact_v<T>) {
      const double m = magnitude(mantissa);
      if (m == 0.0 || !std::isfinite(m)) return;
      int e = 0;
      std::frexp(m, &e);
      mantissa /= std::ldexp(1.0, e);
      exponent += e;
    }
  }

  /// 1 / (mantissa * 2^exponent)
  T reciprocal() const {
    if constexpr (is_exact_v<T>) {
      return T(from_int<T>(1) / mantissa);
    } else {
      return T(from_int<T>(1) / mantissa) * std::ldexp(1.0, static_cast<int>(-exponent));
    }
  }
};

template <Scalar T>
std::optional<std::size_t> node_hit(std::span<const T> nodes, const T& z) {
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k] == z) return k;
  }
  return std::nullopt;
}

}  // namespace detail

/// beta_k = prod_{j != k} (tau_k - tau_j)^{-1}. Duplicate nodes throw.
template <Scalar T>
BaryWeights<T> bary_weights(const NodeSet<T>& nodes) {
  nodes.validate();
  for (std::size_t s : nodes.confluency) {
    if (s != 1) throw std::invalid_argument("bary_weights needs confluency 1 at every node");
  }
  BaryWeights<T> w{nodes, std::vector<T>(nodes.size())};
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    detail::ScaledProduct<T> prod;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j != k) prod.multiply(T(nodes.nodes[k] - nodes.nodes[j]));
    }
    w.weights[k] = prod.reciprocal();
  }
  return w;
}

template <Scalar T>
BaryWeights<T> bary_weights(std::vector<T> nodes) {
  return bary_weights(NodeSet<T>::simple(std::move(nodes)));
}

/// Node polynomial w(z) = prod (z - tau_k)^{s_k}.
template <Scalar T>
T node_polynomial(const NodeSet<T>& nodes, const T& z) {
  T w = from_int<T>(1);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const T f = z - nodes.nodes[k];
    for (std::size_t r = 0; r < nodes.confluency[k]; ++r) w *= f;
  }
  return w;
}

/// p(z) = w(z) sum beta_k rho_k / (z - tau_k).
template <Scalar T>
T eval_first_form(const BaryWeights<T>& w, std::span<const T> values, const T& z) {
  if (values.size() != w.weights.size()) throw DimensionError("value count differs from node count");
  const std::span<const T> tau(w.nodes.nodes);
  if (auto hit = detail::node_hit(tau, z)) return values[*hit];
  T sum{};
  for (std::size_t k = 0; k < tau.size(); ++k) sum += w.weights[k] * values[k] / (z - tau[k]);
  return T(node_polynomial(w.nodes, z) * sum);
}

/// p(z) = (sum beta_k rho_k / (z - tau_k)) / (sum beta_k / (z - tau_k)).
template <Scalar T>
T eval_second_form(const BaryWeights<T>& w, std::span<const T> values, const T& z) {
  if (values.size() != w.weights.size()) throw DimensionError("value count differs from node count");
  const std::span<const T> tau(w.nodes.nodes);
  if (auto hit = detail::node_hit(tau, z)) return values[*hit];
  T num{};
  T den{};
  for (std::size_t k = 0; k < tau.size(); ++k) {
    const T t = T(w.weights[k] / (z - tau[k]));
    num += t * values[k];
    den += t;
  }
  return T(num / den);
}

/// d_ij = beta_j / (beta_i (tau_i - tau_j)) off the diagonal, rows sum to zero.
template <Scalar T>
Matrix<T> diff_matrix_lagrange(const BaryWeights<T>& w) {
  const std::size_t n = w.weights.size();
  const auto& tau = w.nodes.nodes;
  Matrix<T> d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    T diag{};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      d(i, j) = w.weights[j] / (w.weights[i] * (tau[i] - tau[j]));
      diag -= d(i, j);
    }
    d(i, i) = diag;
  }
  return d;
}

template <Scalar T>
Matrix<T> diff_matrix_lagrange(const NodeSet<T>& nodes) {
  return diff_matrix_lagrange(bary_weights(nodes));
}

/// Node values of p' from node values of p.
template <Scalar T>
Vector<T> lagrange_derivative_values(const NodeSet<T>& nodes, std::span<const T> values) {
  return mat_apply(diff_matrix_lagrange(nodes), values);
}

}  // namespace polydiff
