#pragma once

// Hermite interpolational bases: generalized barycentric weights from local
// Taylor/Laurent expansions, first-form evaluation, explicit basis elements
// H_{i,j}, and the differentiation matrix.
//
// Data layout is node-major with scaled derivatives:
//   [f(tau_0), f'(tau_0)/1!, ..., f^{(s_0-1)}(tau_0)/(s_0-1)!, f(tau_1), ...]

#include "polydiff/basis.hpp"
#include "polydiff/lagrange.hpp"
#include "polydiff/matrix.hpp"
#include "polydiff/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace polydiff {

/// 1/w(z) = sum_i sum_j beta_{i,j} / (z - tau_i)^{j+1}, with the stored
/// weights multiplied by `scale` to recover beta_{i,j}.
template <Scalar T>
struct GenBaryWeights {
  NodeSet<T> nodes;
  std::vector<std::vector<T>> weights;
  T scale = from_int<T>(1);

  T beta(std::size_t i, std::size_t j) const { return T(weights[i][j] * scale); }
};

/// Taylor coefficients 0..order of prod_{m != skip} (z - tau_m)^{s_m} about `center`.
template <Scalar T>
TruncatedSeries<T> partial_node_polynomial_taylor(const NodeSet<T>& nodes, const T& center, std::size_t order,
                                                  std::optional<std::size_t> skip = std::nullopt) {
  TruncatedSeries<T> s = TruncatedSeries<T>::one(order);
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    if (skip && *skip == m) continue;
    s *= TruncatedSeries<T>::shifted_power(T(center - nodes.nodes[m]), nodes.confluency[m], order);
  }
  return s;
}

/// Taylor coefficients 0..order of w(z) = prod (z - tau_m)^{s_m} about tau_center.
template <Scalar T>
TruncatedSeries<T> node_polynomial_taylor(const NodeSet<T>& nodes, std::size_t center, std::size_t order) {
  if (center >= nodes.size()) throw std::out_of_range("center node index out of range");
  return partial_node_polynomial_taylor(nodes, nodes.nodes[center], order);
}

/// Same, about an arbitrary point.
template <Scalar T>
TruncatedSeries<T> node_polynomial_taylor_at(const NodeSet<T>& nodes, const T& point, std::size_t order) {
  return partial_node_polynomial_taylor(nodes, point, order);
}

/// For each node, expand g_i(z) = w(z)/(z - tau_i)^{s_i} about tau_i, invert
/// the series, and read beta_{i, s_i-1-t} off coefficient t.
template <Scalar T>
GenBaryWeights<T> gen_bary_weights(const NodeSet<T>& nodes) {
  nodes.validate();
  GenBaryWeights<T> w{nodes, std::vector<std::vector<T>>(nodes.size())};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::size_t s = nodes.confluency[i];
    const TruncatedSeries<T> g = partial_node_polynomial_taylor(nodes, nodes.nodes[i], s - 1, i);
    const TruncatedSeries<T> r = g.reciprocal();
    w.weights[i].resize(s);
    for (std::size_t t = 0; t < s; ++t) w.weights[i][s - 1 - t] = r[t];
  }
  return w;
}

/// Copy whose stored weights have max modulus 1; `scale` carries the factor.
template <Scalar T>
  requires(!is_exact_v<T>)
GenBaryWeights<T> normalized(const GenBaryWeights<T>& w) {
  double biggest = 0.0;
  for (const auto& row : w.weights)
    for (const T& b : row) biggest = std::max(biggest, magnitude(T(b * w.scale)));
  if (biggest == 0.0 || !std::isfinite(biggest)) return w;
  GenBaryWeights<T> out = w;
  for (auto& row : out.weights)
    for (T& b : row) b = T(b * w.scale / biggest);
  out.scale = T(biggest);
  return out;
}

/// Lays out the scaled derivatives of x^k at the nodes: slot (i,j) = C(k,j) tau_i^{k-j}.
template <Scalar T>
Vector<T> hermite_data_of_monomial(const NodeSet<T>& nodes, std::size_t k) {
  Vector<T> out;
  out.reserve(nodes.total_dimension());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    T binom = from_int<T>(1);
    for (std::size_t j = 0; j < nodes.confluency[i]; ++j) {
      if (j > k) {
        out.push_back(T{});
        continue;
      }
      T v = binom;
      for (std::size_t r = 0; r < k - j; ++r) v *= nodes.nodes[i];
      out.push_back(v);
      binom = T(binom * from_int<T>(static_cast<long>(k - j)) / from_int<T>(static_cast<long>(j + 1)));
    }
  }
  return out;
}

/// First barycentric form
///   p(z) = w(z) sum_i sum_j sum_{k<=j} beta_{i,j} rho_{i,k} / (z - tau_i)^{j+1-k}.
/// At a node the stored value is returned.
template <Scalar T>
T hermite_eval(const GenBaryWeights<T>& w, std::span<const T> data, const T& z) {
  const NodeSet<T>& ns = w.nodes;
  if (data.size() != ns.total_dimension()) throw DimensionError("data length differs from total confluency");
  std::size_t off = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns.nodes[i] == z) return data[off];
    off += ns.confluency[i];
  }
  T sum{};
  off = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::size_t s = ns.confluency[i];
    const T u = T(from_int<T>(1) / (z - ns.nodes[i]));
    // inner(j) = sum_{k<=j} rho_{i,k} u^{j+1-k}, built by Horner in j
    T inner{};
    for (std::size_t j = 0; j < s; ++j) {
      inner = T((inner + data[off + j]) * u);
      sum += w.weights[i][j] * inner;
    }
    off += s;
  }
  return T(node_polynomial(ns, z) * sum * w.scale);
}

/// H_{i,j}(z) = sum_k beta_{i,j+k} w(z) (z - tau_i)^{-k-1}.
template <Scalar T>
T hermite_basis_element(const GenBaryWeights<T>& w, std::size_t i, std::size_t j, const T& z) {
  const NodeSet<T>& ns = w.nodes;
  if (i >= ns.size() || j >= ns.confluency[i]) throw std::out_of_range("Hermite basis index out of range");
  for (std::size_t l = 0; l < ns.size(); ++l) {
    if (ns.nodes[l] == z) return (l == i && j == 0) ? from_int<T>(1) : T{};
  }
  const T u = T(from_int<T>(1) / (z - ns.nodes[i]));
  T sum{};
  T upow = u;
  for (std::size_t k = 0; j + k < ns.confluency[i]; ++k) {
    sum += w.weights[i][j + k] * upow;
    upow *= u;
  }
  return T(node_polynomial(ns, z) * sum * w.scale);
}

/// Maps the Hermite layout of p to the layout of p'.
///
/// Rows (i, j < s_i-1) shift: out(i,j) = (j+1) in(i,j+1). The last row of
/// each node needs p^{(s_i)}(tau_i)/(s_i-1)! = s_i [u^{s_i}] p about tau_i.
/// Writing w = u^{s_i} g_i, the basis element H_{l,m} contributes
///   l != i:  sum_k beta_{l,m+k} g_i(tau_i) / (tau_i - tau_l)^{k+1}
///   l == i:  sum_k beta_{i,m+k} [u^{k+1}] g_i
/// to that Taylor coefficient.
template <Scalar T>
Matrix<T> diff_matrix_hermite(const GenBaryWeights<T>& w) {
  const NodeSet<T>& ns = w.nodes;
  const std::size_t dim = ns.total_dimension();
  Matrix<T> d(dim, dim);

  std::vector<std::size_t> offsets(ns.size());
  for (std::size_t i = 0, off = 0; i < ns.size(); ++i) {
    offsets[i] = off;
    off += ns.confluency[i];
  }

  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::size_t s = ns.confluency[i];
    const std::size_t base = offsets[i];
    for (std::size_t j = 0; j + 1 < s; ++j) d(base + j, base + j + 1) = from_int<T>(static_cast<long>(j + 1));

    const TruncatedSeries<T> g = partial_node_polynomial_taylor(ns, ns.nodes[i], s, i);
    const T factor = from_int<T>(static_cast<long>(s));
    const std::size_t row = base + s - 1;

    for (std::size_t l = 0; l < ns.size(); ++l) {
      const std::size_t sl = ns.confluency[l];
      if (l == i) {
        for (std::size_t m = 0; m < sl; ++m) {
          T acc{};
          for (std::size_t k = 0; m + k < sl; ++k) acc += w.weights[i][m + k] * g[k + 1];
          d(row, offsets[l] + m) = T(factor * acc * w.scale);
        }
        continue;
      }
      // powers of g_i(tau_i) / (tau_i - tau_l)
      const T ratio = T(from_int<T>(1) / (ns.nodes[i] - ns.nodes[l]));
      std::vector<T> pw(sl);
      pw[0] = T(g[0] * ratio);
      for (std::size_t k = 1; k < sl; ++k) pw[k] = T(pw[k - 1] * ratio);
      for (std::size_t m = 0; m < sl; ++m) {
        T acc{};
        for (std::size_t k = 0; m + k < sl; ++k) acc += w.weights[l][m + k] * pw[k];
        d(row, offsets[l] + m) = T(factor * acc * w.scale);
      }
    }
  }
  return d;
}

template <Scalar T>
Matrix<T> diff_matrix_hermite(const NodeSet<T>& nodes) {
  return diff_matrix_hermite(gen_bary_weights(nodes));
}

}  // namespace polydiff
