#pragma once

// Differentiation and antiderivative matrices for degree-graded bases
// (monomial, Chebyshev, Legendre, Newton and any three-term recurrence),
// plus simple and confluent divided differences.

#include "polydiff/basis.hpp"
#include "polydiff/matrix.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace polydiff {

// ---------------------------------------------------------------------------
// Named recurrences

template <Scalar T>
RecurrenceSpec<T> monomial_recurrence(std::size_t n) {
  return {std::vector<T>(n, from_int<T>(1)), std::vector<T>(n, T{}), std::vector<T>(n, T{})};
}

/// T_0 = 1, T_1 = x, T_{k+1} = 2x T_k - T_{k-1}.
template <Scalar T>
RecurrenceSpec<T> chebyshev_recurrence(std::size_t n) {
  const T half = from_rational<T>(make_rational(1, 2));
  RecurrenceSpec<T> rec{std::vector<T>(n, half), std::vector<T>(n, T{}), std::vector<T>(n, half)};
  if (n > 0) {
    rec.alpha[0] = from_int<T>(1);
    rec.gamma[0] = T{};
  }
  return rec;
}

/// (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}.
template <Scalar T>
RecurrenceSpec<T> legendre_recurrence(std::size_t n) {
  RecurrenceSpec<T> rec{std::vector<T>(n), std::vector<T>(n, T{}), std::vector<T>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    const long jj = static_cast<long>(j);
    rec.alpha[j] = from_rational<T>(make_rational(jj + 1, 2 * jj + 1));
    rec.gamma[j] = from_rational<T>(make_rational(jj, 2 * jj + 1));
  }
  return rec;
}

/// N_0 = 1, N_k = prod_{j<k} (x - z_j); uses z_0..z_{n-1} for dimension n+1.
template <Scalar T>
RecurrenceSpec<T> newton_recurrence(std::span<const T> z) {
  const std::size_t n = z.empty() ? 0 : z.size() - 1;
  return {std::vector<T>(n, from_int<T>(1)), std::vector<T>(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n)),
          std::vector<T>(n, T{})};
}

// ---------------------------------------------------------------------------
// Generic construction

/// Coefficients of x * p in the recurrence basis; p has degree < n.
template <Scalar T>
Vector<T> multiply_by_x(const RecurrenceSpec<T>& rec, std::span<const T> p) {
  const std::size_t dim = p.size();
  Vector<T> out(dim, T{});
  for (std::size_t j = 0; j < dim; ++j) {
    if (is_zero(p[j])) continue;
    if (j + 1 >= dim) throw DimensionError("multiply_by_x would leave the truncated basis");
    out[j + 1] += rec.alpha[j] * p[j];
    out[j] += rec.beta[j] * p[j];
    if (j > 0) out[j - 1] += rec.gamma[j] * p[j];
  }
  return out;
}

/// (n+1)x(n+1) differentiation matrix of the basis defined by `rec`.
///
/// Differentiating the recurrence gives
///   alpha_j phi'_{j+1} = (x - beta_j) phi'_j + phi_j - gamma_j phi'_{j-1},
/// so column j+1 follows from columns j and j-1 by one multiply-by-x.
/// Indices below zero contribute nothing.
template <Scalar T>
Matrix<T> diff_matrix_degree_graded(const RecurrenceSpec<T>& rec, std::size_t n) {
  rec.validate(n);
  Matrix<T> d(n + 1, n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    const T inv_alpha = T(from_int<T>(1) / rec.alpha[j]);
    // entries of column j+1 live in rows 0..j
    for (std::size_t m = 0; m <= j; ++m) {
      T acc{};
      if (m >= 1) acc += rec.alpha[m - 1] * d(m - 1, j);
      acc += (rec.beta[m] - rec.beta[j]) * d(m, j);
      if (m + 1 <= j) acc += rec.gamma[m + 1] * d(m + 1, j);
      if (m == j) acc += from_int<T>(1);
      if (j >= 1) acc -= rec.gamma[j] * d(m, j - 1);
      d(m, j + 1) = acc * inv_alpha;
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Closed forms

template <Scalar T>
Matrix<T> monomial_diff_matrix(std::size_t n) {
  Matrix<T> d(n + 1, n + 1);
  for (std::size_t k = 1; k <= n; ++k) d(k - 1, k) = from_int<T>(static_cast<long>(k));
  return d;
}

/// T_k' = 2k (T_{k-1} + T_{k-3} + ...) with the T_0 term halved (so k for odd k).
template <Scalar T>
Matrix<T> chebyshev_diff_matrix(std::size_t n) {
  Matrix<T> d(n + 1, n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    const long kk = static_cast<long>(k);
    for (std::size_t row = k - 1;; row -= 2) {
      d(row, k) = from_int<T>(row == 0 ? kk : 2 * kk);
      if (row < 2) break;
    }
  }
  return d;
}

/// P_k' = sum over j = k-1, k-3, ... >= 0 of (2j+1) P_j.
template <Scalar T>
Matrix<T> legendre_diff_matrix(std::size_t n) {
  Matrix<T> d(n + 1, n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t row = k - 1;; row -= 2) {
      d(row, k) = from_int<T>(2 * static_cast<long>(row) + 1);
      if (row < 2) break;
    }
  }
  return d;
}

/// Integral T_k = T_{k+1}/(2(k+1)) - T_{k-1}/(2(k-1)) (k >= 2), with
/// int T_0 = T_1 and int T_1 = (T_2 + T_0)/4. The constant row is left 0.
template <Scalar T>
Matrix<T> chebyshev_antideriv_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("chebyshev_antideriv_matrix needs n >= 1");
  Matrix<T> s(n + 1, n + 1);
  s(1, 0) = from_int<T>(1);
  if (n >= 2) s(2, 1) = from_rational<T>(make_rational(1, 4));
  for (std::size_t k = 2; k <= n; ++k) {
    const long kk = static_cast<long>(k);
    if (k + 1 <= n) s(k + 1, k) = from_rational<T>(make_rational(1, 2 * (kk + 1)));
    s(k - 1, k) = from_rational<T>(make_rational(-1, 2 * (kk - 1)));
  }
  return s;
}

/// Integral P_k = (P_{k+1} - P_{k-1})/(2k+1), int P_0 = P_1. The constant
/// row is left 0.
template <Scalar T>
Matrix<T> legendre_antideriv_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("legendre_antideriv_matrix needs n >= 1");
  Matrix<T> s(n + 1, n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const long kk = static_cast<long>(k);
    if (k + 1 <= n) s(k + 1, k) = from_rational<T>(make_rational(1, 2 * kk + 1));
    if (k >= 2) s(k - 1, k) = from_rational<T>(make_rational(-1, 2 * kk + 1));
  }
  return s;
}

/// Newton basis on z (repetitions allowed); dimension z.size().
template <Scalar T>
Matrix<T> newton_diff_matrix(std::span<const T> z) {
  if (z.empty()) throw std::invalid_argument("newton_diff_matrix needs at least one node");
  return diff_matrix_degree_graded(newton_recurrence(z), z.size() - 1);
}

/// Confluent Newton basis: node i is repeated s_i times.
template <Scalar T>
Matrix<T> newton_diff_matrix(const NodeSet<T>& nodes) {
  const std::vector<T> z = nodes.expanded();
  return newton_diff_matrix(std::span<const T>(z));
}

// ---------------------------------------------------------------------------
// Divided differences

template <Scalar T>
struct DividedDifferenceTable {
  std::vector<T> nodes;                ///< expanded, repeated per confluency
  std::vector<std::vector<T>> columns; ///< columns[k][i] = [P_i, ..., P_{i+k}]

  /// Newton coefficients a_j = [P_0, ..., P_j].
  std::vector<T> coefficients() const {
    std::vector<T> a;
    a.reserve(columns.size());
    for (const auto& c : columns) a.push_back(c.front());
    return a;
  }
};

/// Data is in the node-major Hermite layout: f(tau_i), f'(tau_i)/1!, ...
/// A run of m equal nodes takes f^{(m-1)}(tau_i)/(m-1)! straight from the data.
template <Scalar T>
DividedDifferenceTable<T> divided_difference_table(const NodeSet<T>& nodes, std::span<const T> data) {
  nodes.validate();
  const std::size_t dim = nodes.total_dimension();
  if (data.size() != dim) throw DimensionError("divided differences: data length differs from total confluency");

  DividedDifferenceTable<T> table;
  table.nodes = nodes.expanded();
  std::vector<std::size_t> owner;       // node index of each expanded slot
  std::vector<std::size_t> first_slot;  // data offset of each node
  for (std::size_t i = 0, off = 0; i < nodes.size(); ++i) {
    first_slot.push_back(off);
    owner.insert(owner.end(), nodes.confluency[i], i);
    off += nodes.confluency[i];
  }

  table.columns.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) table.columns[0].push_back(data[first_slot[owner[i]]]);
  for (std::size_t k = 1; k < dim; ++k) {
    const auto& prev = table.columns[k - 1];
    auto& cur = table.columns[k];
    for (std::size_t i = 0; i + k < dim; ++i) {
      if (owner[i] == owner[i + k]) {
        cur.push_back(data[first_slot[owner[i]] + k]);
      } else {
        cur.push_back(T((prev[i + 1] - prev[i]) / (table.nodes[i + k] - table.nodes[i])));
      }
    }
  }
  return table;
}

template <Scalar T>
Vector<T> divided_differences(const NodeSet<T>& nodes, std::span<const T> data) {
  return divided_difference_table(nodes, data).coefficients();
}

}  // namespace polydiff
