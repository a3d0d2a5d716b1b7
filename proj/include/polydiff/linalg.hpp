#pragma once

// Gauss-Jordan inversion. Exact fields pivot on the first nonzero entry;
// floating fields use partial pivoting.

#include "polydiff/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace polydiff {

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <Scalar T>
std::size_t choose_pivot(const Matrix<T>& a, std::size_t col) {
  std::size_t best = a.rows();
  double best_mag = 0.0;
  for (std::size_t r = col; r < a.rows(); ++r) {
    if (is_zero(a(r, col))) continue;
    if constexpr (is_exact_v<T>) {
      return r;
    } else {
      const double m = magnitude(a(r, col));
      if (m > best_mag) {
        best_mag = m;
        best = r;
      }
    }
  }
  return best;
}

template <Scalar T>
void swap_rows(Matrix<T>& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

}  // namespace detail

template <Scalar T>
Matrix<T> inverse(Matrix<T> a) {
  if (!a.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = detail::choose_pivot(a, col);
    if (p == n) throw SingularMatrixError("matrix is singular");
    detail::swap_rows(a, p, col);
    detail::swap_rows(inv, p, col);
    const T pivot_inv = T(from_int<T>(1) / a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= pivot_inv;
      inv(col, j) *= pivot_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const T f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

template <Scalar T>
T determinant(Matrix<T> a) {
  if (!a.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  T det = from_int<T>(1);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = detail::choose_pivot(a, col);
    if (p == n) return T{};
    if (p != col) {
      detail::swap_rows(a, p, col);
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const T f = T(a(r, col) / a(col, col));
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

}  // namespace polydiff
