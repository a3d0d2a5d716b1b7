#pragma once

// Dense row-major matrices over one scalar field. Every differentiation
// matrix acts on column coefficient vectors: b = D * a.

#include "polydiff/field.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace polydiff {

template <Scalar T>
using Vector = std::vector<T>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <Scalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = from_int<T>(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vector<T> column(std::size_t j) const {
    Vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_column(std::size_t j, std::span<const T> values) {
    if (values.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
  }

  std::span<const T> entries() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Scalar To, Scalar From>
  requires promotes_to_v<From, To>
Matrix<To> promote_matrix(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = promote<To>(m(i, j));
  return out;
}

template <Scalar To, Scalar From>
  requires promotes_to_v<From, To>
Vector<To> promote_vector(std::span<const From> v) {
  Vector<To> out;
  out.reserve(v.size());
  for (const From& x : v) out.push_back(promote<To>(x));
  return out;
}

/// M * v. Mixed fields promote to the higher one.
template <Scalar TM, Scalar TV>
Vector<common_field_t<TM, TV>> mat_apply(const Matrix<TM>& m, std::span<const TV> v) {
  using R = common_field_t<TM, TV>;
  if (m.cols() != v.size()) throw DimensionError("matrix/vector dimension mismatch");
  Vector<R> out(m.rows(), R{});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    R acc{};
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (is_zero(m(i, j))) continue;
      acc += promote<R>(m(i, j)) * promote<R>(v[j]);
    }
    out[i] = acc;
  }
  return out;
}

template <Scalar TM, Scalar TV>
Vector<common_field_t<TM, TV>> mat_apply(const Matrix<TM>& m, const Vector<TV>& v) {
  return mat_apply(m, std::span<const TV>(v));
}

template <Scalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <Scalar T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference dimension mismatch");
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <Scalar T>
Matrix<T> operator*(const T& s, const Matrix<T>& a) {
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

template <Scalar T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Maximum absolute row sum.
template <Scalar T>
double inf_norm(const Matrix<T>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (const T& x : m.row(i)) s += magnitude(x);
    best = std::max(best, s);
  }
  return best;
}

/// Exact infinity norm for rational matrices.
inline Rational inf_norm_exact(const Matrix<Rational>& m) {
  Rational best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (const Rational& x : m.row(i)) s += abs(x);
    if (s > best) best = s;
  }
  return best;
}

template <Scalar T>
double inf_norm(std::span<const T> v) {
  double best = 0.0;
  for (const T& x : v) best = std::max(best, magnitude(x));
  return best;
}

template <Scalar T>
double max_abs(const Matrix<T>& m) {
  double best = 0.0;
  for (const T& x : m.entries()) best = std::max(best, magnitude(x));
  return best;
}

template <Scalar T>
Matrix<T> power(const Matrix<T>& m, std::size_t k) {
  if (!m.square()) throw DimensionError("matrix power of a non-square matrix");
  Matrix<T> result = Matrix<T>::identity(m.rows());
  for (std::size_t step = 0; step < k; ++step) result = result * m;
  return result;
}

template <Scalar T>
bool is_zero_matrix(const Matrix<T>& m) {
  return std::ranges::all_of(m.entries(), [](const T& x) { return is_zero(x); });
}

/// Exact equality for rationals; for floating fields, max-entry difference
/// within rel_tol times the larger max-entry magnitude (absolute near zero).
template <Scalar T>
bool approx_equal(const Matrix<T>& a, const Matrix<T>& b, double rel_tol = 1e-10) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    const double scale = std::max({max_abs(a), max_abs(b), 1.0});
    double diff = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) diff = std::max(diff, magnitude(T(a(i, j) - b(i, j))));
    return diff <= rel_tol * scale;
  }
}

template <Scalar T>
bool approx_equal(std::span<const T> a, std::span<const T> b, double rel_tol = 1e-10) {
  if (a.size() != b.size()) return false;
  if constexpr (is_exact_v<T>) {
    return std::ranges::equal(a, b);
  } else {
    double scale = 1.0;
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      scale = std::max({scale, magnitude(a[i]), magnitude(b[i])});
      diff = std::max(diff, magnitude(T(a[i] - b[i])));
    }
    return diff <= rel_tol * scale;
  }
}

}  // namespace polydiff
