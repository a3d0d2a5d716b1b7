#pragma once

// Basis-independent structure of differentiation matrices: monomial images
// X^k, the similarity V (columns X^k/k!), the nilpotent Jordan block J, the
// generalized inverse V J^T V^{-1}, and an independent change-of-basis oracle.

#include "polydiff/basis.hpp"
#include "polydiff/bernstein.hpp"
#include "polydiff/degree_graded.hpp"
#include "polydiff/hermite.hpp"
#include "polydiff/lagrange.hpp"
#include "polydiff/linalg.hpp"
#include "polydiff/matrix.hpp"

#include <stdexcept>
#include <variant>
#include <vector>

namespace polydiff {

/// Differentiation matrix of any basis, via the direct constructor for its family.
template <Scalar T>
Matrix<T> diff_matrix(const BasisSpec<T>& basis) {
  struct {
    Matrix<T> operator()(const DegreeGradedBasis<T>& b) const {
      switch (b.family) {
        case GradedFamily::monomial:
          return monomial_diff_matrix<T>(b.degree);
        case GradedFamily::chebyshev:
          return chebyshev_diff_matrix<T>(b.degree);
        case GradedFamily::legendre:
          return legendre_diff_matrix<T>(b.degree);
        case GradedFamily::newton:
        case GradedFamily::general:
          break;
      }
      return diff_matrix_degree_graded(b.recurrence, b.degree);
    }
    Matrix<T> operator()(const LagrangeBasis<T>& b) const { return diff_matrix_lagrange(b.nodes); }
    Matrix<T> operator()(const HermiteBasis<T>& b) const { return diff_matrix_hermite(b.nodes); }
    Matrix<T> operator()(const BernsteinBasis& b) const { return diff_matrix_bernstein<T>(b.degree); }
  } visitor;
  return std::visit(visitor, basis);
}

template <Scalar T>
BasisSpec<T> monomial_basis(std::size_t n) {
  return DegreeGradedBasis<T>{GradedFamily::monomial, monomial_recurrence<T>(n), n};
}

template <Scalar T>
BasisSpec<T> chebyshev_basis(std::size_t n) {
  return DegreeGradedBasis<T>{GradedFamily::chebyshev, chebyshev_recurrence<T>(n), n};
}

template <Scalar T>
BasisSpec<T> legendre_basis(std::size_t n) {
  return DegreeGradedBasis<T>{GradedFamily::legendre, legendre_recurrence<T>(n), n};
}

template <Scalar T>
BasisSpec<T> newton_basis(const std::vector<T>& z) {
  if (z.empty()) throw std::invalid_argument("Newton basis needs at least one node");
  return DegreeGradedBasis<T>{GradedFamily::newton, newton_recurrence(std::span<const T>(z)), z.size() - 1};
}

/// Columns X^0 .. X^n: coefficients of x^k in the basis. X^0 is 1_phi.
template <Scalar T>
struct MonomialImages {
  BasisSpec<T> basis;
  std::vector<Vector<T>> columns;

  const Vector<T>& one() const { return columns.front(); }
};

template <Scalar T>
MonomialImages<T> monomial_images(const BasisSpec<T>& basis, std::size_t n) {
  const std::size_t dim = dimension(basis);
  if (n + 1 > dim) throw std::invalid_argument("basis dimension is smaller than n+1");
  MonomialImages<T> out{basis, {}};
  out.columns.reserve(n + 1);

  if (const auto* dg = std::get_if<DegreeGradedBasis<T>>(&basis)) {
    Vector<T> x(dim, T{});
    x[0] = from_int<T>(1);
    out.columns.push_back(x);
    for (std::size_t k = 1; k <= n; ++k) {
      x = multiply_by_x(dg->recurrence, std::span<const T>(x));
      out.columns.push_back(x);
    }
  } else if (const auto* lg = std::get_if<LagrangeBasis<T>>(&basis)) {
    Vector<T> x(dim, from_int<T>(1));
    out.columns.push_back(x);
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < dim; ++i) x[i] *= lg->nodes.nodes[i];
      out.columns.push_back(x);
    }
  } else if (const auto* hm = std::get_if<HermiteBasis<T>>(&basis)) {
    for (std::size_t k = 0; k <= n; ++k) out.columns.push_back(hermite_data_of_monomial(hm->nodes, k));
  } else {
    const auto& bz = std::get<BernsteinBasis>(basis);
    for (std::size_t k = 0; k <= n; ++k) out.columns.push_back(bernstein_monomial_coeffs<T>(bz.degree, k));
  }
  return out;
}

template <Scalar T>
MonomialImages<T> monomial_images(const BasisSpec<T>& basis) {
  return monomial_images(basis, dimension(basis) - 1);
}

/// V with column k = X^k / k!. Throws SingularMatrixError if V is singular.
template <Scalar T>
Matrix<T> build_V(const MonomialImages<T>& images) {
  const std::size_t dim = dimension(images.basis);
  if (images.columns.size() != dim) throw DimensionError("build_V needs the full image set X^0..X^n");
  Matrix<T> v(dim, dim);
  T factorial = from_int<T>(1);
  for (std::size_t k = 0; k < dim; ++k) {
    if (k > 0) factorial *= from_int<T>(static_cast<long>(k));
    for (std::size_t i = 0; i < dim; ++i) v(i, k) = T(images.columns[k][i] / factorial);
  }
  if (is_zero(determinant(v))) throw SingularMatrixError("V is singular; basis construction is broken");
  return v;
}

/// Single nilpotent Jordan block: ones on the superdiagonal.
template <Scalar T>
Matrix<T> jordan_block(std::size_t dim) {
  Matrix<T> j(dim, dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) j(i, i + 1) = from_int<T>(1);
  return j;
}

/// D V == V J, exactly or to rel_tol for floating fields.
template <Scalar T>
bool jordan_check(const Matrix<T>& d, const Matrix<T>& v, double rel_tol = 1e-10) {
  if (!d.square() || !v.square() || d.rows() != v.rows()) return false;
  const Matrix<T> j = jordan_block<T>(d.rows());
  return approx_equal(Matrix<T>(d * v), Matrix<T>(v * j), rel_tol);
}

/// D+ = V J^T V^{-1}; a generalized inverse of D, not the Moore-Penrose one.
template <Scalar T>
Matrix<T> pseudo_inverse(const Matrix<T>& d, const Matrix<T>& v) {
  if (!d.square() || !v.square() || d.rows() != v.rows()) throw DimensionError("pseudo_inverse dimension mismatch");
  const Matrix<T> jt = transpose(jordan_block<T>(v.rows()));
  return v * jt * inverse(v);
}

/// D D+ D == D and D+ D D+ == D+.
template <Scalar T>
bool verify_generalized_inverse(const Matrix<T>& d, const Matrix<T>& dp, double rel_tol = 1e-10) {
  if (d.rows() != dp.cols() || d.cols() != dp.rows()) return false;
  return approx_equal(Matrix<T>(d * dp * d), d, rel_tol) && approx_equal(Matrix<T>(dp * d * dp), dp, rel_tol);
}

/// Smallest k with D^k == 0 (entries compared exactly). Throws if k would exceed dim.
template <Scalar T>
std::size_t nilpotency_index(const Matrix<T>& d) {
  if (!d.square()) throw DimensionError("nilpotency_index of a non-square matrix");
  Matrix<T> p = Matrix<T>::identity(d.rows());
  for (std::size_t k = 0; k <= d.rows(); ++k) {
    if (is_zero_matrix(p)) return k;
    p = p * d;
  }
  throw std::domain_error("matrix is not nilpotent within its dimension");
}

/// D_phi = M D_monomial M^{-1}, with M's columns the monomial images X^k.
/// Built only from the images, never from a family's own constructor.
template <Scalar T>
Matrix<T> conjugation_oracle(const BasisSpec<T>& basis) {
  const MonomialImages<T> images = monomial_images(basis);
  const std::size_t dim = images.columns.size();
  Matrix<T> m(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) m.set_column(k, images.columns[k]);
  return m * monomial_diff_matrix<T>(dim - 1) * inverse(m);
}

}  // namespace polydiff
