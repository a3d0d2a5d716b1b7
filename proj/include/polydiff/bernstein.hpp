#pragma once

// Bernstein basis B_i^n(x) = C(n,i) x^i (1-x)^{n-i} on [0,1]. The derivative
// is kept in the same degree-n basis.

#include "polydiff/matrix.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace polydiff {

/// Tridiagonal: [D]_{i,i} = 2i-n, [D]_{i,i-1} = -i, [D]_{i,i+1} = n-i.
template <Scalar T>
Matrix<T> diff_matrix_bernstein(std::size_t n) {
  Matrix<T> d(n + 1, n + 1);
  const long nn = static_cast<long>(n);
  for (std::size_t i = 0; i <= n; ++i) {
    const long ii = static_cast<long>(i);
    d(i, i) = from_int<T>(2 * ii - nn);
    if (i >= 1) d(i, i - 1) = from_int<T>(-ii);
    if (i + 1 <= n) d(i, i + 1) = from_int<T>(nn - ii);
  }
  return d;
}

/// de Casteljau evaluation of sum c_i B_i^n(x), n = coeffs.size() - 1.
template <Scalar T>
T bernstein_eval(std::span<const T> coeffs, const T& x) {
  if (coeffs.empty()) throw std::invalid_argument("bernstein_eval needs at least one coefficient");
  std::vector<T> b(coeffs.begin(), coeffs.end());
  const T one_minus_x = from_int<T>(1) - x;
  for (std::size_t level = 1; level < b.size(); ++level) {
    for (std::size_t i = 0; i + level < b.size(); ++i) b[i] = one_minus_x * b[i] + x * b[i + 1];
  }
  return b[0];
}

/// Bernstein coefficients of x^k in degree n: entry i is C(i,k)/C(n,k).
template <Scalar T>
Vector<T> bernstein_monomial_coeffs(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("x^k is not representable in degree n < k");
  Vector<T> out(n + 1, T{});
  for (std::size_t i = k; i <= n; ++i) {
    mpz_class num;
    mpz_class den;
    mpz_bin_uiui(num.get_mpz_t(), i, k);
    mpz_bin_uiui(den.get_mpz_t(), n, k);
    Rational q(num, den);
    q.canonicalize();
    out[i] = from_rational<T>(q);
  }
  return out;
}

struct BernsteinNormRow {
  std::size_t n = 0;
  Rational norm_d;        ///< ||D||_inf
  Rational norm_d_pow_n;  ///< ||D^n||_inf
  bool next_power_zero = false;  ///< D^{n+1} == 0
};

/// Exact ||D||_inf, ||D^n||_inf and the D^{n+1} = 0 check for 1 <= n <= n_max.
std::vector<BernsteinNormRow> bernstein_norm_table(std::size_t n_max);

}  // namespace polydiff
