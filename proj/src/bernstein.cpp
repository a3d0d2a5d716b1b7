#include "polydiff/bernstein.hpp"

namespace polydiff {

std::vector<BernsteinNormRow> bernstein_norm_table(std::size_t n_max) {
  std::vector<BernsteinNormRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Matrix<Rational> d = diff_matrix_bernstein<Rational>(n);
    const Matrix<Rational> dn = power(d, n);
    rows.push_back({n, inf_norm_exact(d), inf_norm_exact(dn), is_zero_matrix(Matrix<Rational>(dn * d))});
  }
  return rows;
}

}  // namespace polydiff
