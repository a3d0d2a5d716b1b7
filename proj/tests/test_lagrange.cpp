#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polydiff/lagrange.hpp"
#include "polydiff/structure.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

using namespace polydiff;
using namespace polydiff::testing;

namespace {

NodeSet<Rational> nodes_q(std::vector<Rational> v) { return NodeSet<Rational>::simple(std::move(v)); }

std::vector<Rational> values_of(const Poly& p, const std::vector<Rational>& tau) {
  std::vector<Rational> out;
  for (const auto& t : tau) out.push_back(poly_eval(p, t));
  return out;
}

}  // namespace

TEST_CASE("barycentric weights") {
  CHECK(bary_weights(nodes_q({Q(-1), Q(1)})).weights == std::vector<Rational>{Q(-1, 2), Q(1, 2)});
  CHECK(bary_weights(nodes_q({Q(-1), Q(-1, 2), Q(1, 2), Q(1)})).weights ==
        std::vector<Rational>{Q(-2, 3), Q(4, 3), Q(-4, 3), Q(2, 3)});

  const auto wc = bary_weights(NodeSet<Complex>::simple({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  const std::vector<Complex> expect{{0.25, 0}, {0, 0.25}, {-0.25, 0}, {0, -0.25}};
  CHECK(approx_equal(std::span<const Complex>(wc.weights), std::span<const Complex>(expect), 1e-15));

  CHECK_THROWS_AS(bary_weights(nodes_q({Q(0), Q(1), Q(0)})), std::invalid_argument);
}

TEST_CASE("barycentric weights are the residues of 1/w") {
  Gen gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto tau = gen.distinct_rationals(static_cast<std::size_t>(gen.integer(1, 8)));
    const auto w = bary_weights(nodes_q(tau));
    Rational z = gen.rational();
    while (std::find(tau.begin(), tau.end(), z) != tau.end()) z += Q(1, 97);
    Rational sum = 0;
    for (std::size_t k = 0; k < tau.size(); ++k) sum += w.weights[k] / (z - tau[k]);
    CHECK(sum * node_polynomial(w.nodes, z) == 1);
  }
}

TEST_CASE("first and second barycentric forms") {
  const auto w3 = bary_weights(nodes_q({Q(-1), Q(0), Q(1)}));
  const std::vector<Rational> sq{Q(1), Q(0), Q(1)};
  const std::vector<Rational> constant(3, Q(7, 5));
  for (auto eval : {eval_first_form<Rational>, eval_second_form<Rational>}) {
    CHECK(eval(w3, constant, Q(3, 11)) == Q(7, 5));
    CHECK(eval(w3, sq, Q(1, 2)) == Q(1, 4));
    CHECK(eval(w3, sq, Q(0)) == Q(0));
    CHECK(eval(w3, std::vector<Rational>{Q(4), Q(5), Q(6)}, Q(0)) == Q(5));
  }
}

TEST_CASE("first and second forms agree on random double node sets") {
  Gen gen(17);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 50));
    std::vector<double> tau;
    for (std::size_t k = 0; k < n; ++k) tau.push_back(std::cos(std::numbers::pi * (k + gen.real(-0.3, 0.3)) / (n - 1)));
    std::sort(tau.begin(), tau.end());
    tau.erase(std::unique(tau.begin(), tau.end()), tau.end());
    const auto w = bary_weights(NodeSet<double>::simple(tau));
    std::vector<double> rho;
    for (double t : tau) rho.push_back(std::exp(t) * std::cos(3 * t));
    const double z = gen.real(-1, 1);
    const double f1 = eval_first_form(w, std::span<const double>(rho), z);
    const double f2 = eval_second_form(w, std::span<const double>(rho), z);
    worst = std::max(worst, std::abs(f1 - f2) / std::max(std::abs(f2), 1e-300));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("Lagrange differentiation matrix for tau = [-1,-1/2,1/2,1]") {
  const auto d = diff_matrix_lagrange(nodes_q({Q(-1), Q(-1, 2), Q(1, 2), Q(1)}));
  const long raw[4][4] = {{-19, 24, -8, 3}, {-6, 2, 6, -2}, {2, -6, -2, 6}, {-3, 8, -24, 19}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(d(i, j) == Q(raw[i][j], 6));
}

TEST_CASE("Lagrange differentiation matrix on the fourth roots of unity") {
  const auto d = diff_matrix_lagrange(NodeSet<Complex>::simple({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  const Matrix<Complex> expect = Complex(0.5, 0) * Matrix<Complex>{{{3, 0}, {-1, 1}, {-1, 0}, {-1, -1}},
                                                                   {{-1, 1}, {0, -3}, {1, 1}, {0, 1}},
                                                                   {{1, 0}, {1, 1}, {-3, 0}, {1, -1}},
                                                                   {{-1, -1}, {0, -1}, {1, -1}, {0, 3}}};
  CHECK(approx_equal(d, expect, 1e-13));
}

TEST_CASE("tau = [-1,-1/3,1/3,1]: the integer-scaled matrix is 4 D") {
  const auto d = diff_matrix_lagrange(nodes_q({Q(-1), Q(-1, 3), Q(1, 3), Q(1)}));
  CHECK(d(0, 1) == Q(9, 2));
  const long scaled[4][4] = {{-11, 18, -9, 2}, {-2, -3, 6, -1}, {1, -6, 3, 2}, {-2, 9, -18, 11}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(4 * d(i, j) == scaled[i][j]);
}

TEST_CASE("Lagrange D: row sums, polynomial exactness, nilpotency") {
  Gen gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto tau = gen.distinct_rationals(static_cast<std::size_t>(gen.integer(1, 9)));
    const auto ns = nodes_q(tau);
    const auto d = diff_matrix_lagrange(ns);
    const std::size_t n = tau.size();
    CHECK(mat_apply(d, std::vector<Rational>(n, Q(1))) == std::vector<Rational>(n, Q(0)));
    for (std::size_t k = 0; k < n; ++k) {
      Poly xk(k + 1, Rational(0));
      xk[k] = 1;
      CHECK(mat_apply(d, values_of(xk, tau)) == values_of(poly_derivative(xk), tau));
    }
    CHECK(nilpotency_index(d) == n);
  }
}

TEST_CASE("lagrange_derivative_values") {
  const auto n3 = nodes_q({Q(-1), Q(0), Q(1)});
  CHECK(lagrange_derivative_values(n3, std::span<const Rational>(std::vector<Rational>{Q(-1), Q(0), Q(1)})) ==
        std::vector<Rational>{Q(1), Q(1), Q(1)});
  CHECK(lagrange_derivative_values(n3, std::span<const Rational>(std::vector<Rational>{Q(1), Q(0), Q(1)})) ==
        std::vector<Rational>{Q(-2), Q(0), Q(2)});
  const auto n4 = nodes_q({Q(-1), Q(-1, 2), Q(1, 2), Q(1)});
  const std::vector<Rational> cubes{Q(-1), Q(-1, 8), Q(1, 8), Q(1)};
  const auto b = lagrange_derivative_values(n4, std::span<const Rational>(cubes));
  CHECK(b == std::vector<Rational>{Q(3), Q(3, 4), Q(3, 4), Q(3)});
  // p'(z) from the same weights
  const auto w = bary_weights(n4);
  CHECK(eval_first_form(w, std::span<const Rational>(b), Q(1, 3)) == Q(1, 3));
  CHECK_THROWS(lagrange_derivative_values(nodes_q({Q(1), Q(1)}), std::span<const Rational>(cubes)));
}

TEST_CASE("Lagrange construction cost grows quadratically") {
  const auto cheb = [](std::size_t n) {
    std::vector<double> t;
    for (std::size_t j = 0; j < n; ++j) t.push_back(std::cos(std::numbers::pi * (j + 0.5) / n));
    return NodeSet<double>::simple(t);
  };
  const auto time_build = [&](std::size_t n) {
    const auto ns = cheb(n);
    double best = 1e300;
    for (int rep = 0; rep < 15; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto d = diff_matrix_lagrange(ns);
      const auto t1 = std::chrono::steady_clock::now();
      CHECK(d.rows() == n);
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
  };
  const double t100 = time_build(100);
  const double t200 = time_build(200);
  const double ratio = t200 / t100;
  MESSAGE("n=100 -> 200 time ratio " << ratio);
  CHECK(ratio > 2.0);  // clearly superlinear
  CHECK(ratio < 6.0);  // clearly subcubic (8x)
}
