#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polydiff/any_matrix.hpp"
#include "polydiff/linalg.hpp"
#include "polydiff/power_series.hpp"
#include "polydiff/structure.hpp"
#include "test_support.hpp"

using namespace polydiff;
using polydiff::testing::Gen;
using polydiff::testing::Q;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  const Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

  Gen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = gen.rational(1000, 997);
    const Rational b = gen.rational(1000, 997);
    CHECK(Rational(a + b - b) == a);
    Rational c = a;
    c.canonicalize();
    CHECK(c == a);
    CHECK(c.get_den() > 0);
  }
}

TEST_CASE("scalar parsing and printing") {
  CHECK(parse_rational("3/4") == Q(3, 4));
  CHECK(parse_rational("-0.5") == Q(-1, 2));
  CHECK(parse_rational("1.25e1") == Q(25, 2));
  CHECK(parse_rational(" 7 ") == Q(7));
  CHECK(parse_rational("-6/8") == Q(-3, 4));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);

  CHECK(to_string(Q(-3, 4)) == "-3/4");
  CHECK(to_string(Q(5)) == "5");
  CHECK(to_string(0.5) == "0.5");

  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("1+i") == Complex(1, 1));
  CHECK(parse_complex("-1.5-2i") == Complex(-1.5, -2));
  CHECK(parse_complex("2") == Complex(2, 0));
  CHECK(parse_complex("1e-3+2e+1i") == Complex(1e-3, 20));
  CHECK(to_string(Complex(-0.5, 1.5)) == "-0.5+1.5i");
  CHECK(to_string(Complex(0, -1)) == "-i");
  CHECK(to_string(Complex(1.5, 0)) == "1.5");

  Gen gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational q = gen.rational(100000, 99999);
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("mat_apply") {
  const Matrix<Rational> id = Matrix<Rational>::identity(4);
  const Vector<Rational> v{Q(1), Q(2), Q(3), Q(4)};
  CHECK(mat_apply(id, v) == v);

  // p = 5 + x^3 -> p' = 3x^2
  const Matrix<Rational> dm = monomial_diff_matrix<Rational>(3);
  CHECK(mat_apply(dm, Vector<Rational>{Q(5), Q(0), Q(0), Q(1)}) == Vector<Rational>{Q(0), Q(0), Q(3), Q(0)});

  const Matrix<Rational> db = diff_matrix_bernstein<Rational>(4);
  CHECK(mat_apply(db, Vector<Rational>(5, Q(7, 3))) == Vector<Rational>(5, Q(0)));

  CHECK_THROWS_AS(mat_apply(dm, Vector<Rational>{Q(1), Q(2)}), DimensionError);

  // mixed fields promote upward
  const Vector<double> vd{5.0, 0.0, 0.0, 1.0};
  const Vector<double> out = mat_apply(dm, vd);
  CHECK(out == Vector<double>{0.0, 0.0, 3.0, 0.0});
}

TEST_CASE("mat_apply is linear over the rationals") {
  Gen gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = gen.rational();
    const auto u = gen.rational_vector(n);
    const auto v = gen.rational_vector(n);
    const Rational a = gen.rational();
    const Rational b = gen.rational();
    Vector<Rational> comb(n);
    for (std::size_t i = 0; i < n; ++i) comb[i] = a * u[i] + b * v[i];
    const auto mu = mat_apply(m, u);
    const auto mv = mat_apply(m, v);
    Vector<Rational> expect(n);
    for (std::size_t i = 0; i < n; ++i) expect[i] = a * mu[i] + b * mv[i];
    CHECK(mat_apply(m, comb) == expect);
  }
}

TEST_CASE("field-tagged values promote but never demote") {
  const AnyMatrix m = monomial_diff_matrix<Rational>(2);
  CHECK(field_of(convert(m, Field::real)) == Field::real);
  CHECK(field_of(convert(m, Field::complex)) == Field::complex);
  const AnyMatrix r = convert(m, Field::real);
  CHECK_THROWS_AS(convert(r, Field::rational), FieldError);
  CHECK_THROWS_AS(convert(convert(m, Field::complex), Field::real), FieldError);

  const AnyVector v = Vector<double>{1.0, 1.0, 1.0};
  const AnyVector out = mat_apply(m, v);
  CHECK(field_of(out) == Field::real);
  CHECK(std::get<Vector<double>>(out) == Vector<double>{1.0, 2.0, 0.0});
  CHECK_THROWS_AS(convert(v, Field::rational), FieldError);
}

TEST_CASE("mat_inf_norm") {
  CHECK(inf_norm(Matrix<Rational>(3, 3)) == 0.0);
  CHECK(inf_norm(diff_matrix_bernstein<Rational>(4)) == 8.0);
  CHECK(inf_norm(monomial_diff_matrix<Rational>(3)) == 3.0);
  const Matrix<Complex> c{{Complex(3, 4), Complex(0, 0)}, {Complex(1, 0), Complex(0, 1)}};
  CHECK(inf_norm(c) == doctest::Approx(5.0));
}

TEST_CASE("mat_power") {
  const Matrix<Rational> dm = monomial_diff_matrix<Rational>(3);
  CHECK(power(dm, 0) == Matrix<Rational>::identity(4));
  CHECK(is_zero_matrix(power(dm, 4)));
  CHECK(!is_zero_matrix(power(dm, 3)));
  CHECK(inf_norm_exact(power(diff_matrix_bernstein<Rational>(4), 4)) == Q(384));
  CHECK_THROWS_AS(power(Matrix<Rational>(2, 3), 2), DimensionError);
}

TEST_CASE("exact inverse and determinant") {
  const Matrix<Rational> a{{Q(2), Q(1)}, {Q(1), Q(1, 2)}};
  CHECK(determinant(a) == Q(0));
  CHECK_THROWS_AS(inverse(a), SingularMatrixError);

  Gen gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 7));
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = gen.rational();
    if (is_zero(determinant(m))) continue;
    CHECK(m * inverse(m) == Matrix<Rational>::identity(n));
  }

  const Matrix<double> d{{1e-3, 2.0}, {3.0, 4.0}};
  CHECK(approx_equal(Matrix<double>(d * inverse(d)), Matrix<double>::identity(2), 1e-14));
}

TEST_CASE("truncated power series") {
  // (1 - u)^{-1} = 1 + u + u^2 + ...
  const TruncatedSeries<Rational> s(std::vector<Rational>{Q(1), Q(-1), Q(0), Q(0)});
  const auto r = s.reciprocal();
  for (std::size_t k = 0; k <= 3; ++k) CHECK(r[k] == Q(1));
  CHECK_THROWS_AS(TruncatedSeries<Rational>(std::vector<Rational>{Q(0), Q(1)}).reciprocal(), std::domain_error);

  // (u + 2)^3 = 8 + 12u + 6u^2 + u^3
  const auto p = TruncatedSeries<Rational>::shifted_power(Q(2), 3, 4);
  CHECK(p.coefficients() == std::vector<Rational>{Q(8), Q(12), Q(6), Q(1), Q(0)});
  CHECK(p.derivative().coefficients() == std::vector<Rational>{Q(12), Q(12), Q(3), Q(0)});

  Gen gen(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c = gen.rational_vector(6);
    c[0] = gen.nonzero_rational();
    const TruncatedSeries<Rational> a(c);
    const auto prod = a * a.reciprocal();
    CHECK(prod.coefficients() == TruncatedSeries<Rational>::one(5).coefficients());
  }
}
