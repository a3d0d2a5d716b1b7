#pragma once

#include "polydiff/field.hpp"
#include "polydiff/matrix.hpp"

#include <random>
#include <vector>

namespace polydiff::testing {

inline Rational Q(long num, long den = 1) { return make_rational(num, den); }

/// Deterministic generator of small rationals and node sets.
class Gen {
 public:
  explicit Gen(std::uint32_t seed = 12345) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long max_num = 9, long max_den = 7) {
    return make_rational(integer(-max_num, max_num), integer(1, max_den));
  }

  Rational nonzero_rational(long max_num = 9, long max_den = 7) {
    for (;;) {
      Rational q = rational(max_num, max_den);
      if (sgn(q) != 0) return q;
    }
  }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::vector<Rational> rational_vector(std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational());
    return v;
  }

  /// n pairwise distinct rationals.
  std::vector<Rational> distinct_rationals(std::size_t n, long max_num = 12, long max_den = 5) {
    std::vector<Rational> v;
    while (v.size() < n) {
      Rational q = rational(max_num, max_den);
      if (std::find(v.begin(), v.end(), q) == v.end()) v.push_back(q);
    }
    return v;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace polydiff::testing

namespace polydiff::testing {

/// Dense polynomial in the monomial basis, ascending coefficients.
using Poly = std::vector<Rational>;

inline Poly poly_trim(Poly p) {
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
  return p;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

inline Poly poly_scale(const Poly& a, const Rational& s) {
  Poly c(a);
  for (auto& x : c) x *= s;
  return c;
}

/// (x - c) * p
inline Poly poly_mul_linear(const Poly& p, const Rational& c) {
  Poly out(p.size() + 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= c * p[i];
  }
  return out;
}

inline Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return Poly{Rational(0)};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<long>(k);
  return d;
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

/// Scaled Taylor data p^{(j)}(t)/j! for j < s.
inline std::vector<Rational> poly_scaled_derivatives(Poly p, const Rational& t, std::size_t s) {
  std::vector<Rational> out;
  Rational fact = 1;
  for (std::size_t j = 0; j < s; ++j) {
    if (j > 0) fact *= static_cast<long>(j);
    out.push_back(Rational(poly_eval(p, t) / fact));
    p = poly_derivative(p);
  }
  return out;
}

}  // namespace polydiff::testing
