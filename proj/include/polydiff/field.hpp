#pragma once

// Scalar fields used throughout: exact rationals (GMP), real doubles and
// complex doubles. Promotion runs rational -> real -> complex and never back.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polydiff {

using Rational = mpq_class;
using Complex = std::complex<double>;

enum class Field { rational = 0, real = 1, complex = 2 };

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double> || std::same_as<T, Complex>;

/// Raised when a value would have to move down the promotion ladder.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <Scalar T>
constexpr Field field_of() {
  if constexpr (std::same_as<T, Rational>) {
    return Field::rational;
  } else if constexpr (std::same_as<T, double>) {
    return Field::real;
  } else {
    return Field::complex;
  }
}

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

template <Scalar From, Scalar To>
inline constexpr bool promotes_to_v = static_cast<int>(field_of<From>()) <= static_cast<int>(field_of<To>());

template <Scalar A, Scalar B>
using common_field_t = std::conditional_t<promotes_to_v<A, B>, B, A>;

std::string_view field_name(Field f);
Field parse_field(std::string_view name);

/// Lowest-terms rational num/den; den must be nonzero.
Rational make_rational(long num, long den = 1);

template <Scalar T>
T from_rational(const Rational& q) {
  if constexpr (std::same_as<T, Rational>) {
    return q;
  } else if constexpr (std::same_as<T, double>) {
    return q.get_d();
  } else {
    return Complex{q.get_d(), 0.0};
  }
}

template <Scalar T>
T from_int(long v) {
  if constexpr (std::same_as<T, Complex>) {
    return Complex{static_cast<double>(v), 0.0};
  } else {
    return T(v);
  }
}

template <Scalar To, Scalar From>
  requires promotes_to_v<From, To>
To promote(const From& v) {
  if constexpr (std::same_as<To, From>) {
    return v;
  } else if constexpr (std::same_as<From, Rational>) {
    return from_rational<To>(v);
  } else {
    return Complex{v, 0.0};
  }
}

/// |v| as a double (modulus for complex).
template <Scalar T>
double magnitude(const T& v) {
  if constexpr (std::same_as<T, Rational>) {
    return Rational(abs(v)).get_d();
  } else {
    return std::abs(v);
  }
}

template <Scalar T>
bool is_zero(const T& v) {
  if constexpr (std::same_as<T, Rational>) {
    return sgn(v) == 0;
  } else {
    return v == T{};
  }
}

template <Scalar T>
bool is_finite(const T& v) {
  if constexpr (std::same_as<T, Rational>) {
    return true;
  } else if constexpr (std::same_as<T, double>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

std::string to_string(const Rational& q);
std::string to_string(double x);
std::string to_string(const Complex& z);

Rational parse_rational(std::string_view text);
double parse_real(std::string_view text);
Complex parse_complex(std::string_view text);

template <Scalar T>
T parse_scalar(std::string_view text) {
  if constexpr (std::same_as<T, Rational>) {
    return parse_rational(text);
  } else if constexpr (std::same_as<T, double>) {
    return parse_real(text);
  } else {
    return parse_complex(text);
  }
}

}  // namespace polydiff
