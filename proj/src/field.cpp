#include "polydiff/field.hpp"

#include <charconv>
#include <cstdlib>

namespace polydiff {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Exact value of a decimal literal such as -12.375e-2.
Rational parse_decimal(std::string_view s, std::string_view original) {
  const auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(original) + "'"); };
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text)) throw bad();
    const auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{}) throw bad();
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw bad();
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw bad();
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  q.canonicalize();
  return q;
}

std::string shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

std::string_view field_name(Field f) {
  switch (f) {
    case Field::rational:
      return "rational";
    case Field::real:
      return "real";
    case Field::complex:
      return "complex";
  }
  return "unknown";
}

Field parse_field(std::string_view name) {
  if (name == "rational") return Field::rational;
  if (name == "real") return Field::real;
  if (name == "complex") return Field::complex;
  throw std::invalid_argument("unknown field '" + std::string(name) + "'");
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(double x) { return shortest(x); }

std::string to_string(const Complex& z) {
  if (z.imag() == 0.0) return shortest(z.real());
  std::string imag = shortest(std::abs(z.imag()));
  if (imag == "1") imag.clear();
  const char sign = std::signbit(z.imag()) ? '-' : '+';
  if (z.real() == 0.0) return (sign == '-' ? "-" : "") + imag + "i";
  return shortest(z.real()) + sign + imag + "i";
}

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(s.substr(0, slash), text);
    const Rational den = parse_decimal(s.substr(slash + 1), text);
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num / den);
  }
  return parse_decimal(s, text);
}

double parse_real(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "inf" || s == "+inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  if (s.find('/') != std::string_view::npos) return parse_rational(s).get_d();
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw std::invalid_argument("not a real number: '" + std::string(text) + "'");
  }
  return v;
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  // The split point is the last sign that is not the leading sign and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imag_part = [&](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, split)), imag_part(body.substr(split))};
}

}  // namespace polydiff
