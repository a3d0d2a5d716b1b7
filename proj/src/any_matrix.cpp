#include "polydiff/any_matrix.hpp"

#include <string>

namespace polydiff {

namespace {

[[noreturn]] void demotion(Field from, Field to) {
  throw FieldError("cannot demote from " + std::string(field_name(from)) + " to " + std::string(field_name(to)));
}

template <Scalar To>
Matrix<To> lift(const AnyMatrix& m) {
  return std::visit(
      [](const auto& x) -> Matrix<To> {
        using From = typename std::decay_t<decltype(x)>::value_type;
        if constexpr (promotes_to_v<From, To>) {
          return promote_matrix<To>(x);
        } else {
          demotion(field_of<From>(), field_of<To>());
        }
      },
      m);
}

template <Scalar To>
Vector<To> lift(const AnyVector& v) {
  return std::visit(
      [](const auto& x) -> Vector<To> {
        using From = typename std::decay_t<decltype(x)>::value_type;
        if constexpr (promotes_to_v<From, To>) {
          return promote_vector<To>(std::span<const From>(x));
        } else {
          demotion(field_of<From>(), field_of<To>());
        }
      },
      v);
}

}  // namespace

Field field_of(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return field_of<typename std::decay_t<decltype(x)>::value_type>(); }, m);
}

Field field_of(const AnyVector& v) {
  return std::visit([](const auto& x) { return field_of<typename std::decay_t<decltype(x)>::value_type>(); }, v);
}

AnyMatrix convert(const AnyMatrix& m, Field target) {
  switch (target) {
    case Field::rational:
      return lift<Rational>(m);
    case Field::real:
      return lift<double>(m);
    case Field::complex:
      return lift<Complex>(m);
  }
  throw FieldError("unknown field");
}

AnyVector convert(const AnyVector& v, Field target) {
  switch (target) {
    case Field::rational:
      return lift<Rational>(v);
    case Field::real:
      return lift<double>(v);
    case Field::complex:
      return lift<Complex>(v);
  }
  throw FieldError("unknown field");
}

AnyVector mat_apply(const AnyMatrix& m, const AnyVector& v) {
  return std::visit([](const auto& mm, const auto& vv) -> AnyVector { return mat_apply(mm, vv); }, m, v);
}

}  // namespace polydiff
