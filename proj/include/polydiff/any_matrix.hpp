#pragma once

// Field-tagged matrices and vectors for code that only learns the field at
// run time (the CLI, serialization).

#include "polydiff/matrix.hpp"

#include <variant>

namespace polydiff {

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<double>, Matrix<Complex>>;
using AnyVector = std::variant<Vector<Rational>, Vector<double>, Vector<Complex>>;

Field field_of(const AnyMatrix& m);
Field field_of(const AnyVector& v);

/// Moves m up to `target`; throws FieldError if that would be a demotion.
AnyMatrix convert(const AnyMatrix& m, Field target);
AnyVector convert(const AnyVector& v, Field target);

/// m * v in the higher of the two fields.
AnyVector mat_apply(const AnyMatrix& m, const AnyVector& v);

}  // namespace polydiff
