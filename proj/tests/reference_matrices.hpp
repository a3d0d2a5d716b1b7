#pragma once

// Known small differentiation matrices, used as frozen expected values.

#include "polydiff/matrix.hpp"

namespace polydiff::testing {

/// Hermite D for nodes [-1, 0, 1] with confluencies [3, 4, 2].
inline Matrix<Rational> hermite_9x9() {
  const auto q = [](long n, long d = 1) { return make_rational(n, d); };
  return Matrix<Rational>{
      {q(0), q(1), q(0), q(0), q(0), q(0), q(0), q(0), q(0)},
      {q(0), q(0), q(2), q(0), q(0), q(0), q(0), q(0), q(0)},
      {q(-201, 2), q(-177, 4), q(-15), q(96), q(-60), q(24), q(-12), q(9, 2), q(-3, 4)},
      {q(0), q(0), q(0), q(0), q(1), q(0), q(0), q(0), q(0)},
      {q(0), q(0), q(0), q(0), q(0), q(2), q(0), q(0), q(0)},
      {q(0), q(0), q(0), q(0), q(0), q(0), q(3), q(0), q(0)},
      {q(83, 4), q(6), q(1), q(-24), q(12), q(-12), q(4), q(13, 4), q(-1, 2)},
      {q(0), q(0), q(0), q(0), q(0), q(0), q(0), q(0), q(1)},
      {q(35), q(11), q(2), q(0), q(48), q(0), q(16), q(-35), q(11)},
  };
}

/// Bernstein D for n = 4.
inline Matrix<Rational> bernstein_5x5() {
  return Matrix<Rational>{{-4, 4, 0, 0, 0}, {-1, -2, 3, 0, 0}, {0, -2, 0, 2, 0}, {0, 0, -3, 2, 1}, {0, 0, 0, -4, 4}};
}

}  // namespace polydiff::testing
