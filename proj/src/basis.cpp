#include "polydiff/basis.hpp"

namespace polydiff {

std::string family_name(GradedFamily f) {
  switch (f) {
    case GradedFamily::monomial:
      return "monomial";
    case GradedFamily::chebyshev:
      return "chebyshev";
    case GradedFamily::legendre:
      return "legendre";
    case GradedFamily::newton:
      return "newton";
    case GradedFamily::general:
      return "recurrence";
  }
  return "unknown";
}

}  // namespace polydiff
