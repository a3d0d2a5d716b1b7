#pragma once

// Turns loosely typed command-line input into a basis, its differentiation
// matrix, its generalized inverse, or its barycentric weights.

#include "polydiff/any_matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polydiff {

/// Inconsistent or missing flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MatrixRequest {
  std::string basis;  ///< monomial|chebyshev|legendre|newton|lagrange|hermite|bernstein|recurrence
  std::optional<std::size_t> degree;
  std::vector<std::string> nodes;
  std::vector<std::string> confluency;
  std::vector<std::string> alpha;
  std::vector<std::string> beta;
  std::vector<std::string> gamma;
  Field field = Field::rational;
  bool pinv = false;
};

/// D, or with `pinv` the closed-form antiderivative (Chebyshev, Legendre,
/// monomial) or V J^T V^{-1} otherwise. Throws UsageError for flag conflicts.
AnyMatrix build_matrix(const MatrixRequest& request);

struct WeightEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string value;
};

/// beta_{i,j} for every node and slot, formatted in the requested field.
std::vector<WeightEntry> build_weights(const std::vector<std::string>& nodes,
                                       const std::vector<std::string>& confluency, Field field);

}  // namespace polydiff
