#pragma once

// Truncated power series in u = z - c, coefficients c_0 .. c_order.

#include "polydiff/field.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace polydiff {

template <Scalar T>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, T{}) {}
  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = from_int<T>(1);
    return s;
  }

  /// (u + shift)^power truncated at `order`.
  static TruncatedSeries shifted_power(const T& shift, std::size_t power, std::size_t order) {
    TruncatedSeries s(order);
    // binomial(power, k) * shift^(power-k) for k = 0..min(power, order)
    T binom = from_int<T>(1);
    for (std::size_t k = 0; k <= power && k <= order; ++k) {
      T term = binom;
      for (std::size_t r = 0; r < power - k; ++r) term *= shift;
      s.coeffs_[k] = term;
      binom = T(binom * from_int<T>(static_cast<long>(power - k)) / from_int<T>(static_cast<long>(k + 1)));
    }
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const T& operator[](std::size_t k) const { return coeffs_[k]; }
  T& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries& operator*=(const TruncatedSeries& other) {
    const std::size_t n = order();
    std::vector<T> out(n + 1, T{});
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= n && j <= other.order(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
  }

  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }

  /// 1/s by the triangular recurrence r_0 = 1/s_0, r_k = -(sum_{j=1..k} s_j r_{k-j}) / s_0.
  TruncatedSeries reciprocal() const {
    if (is_zero(coeffs_[0])) throw std::domain_error("series with zero constant term has no reciprocal");
    const std::size_t n = order();
    TruncatedSeries r(n);
    const T inv0 = T(from_int<T>(1) / coeffs_[0]);
    r.coeffs_[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
      T acc{};
      for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
      r.coeffs_[k] = T(-acc * inv0);
    }
    return r;
  }

  TruncatedSeries operator/(const TruncatedSeries& den) const { return *this * den.reciprocal(); }

  /// Termwise derivative; the result has one order less.
  TruncatedSeries derivative() const {
    if (order() == 0) return TruncatedSeries(0);
    TruncatedSeries d(order() - 1);
    for (std::size_t k = 1; k <= order(); ++k) d.coeffs_[k - 1] = coeffs_[k] * from_int<T>(static_cast<long>(k));
    return d;
  }

 private:
  std::vector<T> coeffs_;
};

}  // namespace polydiff
