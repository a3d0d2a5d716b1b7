#include "polydiff/verify.hpp"

#include "polydiff/request.hpp"
#include "polydiff/structure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string_view>

namespace polydiff {

namespace {

constexpr std::array<std::string_view, 8> kFamilies{"monomial", "chebyshev", "legendre", "recurrence",
                                                    "newton",   "lagrange",  "hermite",  "bernstein"};

class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Rational rational(long max_num, long max_den) { return make_rational(integer(-max_num, max_num), integer(1, max_den)); }

  Rational nonzero(long max_num, long max_den) {
    for (;;) {
      Rational q = rational(max_num, max_den);
      if (sgn(q) != 0) return q;
    }
  }

  std::vector<Rational> distinct(std::size_t n) {
    std::vector<Rational> v;
    while (v.size() < n) {
      Rational q = rational(12, 5);
      if (std::find(v.begin(), v.end(), q) == v.end()) v.push_back(q);
    }
    return v;
  }

  BasisSpec<Rational> basis(std::string_view family, std::size_t max_dim) {
    const auto n = static_cast<std::size_t>(integer(0, static_cast<long>(max_dim) - 1));
    if (family == "monomial") return monomial_basis<Rational>(n);
    if (family == "chebyshev") return chebyshev_basis<Rational>(n);
    if (family == "legendre") return legendre_basis<Rational>(n);
    if (family == "bernstein") return BernsteinBasis{n};
    if (family == "recurrence") {
      RecurrenceSpec<Rational> rec;
      for (std::size_t j = 0; j < n; ++j) {
        rec.alpha.push_back(nonzero(5, 4));
        rec.beta.push_back(rational(5, 4));
        rec.gamma.push_back(j == 0 ? Rational(0) : rational(5, 4));
      }
      return DegreeGradedBasis<Rational>{GradedFamily::general, rec, n};
    }
    if (family == "newton") {
      std::vector<Rational> z;
      for (std::size_t j = 0; j <= n; ++j) z.push_back(rational(4, 3));
      return newton_basis(z);
    }
    if (family == "lagrange") return LagrangeBasis<Rational>{NodeSet<Rational>::simple(distinct(n + 1))};
    for (;;) {
      const auto m = static_cast<std::size_t>(integer(1, 4));
      NodeSet<Rational> ns{distinct(m), {}};
      for (std::size_t i = 0; i < m; ++i) ns.confluency.push_back(static_cast<std::size_t>(integer(1, 4)));
      if (ns.total_dimension() <= max_dim) return HermiteBasis<Rational>{ns};
    }
  }

 private:
  std::mt19937 rng_;
};

using Instances = std::vector<BasisSpec<Rational>>;

Instances sample(Sampler& s, std::string_view family, std::size_t count, std::size_t max_dim) {
  Instances out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(s.basis(family, max_dim));
  return out;
}

CheckResult for_all(std::string name, const Instances& cases,
                    const std::function<bool(const BasisSpec<Rational>&)>& property) {
  std::size_t failures = 0;
  for (const auto& b : cases) {
    if (!property(b)) ++failures;
  }
  return {std::move(name), failures == 0,
          std::to_string(cases.size() - failures) + "/" + std::to_string(cases.size()) + " instances"};
}

void family_checks(std::string_view family, Sampler& s, bool inject_fault, std::vector<CheckResult>& out) {
  const std::string tag(family);
  const Instances oracle_cases = sample(s, family, 20, 12);
  out.push_back(for_all(tag + ": constructor equals conjugation oracle", oracle_cases,
                        [inject_fault](const BasisSpec<Rational>& b) {
                          Matrix<Rational> d = diff_matrix(b);
                          if (inject_fault) d(0, 0) += 1;
                          return d == conjugation_oracle(b);
                        }));

  out.push_back(for_all(tag + ": D maps X^k/k! to X^(k-1)/(k-1)!", oracle_cases, [](const BasisSpec<Rational>& b) {
    const auto d = diff_matrix(b);
    const auto v = build_V(monomial_images(b));
    if (mat_apply(d, v.column(0)) != Vector<Rational>(v.rows(), Rational(0))) return false;
    for (std::size_t k = 1; k < v.cols(); ++k) {
      if (mat_apply(d, v.column(k)) != v.column(k - 1)) return false;
    }
    return true;
  }));

  const Instances small_cases = sample(s, family, 10, 9);
  out.push_back(for_all(tag + ": nilpotency index equals dimension", small_cases, [](const BasisSpec<Rational>& b) {
    return nilpotency_index(diff_matrix(b)) == dimension(b);
  }));
  out.push_back(for_all(tag + ": D V = V J and V J^T V^-1 is a generalized inverse", small_cases,
                        [](const BasisSpec<Rational>& b) {
                          const auto d = diff_matrix(b);
                          const auto v = build_V(monomial_images(b));
                          return jordan_check(d, v) && verify_generalized_inverse(d, pseudo_inverse(d, v));
                        }));

  if (family == "lagrange" || family == "hermite" || family == "bernstein") {
    out.push_back(for_all(tag + ": rows annihilate the constant", oracle_cases, [](const BasisSpec<Rational>& b) {
      const auto images = monomial_images(b, 0);
      return mat_apply(diff_matrix(b), images.one()) == Vector<Rational>(dimension(b), Rational(0));
    }));
  }

  if (family == "hermite") {
    const NodeSet<Rational> ns{{Rational(-1), Rational(0), Rational(1)}, {3, 4, 2}};
    const auto d = diff_matrix_hermite(ns);
    const bool ok = d(2, 0) == make_rational(-201, 2) && d(2, 1) == make_rational(-177, 4) &&
                    d(6, 0) == make_rational(83, 4) && d(6, 7) == make_rational(13, 4) && d(8, 0) == 35 &&
                    d(8, 4) == 48 && d(8, 7) == -35 && d == conjugation_oracle(BasisSpec<Rational>(HermiteBasis<Rational>{ns}));
    out.push_back({tag + ": nodes [-1,0,1], s=[3,4,2] example", ok, "9x9"});

    Instances simple;
    for (int k = 0; k < 10; ++k)
      simple.push_back(HermiteBasis<Rational>{NodeSet<Rational>::simple(s.distinct(static_cast<std::size_t>(s.integer(1, 10))))});
    out.push_back(for_all(tag + ": confluency 1 equals Lagrange", simple, [](const BasisSpec<Rational>& b) {
      const auto& ns = std::get<HermiteBasis<Rational>>(b).nodes;
      return diff_matrix_hermite(ns) == diff_matrix_lagrange(ns);
    }));
  }

  if (family == "newton") {
    bool ok = true;
    for (std::size_t n = 0; n <= 10; ++n) {
      const Rational c = s.rational(5, 3);
      ok = ok && diff_matrix(newton_basis(std::vector<Rational>(n + 1, c))) == monomial_diff_matrix<Rational>(n);
    }
    out.push_back({tag + ": all-equal nodes give the monomial matrix", ok, "n <= 10"});
  }

  if (family == "lagrange") {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto n = static_cast<std::size_t>(s.integer(2, 50));
      std::vector<double> tau;
      for (std::size_t k = 0; k < n; ++k)
        tau.push_back(std::cos(std::numbers::pi * (static_cast<double>(k) + s.real(-0.3, 0.3)) / static_cast<double>(n - 1)));
      std::sort(tau.begin(), tau.end());
      tau.erase(std::unique(tau.begin(), tau.end()), tau.end());
      const auto w = bary_weights(NodeSet<double>::simple(tau));
      std::vector<double> rho;
      for (double t : tau) rho.push_back(2.0 + std::sin(3.0 * t));
      const double z = s.real(-1.0, 1.0);
      const double f1 = eval_first_form(w, std::span<const double>(rho), z);
      const double f2 = eval_second_form(w, std::span<const double>(rho), z);
      worst = std::max(worst, std::abs(f1 - f2) / std::abs(f2));
    }
    out.push_back({tag + ": first and second barycentric forms agree", worst <= 1e-13,
                   "max relative difference " + to_string(worst)});
  }

  if (family == "bernstein") {
    bool ok = true;
    Rational fact = 1;
    for (const auto& row : bernstein_norm_table(12)) {
      fact *= static_cast<long>(row.n);
      mpz_class two_n;
      mpz_ui_pow_ui(two_n.get_mpz_t(), 2, row.n);
      ok = ok && row.norm_d == 2 * static_cast<long>(row.n) && row.norm_d_pow_n == Rational(two_n) * fact &&
           row.next_power_zero;
    }
    out.push_back({tag + ": ||D|| = 2n, ||D^n|| = 2^n n!, D^(n+1) = 0", ok, "1 <= n <= 12"});
  }
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  if (options.basis && std::find(kFamilies.begin(), kFamilies.end(), *options.basis) == kFamilies.end()) {
    throw UsageError("unknown basis: " + *options.basis);
  }
  Sampler s(options.seed);
  std::vector<CheckResult> out;
  if (!options.basis) {
    bool ok = true;
    for (int k = 0; k < 200; ++k) {
      const Rational q = s.rational(1000000, 999);
      ok = ok && parse_rational(to_string(q)) == q;
      const double x = s.real(-1e6, 1e6);
      ok = ok && parse_real(to_string(x)) == x;
    }
    out.push_back({"core: serialization round trip", ok, "200 rationals, 200 reals"});
  }
  for (std::string_view family : kFamilies) {
    if (options.basis && *options.basis != family) continue;
    family_checks(family, s, options.inject_fault, out);
  }
  return out;
}

}  // namespace polydiff
