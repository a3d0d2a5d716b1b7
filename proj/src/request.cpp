#include "polydiff/request.hpp"

#include "polydiff/structure.hpp"

#include <charconv>

namespace polydiff {

namespace {

std::size_t parse_count(const std::string& text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw UsageError("not a non-negative integer: " + text);
  return v;
}

template <Scalar T>
std::vector<T> parse_values(const std::vector<std::string>& items) {
  std::vector<T> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(parse_scalar<T>(s));
  return out;
}

template <Scalar T>
NodeSet<T> parse_nodes(const std::vector<std::string>& nodes, const std::vector<std::string>& confluency) {
  NodeSet<T> ns{parse_values<T>(nodes), {}};
  if (confluency.empty()) {
    ns.confluency.assign(ns.size(), 1);
  } else {
    if (confluency.size() != nodes.size()) throw UsageError("--confluency needs one entry per node");
    for (const auto& s : confluency) ns.confluency.push_back(parse_count(s));
  }
  ns.validate();
  return ns;
}

void forbid(bool present, const std::string& flag, const std::string& basis) {
  if (present) throw UsageError(flag + " does not apply to --basis " + basis);
}

void require(bool present, const std::string& flag, const std::string& basis) {
  if (!present) throw UsageError("--basis " + basis + " needs " + flag);
}

template <Scalar T>
BasisSpec<T> make_basis(const MatrixRequest& r) {
  const std::string& b = r.basis;
  const bool has_nodes = !r.nodes.empty();
  const bool has_conf = !r.confluency.empty();
  const bool has_rec = !r.alpha.empty() || !r.beta.empty() || !r.gamma.empty();
  if (b != "recurrence") forbid(has_rec, "--alpha/--beta/--gamma", b);

  if (b == "monomial" || b == "chebyshev" || b == "legendre" || b == "bernstein" || b == "recurrence") {
    forbid(has_nodes, "--nodes", b);
    forbid(has_conf, "--confluency", b);
    require(r.degree.has_value(), "--degree", b);
    const std::size_t n = *r.degree;
    if (b == "monomial") return monomial_basis<T>(n);
    if (b == "chebyshev") return chebyshev_basis<T>(n);
    if (b == "legendre") return legendre_basis<T>(n);
    if (b == "bernstein") return BernsteinBasis{n};
    RecurrenceSpec<T> rec{parse_values<T>(r.alpha), parse_values<T>(r.beta), parse_values<T>(r.gamma)};
    try {
      rec.validate(n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return DegreeGradedBasis<T>{GradedFamily::general, rec, n};
  }
  if (b == "newton" || b == "lagrange" || b == "hermite") {
    forbid(r.degree.has_value(), "--degree", b);
    require(has_nodes, "--nodes", b);
    if (b == "lagrange") forbid(has_conf, "--confluency", b);
    if (b == "newton") {
      // repeated nodes are allowed here; confluency expands them
      NodeSet<T> ns{parse_values<T>(r.nodes), {}};
      if (has_conf) {
        if (r.confluency.size() != r.nodes.size()) throw UsageError("--confluency needs one entry per node");
        for (const auto& s : r.confluency) ns.confluency.push_back(parse_count(s));
      } else {
        ns.confluency.assign(ns.size(), 1);
      }
      return newton_basis(ns.expanded());
    }
    const NodeSet<T> ns = parse_nodes<T>(r.nodes, r.confluency);
    if (b == "lagrange") return LagrangeBasis<T>{ns};
    return HermiteBasis<T>{ns};
  }
  throw UsageError("unknown basis: " + b);
}

template <Scalar T>
Matrix<T> pinv_of(const MatrixRequest& r, const BasisSpec<T>& basis, const Matrix<T>& d) {
  const std::size_t n = dimension(basis) - 1;
  if (r.basis == "chebyshev" && n >= 1) return chebyshev_antideriv_matrix<T>(n);
  if (r.basis == "legendre" && n >= 1) return legendre_antideriv_matrix<T>(n);
  return pseudo_inverse(d, build_V(monomial_images(basis)));
}

template <Scalar T>
AnyMatrix build_in(const MatrixRequest& r) {
  const BasisSpec<T> basis = make_basis<T>(r);
  const Matrix<T> d = diff_matrix(basis);
  if (!r.pinv) return d;
  return pinv_of(r, basis, d);
}

}  // namespace

AnyMatrix build_matrix(const MatrixRequest& request) {
  switch (request.field) {
    case Field::rational: return build_in<Rational>(request);
    case Field::real: return build_in<double>(request);
    case Field::complex: return build_in<Complex>(request);
  }
  throw UsageError("unknown field");
}

namespace {

template <Scalar T>
std::vector<WeightEntry> weights_in(const std::vector<std::string>& nodes, const std::vector<std::string>& confluency) {
  if (nodes.empty()) throw UsageError("weights needs --nodes");
  const auto w = gen_bary_weights(parse_nodes<T>(nodes, confluency));
  std::vector<WeightEntry> out;
  for (std::size_t i = 0; i < w.weights.size(); ++i)
    for (std::size_t j = 0; j < w.weights[i].size(); ++j) out.push_back({i, j, to_string(w.beta(i, j))});
  return out;
}

}  // namespace

std::vector<WeightEntry> build_weights(const std::vector<std::string>& nodes,
                                       const std::vector<std::string>& confluency, Field field) {
  switch (field) {
    case Field::rational: return weights_in<Rational>(nodes, confluency);
    case Field::real: return weights_in<double>(nodes, confluency);
    case Field::complex: return weights_in<Complex>(nodes, confluency);
  }
  throw UsageError("unknown field");
}

}  // namespace polydiff
