#include "csd/tau.hpp"

#include <stdexcept>

namespace csd {

namespace {

void partitions_from(int j, int remaining, std::vector<int>& s,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (j == 0) {
    if (remaining == 0) fn(s);
    return;
  }
  for (int m = remaining / j; m >= 0; --m) {
    s[j] = m;
    partitions_from(j - 1, remaining - m * j, s, fn);
  }
  s[j] = 0;
}

int multiple_of(NVec n, NVec n0) { return n.degree() / n0.degree(); }

}  // namespace

void for_each_multiplicity_partition(int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0) throw std::invalid_argument("for_each_multiplicity_partition: k must be >= 0");
  std::vector<int> s(k + 1, 0);
  partitions_from(k, k, s, fn);
}

TauTable tau_table(const WallExponentTable& t, NVec n0) {
  if (!n0.is_positive() || !n0.is_primitive()) throw std::invalid_argument("tau_table: n0 must be primitive in N+");
  TauTable out{n0, t.params(), {}};
  const auto f = wall_function(t, n0);
  for (int k = 1; k * n0.degree() <= t.max_degree(); ++k) out.entries[k] = f.coefficient((k * n0).monomial());
  return out;
}

Rational tau_numeric(NVec n, const WallExponentTable& t) {
  if (!n.is_positive()) throw std::invalid_argument("tau_numeric: n must lie in N+");
  if (n.degree() > t.max_degree()) throw std::invalid_argument("tau_numeric: deg(n) exceeds the table's degree");
  return wall_function(t, n.primitive(), n.degree()).coefficient(n.monomial());
}

Rational tau_numeric(NVec n, const DiagramParams& p, ExponentCache& cache) {
  return tau_numeric(n, *cache.table(p, n.degree()));
}

Rational tau_numeric(NVec n, const DiagramParams& p) {
  return tau_numeric(n, factorize(p, std::max(2, n.degree())));
}

Rational tau_via_partitions(NVec n, const WallExponentTable& t) {
  if (!n.is_positive()) throw std::invalid_argument("tau_via_partitions: n must lie in N+");
  if (n.degree() > t.max_degree()) throw std::invalid_argument("tau_via_partitions: deg(n) exceeds the table's degree");
  const NVec n0 = n.primitive();
  const int k = multiple_of(n, n0);
  const Rational g(static_cast<long>(g_factor(n0, t.params())));
  std::vector<Rational> gu(k + 1);
  for (int j = 1; j <= k; ++j) gu[j] = g * t.U(j * n0);
  Rational total = 0;
  for_each_multiplicity_partition(k, [&](const std::vector<int>& s) {
    Rational term = 1;
    for (int j = 1; j <= k && sgn(term) != 0; ++j)
      if (s[j] > 0) term *= binomial(gu[j], s[j]);
    total += term;
  });
  return total;
}

Rational tau_via_partitions(NVec n, const DiagramParams& p, ExponentCache& cache) {
  return tau_via_partitions(n, *cache.table(p, n.degree()));
}

MultiPolynomial tau_symbolic(NVec n, ExponentCache& cache) {
  if (n.n1 < 1 || n.n2 < 1) throw std::invalid_argument("tau_symbolic: requires n1, n2 >= 1");
  const NVec n0 = n.primitive();
  const int k = multiple_of(n, n0);
  const auto g = MultiPolynomial::variable(Var::g);
  std::vector<MultiPolynomial> gu(k + 1);
  for (int j = 1; j <= k; ++j) gu[j] = g * cache.symbolic_U(j * n0);
  MultiPolynomial total;
  for_each_multiplicity_partition(k, [&](const std::vector<int>& s) {
    MultiPolynomial term(1);
    for (int j = 1; j <= k; ++j)
      if (s[j] > 0) term *= poly_binomial(gu[j], static_cast<unsigned>(s[j]));
    total += term;
  });
  return total;
}

MultiPolynomial TauGExpansion::coefficient(int k) const {
  if (k == 0) return g_free_part;
  auto it = coefficients.find(k);
  return it == coefficients.end() ? MultiPolynomial() : it->second;
}

TauGExpansion tau_g_expansion(const MultiPolynomial& tau, NVec n) {
  TauGExpansion out{n, {}, coefficient_of(tau, Var::g, 0)};
  const int top = degree_in(tau, Var::g);
  for (int k = 1; k <= top; ++k) {
    auto coeff = coefficient_of(tau, Var::g, k);
    if (!coeff.is_zero()) out.coefficients.emplace(k, std::move(coeff));
  }
  return out;
}

TauGExpansion tau_g_expansion(NVec n, ExponentCache& cache) { return tau_g_expansion(tau_symbolic(n, cache), n); }

}  // namespace csd
