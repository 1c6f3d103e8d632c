#include "csd/factorization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace csd {

WallExponentTable::WallExponentTable(DiagramParams params, int max_degree)
    : params_(params), max_degree_(max_degree) {
  if (max_degree < 1) throw std::invalid_argument("WallExponentTable: max_degree must be >= 1");
}

Rational WallExponentTable::u_hat(NVec n) const {
  auto it = exponents_.find(n);
  return it == exponents_.end() ? Rational(0) : it->second;
}

Rational WallExponentTable::u(NVec n) const { return normalized_factor(n, params_) * u_hat(n); }

Rational WallExponentTable::U(NVec n) const {
  const auto g = g_factor(n.primitive(), params_);
  return u_hat(n) / Rational(static_cast<long>(g));
}

void WallExponentTable::set(NVec n, const Rational& u_hat) {
  if (!n.is_positive()) throw std::invalid_argument("WallExponentTable::set: n must lie in N+");
  if (n.degree() > max_degree_)
    throw std::invalid_argument("WallExponentTable::set: deg(n) exceeds max_degree");
  if (sgn(u_hat) == 0)
    exponents_.erase(n);
  else
    exponents_[n] = u_hat;
}

WallExponentTable WallExponentTable::restricted(int degree) const {
  if (degree > max_degree_) throw std::invalid_argument("restricted: degree exceeds max_degree");
  WallExponentTable out(params_, degree);
  for (const auto& [n, v] : exponents_)
    if (n.degree() <= degree) out.exponents_.emplace(n, v);
  return out;
}

bool slope_less(NVec a, NVec b) {
  return static_cast<std::int64_t>(a.n2) * b.n1 < static_cast<std::int64_t>(b.n2) * a.n1;
}

std::vector<NVec> WallExponentTable::primitive_directions() const {
  std::vector<NVec> dirs;
  for (const auto& [n, v] : exponents_) {
    const NVec n0 = n.primitive();
    if (std::find(dirs.begin(), dirs.end(), n0) == dirs.end()) dirs.push_back(n0);
  }
  std::sort(dirs.begin(), dirs.end(), slope_less);
  return dirs;
}

GroupElement target_element(const DiagramParams& p, int truncation_degree) {
  // delta(e2) = b and delta(e1) = c, so Psi[e2]^b and Psi[e1]^c are the
  // elementary walls with s = 1.
  return compose(elementary_wall(e2, 1, p, truncation_degree), elementary_wall(e1, 1, p, truncation_degree));
}

TruncatedSeries wall_function(const WallExponentTable& t, NVec n0, int truncation_degree) {
  if (!n0.is_positive() || !n0.is_primitive()) throw std::invalid_argument("wall_function: n0 must be primitive in N+");
  TruncatedSeries f = TruncatedSeries::one(truncation_degree);
  for (int k = 1; k * n0.degree() <= truncation_degree; ++k) {
    const NVec n = k * n0;
    const Rational e = t.u_hat(n);
    if (sgn(e) == 0) continue;
    const auto base = add(TruncatedSeries::one(truncation_degree),
                          TruncatedSeries::monomial(truncation_degree, n.monomial()));
    f = mul(f, pow_rational(base, e));
  }
  return f;
}

GroupElement ordered_product(const WallExponentTable& t, int truncation_degree) {
  GroupElement acc = GroupElement::identity(t.params(), truncation_degree);
  const auto dirs = t.primitive_directions();
  for (auto it = dirs.rbegin(); it != dirs.rend(); ++it) {
    if (it->degree() > truncation_degree) continue;
    acc = compose_wall_first(*it, wall_function(t, *it, truncation_degree), acc);
  }
  return acc;
}

WallExponentTable factorize(const DiagramParams& p, int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("factorize: max_degree must be >= 2");
  const GroupElement target = target_element(p, max_degree);
  WallExponentTable table(p, max_degree);
  table.set(e1, 1);
  table.set(e2, 1);

  for (int l = 2; l <= max_degree; ++l) {
    // Writing target = P * E with P the current ordered product, E acts as
    // y_i -> y_i (1 + eps_i + O(deg > l)) and eps_i equals the degree-l part
    // of target_i - P_i. Degree-l walls commute with everything mod degree > l.
    const GroupElement current = ordered_product(table, l);
    const GroupElement goal = target.truncated(l);
    const auto d1 = subtract(goal.mult1(), current.mult1()).homogeneous_part(l);
    const auto d2 = subtract(goal.mult2(), current.mult2()).homogeneous_part(l);
    for (int n1 = 0; n1 <= l; ++n1) {
      const NVec n{n1, l - n1};
      const Rational delta = normalized_factor(n, p);
      // The wall Psi[n]^(delta u_hat) contributes u_hat delta {n, e_i} y^n to eps_i.
      const Rational u_hat = n1 > 0 ? Rational(d2.coefficient(n.monomial()) / (delta * n.n1))
                                    : Rational(-d1.coefficient(n.monomial()) / (delta * n.n2));
      if (n.n2 > 0 && d1.coefficient(n.monomial()) != -u_hat * delta * n.n2) {
        std::ostringstream os;
        os << "factorize: inconsistent discrepancy at n=" << n << " for b=" << p.b() << ", c=" << p.c();
        throw std::logic_error(os.str());
      }
      table.set(n, u_hat);
    }
  }
  return table;
}

}  // namespace csd
