#include "csd/group.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace csd {

namespace {

void require_positive(NVec n, const char* op) {
  if (!n.is_positive())
    throw std::invalid_argument(std::string(op) + ": normal must be a nonzero nonnegative pair");
}

void require_compatible(const GroupElement& x, const GroupElement& y, const char* op) {
  if (!(x.params() == y.params())) throw std::invalid_argument(std::string(op) + ": parameter mismatch");
  if (x.truncation_degree() != y.truncation_degree())
    throw std::invalid_argument(std::string(op) + ": truncation degree mismatch");
}

TruncatedSeries lift(const TruncatedSeries& s, int degree) {
  std::vector<TruncatedSeries::Term> terms(s.terms().begin(), s.terms().end());
  return TruncatedSeries::from_terms(degree, std::move(terms));
}

}  // namespace

std::ostream& operator<<(std::ostream& os, NVec n) { return os << '(' << n.n1 << ',' << n.n2 << ')'; }

DiagramParams::DiagramParams(int b, int c) : b_(b), c_(c) {
  if (b < 1 || c < 1)
    throw std::invalid_argument("DiagramParams: b and c must be positive integers (got b=" +
                                std::to_string(b) + ", c=" + std::to_string(c) + ")");
}

Rational normalized_factor(NVec n, const DiagramParams& p) {
  require_positive(n, "normalized_factor");
  const std::int64_t bc = static_cast<std::int64_t>(p.b()) * p.c();
  const std::int64_t d =
      gcd(static_cast<std::int64_t>(n.n1) * p.b(), static_cast<std::int64_t>(n.n2) * p.c());
  Rational q(static_cast<long>(bc), static_cast<long>(d));
  q.canonicalize();
  return q;
}

std::int64_t g_factor(NVec n, const DiagramParams& p) {
  require_positive(n, "g_factor");
  const std::int64_t d =
      gcd(static_cast<std::int64_t>(n.n1) * p.b(), static_cast<std::int64_t>(n.n2) * p.c());
  return d / n.content();
}

GroupElement::GroupElement(DiagramParams params, TruncatedSeries mult1, TruncatedSeries mult2)
    : params_(params), mult1_(std::move(mult1)), mult2_(std::move(mult2)) {
  if (mult1_.truncation_degree() != mult2_.truncation_degree())
    throw std::invalid_argument("GroupElement: multipliers have different truncation degrees");
  if (mult1_.constant_term() != 1 || mult2_.constant_term() != 1)
    throw std::invalid_argument("GroupElement: multipliers must have constant term 1");
}

GroupElement GroupElement::identity(const DiagramParams& params, int truncation_degree) {
  return {params, TruncatedSeries::one(truncation_degree), TruncatedSeries::one(truncation_degree)};
}

bool GroupElement::is_identity() const {
  const auto one = TruncatedSeries::one(truncation_degree());
  return mult1_ == one && mult2_ == one;
}

GroupElement GroupElement::truncated(int degree) const {
  return {params_, mult1_.truncated(degree), mult2_.truncated(degree)};
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  return os << "{y1 -> y1*(" << to_string(g.mult1()) << "), y2 -> y2*(" << to_string(g.mult2())
            << ") mod deg " << g.truncation_degree() + 1 << "}";
}

GroupElement elementary_wall(NVec n, const Rational& s, const DiagramParams& p, int truncation_degree) {
  require_positive(n, "elementary_wall");
  const Rational delta = normalized_factor(n, p);
  const auto base = add(TruncatedSeries::one(truncation_degree),
                        TruncatedSeries::monomial(truncation_degree, n.monomial()));
  const Rational a1 = s * delta * Rational(static_cast<long>(pairing_skew(n, e1)));
  const Rational a2 = s * delta * Rational(static_cast<long>(pairing_skew(n, e2)));
  return {p, pow_rational(base, a1), pow_rational(base, a2)};
}

namespace {

void require_wall_function(NVec n0, const TruncatedSeries& f) {
  require_positive(n0, "wall_element");
  if (!n0.is_primitive()) throw std::invalid_argument("wall_element: normal must be primitive");
  for (const auto& t : f.terms()) {
    const Monomial m = t.monomial;
    // m must be k * n0.
    if (static_cast<std::int64_t>(m.n1) * n0.n2 != static_cast<std::int64_t>(m.n2) * n0.n1)
      throw std::invalid_argument("wall_element: wall function has a monomial off the normal ray");
  }
}

}  // namespace

GroupElement wall_element(NVec n0, const TruncatedSeries& f, const DiagramParams& p) {
  require_wall_function(n0, f);
  const Rational delta = normalized_factor(n0, p);
  return {p, pow_rational(f, delta * Rational(static_cast<long>(pairing_skew(n0, e1)))),
          pow_rational(f, delta * Rational(static_cast<long>(pairing_skew(n0, e2))))};
}

GroupElement compose(const GroupElement& first, const GroupElement& second) {
  require_compatible(first, second, "compose");
  const auto& s1 = second.mult1();
  const auto& s2 = second.mult2();
  return {first.params(), mul(s1, substitute_scaled(first.mult1(), s1, s2)),
          mul(s2, substitute_scaled(first.mult2(), s1, s2))};
}

GroupElement compose_wall_first(NVec n0, const TruncatedSeries& f, const GroupElement& rest) {
  if (f.truncation_degree() != rest.truncation_degree())
    throw std::invalid_argument("compose_wall_first: truncation degree mismatch");
  const GroupElement wall = wall_element(n0, f, rest.params());
  const int L = rest.truncation_degree();
  const int step = n0.degree();

  // X = image of y^n0 under `rest`, divided by y^n0.
  const TruncatedSeries x = mul(pow_int(rest.mult1(), static_cast<unsigned>(n0.n1)),
                                pow_int(rest.mult2(), static_cast<unsigned>(n0.n2)));
  std::vector<TruncatedSeries> x_powers{TruncatedSeries::one(L)};

  auto transport = [&](const TruncatedSeries& w) {
    // w = sum_k w_k y^(k n0)  ->  sum_k w_k y^(k n0) X^k
    TruncatedSeries out(L);
    for (const auto& t : w.terms()) {
      const int k = t.monomial.degree() / step;
      while (static_cast<int>(x_powers.size()) <= k) x_powers.push_back(mul(x_powers.back(), x));
      out = add(out, shift(scale(x_powers[static_cast<std::size_t>(k)], t.coefficient), t.monomial));
    }
    return out;
  };
  return {rest.params(), mul(rest.mult1(), transport(wall.mult1())),
          mul(rest.mult2(), transport(wall.mult2()))};
}

GroupElement invert(const GroupElement& x) {
  // y inverts x iff y_i * x_i(y1 * y_1, y2 * y_2) = 1. Each pass of the
  // fixed-point map fixes one more degree of y.
  const int L = x.truncation_degree();
  TruncatedSeries y1 = TruncatedSeries::one(0);
  TruncatedSeries y2 = TruncatedSeries::one(0);
  for (int l = 1; l <= L; ++l) {
    const auto x1 = x.mult1().truncated(l);
    const auto x2 = x.mult2().truncated(l);
    const auto l1 = lift(y1, l);
    const auto l2 = lift(y2, l);
    y1 = pow_rational(substitute_scaled(x1, l1, l2), -1);
    y2 = pow_rational(substitute_scaled(x2, l1, l2), -1);
  }
  if (L == 0) return GroupElement::identity(x.params(), 0);
  return {x.params(), y1, y2};
}

bool equal_mod_degree(const GroupElement& x, const GroupElement& y, int l) {
  if (!(x.params() == y.params())) throw std::invalid_argument("equal_mod_degree: parameter mismatch");
  if (l < 0 || l > x.truncation_degree() || l > y.truncation_degree())
    throw std::invalid_argument("equal_mod_degree: degree " + std::to_string(l) +
                                " exceeds stored truncation");
  return x.mult1().truncated(l) == y.mult1().truncated(l) &&
         x.mult2().truncated(l) == y.mult2().truncated(l);
}

}  // namespace csd
