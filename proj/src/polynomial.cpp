#include "csd/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace csd {

const char* name(Var v) {
  switch (v) {
    case Var::c: return "c";
    case Var::b: return "b";
    case Var::g: return "g";
  }
  return "?";
}

MultiPolynomial::MultiPolynomial(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Exponents{0, 0, 0}, constant);
}

MultiPolynomial MultiPolynomial::variable(Var v) {
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(v)] = 1;
  return term(1, e);
}

MultiPolynomial MultiPolynomial::term(const Rational& coefficient, Exponents e) {
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("MultiPolynomial: negative exponent");
  MultiPolynomial p;
  p.accumulate(e, coefficient);
  return p;
}

void MultiPolynomial::accumulate(const Exponents& e, const Rational& q) {
  if (sgn(q) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, q);
  if (inserted) return;
  it->second += q;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Rational MultiPolynomial::coefficient(Exponents e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Var> MultiPolynomial::variables() const {
  std::vector<Var> out;
  for (Var v : {Var::c, Var::b, Var::g})
    if (degree_in(*this, v) > 0) out.push_back(v);
  return out;
}

Rational MultiPolynomial::constant_value() const {
  if (!variables().empty()) throw std::domain_error("constant_value: polynomial is not constant");
  return coefficient({0, 0, 0});
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
  for (const auto& [e, q] : o.terms_) accumulate(e, q);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
  for (const auto& [e, q] : o.terms_) accumulate(e, -q);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const MultiPolynomial& o) {
  MultiPolynomial out;
  for (const auto& [ea, qa] : terms_)
    for (const auto& [eb, qb] : o.terms_)
      out.accumulate({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, qa * qb);
  *this = std::move(out);
  return *this;
}

MultiPolynomial pow(const MultiPolynomial& p, unsigned k) {
  MultiPolynomial result(1);
  MultiPolynomial base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

int degree_in(const MultiPolynomial& p, Var v) {
  int d = kZeroPolynomialDegree;
  for (const auto& [e, q] : p.terms()) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

MultiPolynomial coefficient_of(const MultiPolynomial& p, Var v, int k) {
  MultiPolynomial out;
  const auto i = static_cast<std::size_t>(v);
  for (const auto& [e, q] : p.terms()) {
    if (e[i] != k) continue;
    auto stripped = e;
    stripped[i] = 0;
    out += MultiPolynomial::term(q, stripped);
  }
  return out;
}

MultiPolynomial poly_binomial(const MultiPolynomial& argument, unsigned s) {
  MultiPolynomial result(1);
  for (unsigned i = 0; i < s; ++i) result *= argument - MultiPolynomial(static_cast<long>(i));
  return result * MultiPolynomial(Rational(1) / factorial(s));
}

MultiPolynomial substitute(const MultiPolynomial& p, const std::map<Var, Binding>& bindings) {
  std::array<MultiPolynomial, 3> images;
  for (Var v : {Var::c, Var::b, Var::g}) {
    auto it = bindings.find(v);
    if (it == bindings.end()) {
      images[static_cast<std::size_t>(v)] = MultiPolynomial::variable(v);
    } else {
      images[static_cast<std::size_t>(v)] = std::visit(
          [](const auto& x) { return MultiPolynomial(x); }, it->second);
    }
  }
  MultiPolynomial out;
  for (const auto& [e, q] : p.terms()) {
    MultiPolynomial t(q);
    for (std::size_t i = 0; i < 3; ++i)
      if (e[i] > 0) t *= pow(images[i], static_cast<unsigned>(e[i]));
    out += t;
  }
  return out;
}

Rational evaluate(const MultiPolynomial& p, const Rational& c, const Rational& b, const Rational& g) {
  return substitute(p, {{Var::c, c}, {Var::b, b}, {Var::g, g}}).coefficient({0, 0, 0});
}

std::vector<Rational> shifted_binomial_expand(const MultiPolynomial& p) {
  for (Var v : p.variables())
    if (v != Var::b)
      throw std::invalid_argument("shifted_binomial_expand: polynomial must be univariate in b");
  if (p.is_zero()) return {};
  const int d = degree_in(p, Var::b);
  // Forward difference table at x = 1, ..., d + 1.
  std::vector<Rational> values;
  for (int x = 1; x <= d + 1; ++x) values.push_back(evaluate(p, 0, x));
  std::vector<Rational> coeffs;
  for (int l = 0; l <= d; ++l) {
    coeffs.push_back(values.front());
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return coeffs;
}

std::string to_string(const MultiPolynomial& p) {
  if (p.is_zero()) return "0";
  // Highest total degree first, then by (g, c, b) exponents descending.
  std::vector<std::pair<MultiPolynomial::Exponents, Rational>> ordered(p.terms().begin(), p.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const auto& x = a.first;
    const auto& y = b.first;
    const int dx = x[0] + x[1] + x[2];
    const int dy = y[0] + y[1] + y[2];
    if (dx != dy) return dx > dy;
    return std::tie(x[2], x[0], x[1]) > std::tie(y[2], y[0], y[1]);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, q] : ordered) {
    Rational c = q;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
    if (constant) {
      os << to_string(c);
      continue;
    }
    bool need_star = false;
    if (c != 1) {
      os << to_string(c);
      need_star = true;
    }
    for (std::size_t i : {std::size_t{2}, std::size_t{0}, std::size_t{1}}) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << name(static_cast<Var>(i));
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPolynomial& p) { return os << to_string(p); }

}  // namespace csd
