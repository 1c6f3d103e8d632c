#pragma once

#include <array>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "csd/rational.hpp"

namespace csd {

/// The three indeterminates used for symbolic exponents and coefficients.
/// g is independent of b and c (it carries b,c-degree zero).
enum class Var { c = 0, b = 1, g = 2 };

const char* name(Var v);

/// Exact polynomial in c, b, g with rational coefficients, canonical sparse form.
class MultiPolynomial {
 public:
  /// Exponents of (c, b, g).
  using Exponents = std::array<int, 3>;

  MultiPolynomial() = default;
  MultiPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPolynomial(long constant) : MultiPolynomial(Rational(constant)) {}  // NOLINT

  static MultiPolynomial variable(Var v);
  static MultiPolynomial term(const Rational& coefficient, Exponents e);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Exponents e) const;
  /// Variables with positive degree, in (c, b, g) order.
  std::vector<Var> variables() const;
  /// The constant value; throws std::domain_error if the polynomial is not constant.
  Rational constant_value() const;

  MultiPolynomial& operator+=(const MultiPolynomial& o);
  MultiPolynomial& operator-=(const MultiPolynomial& o);
  MultiPolynomial& operator*=(const MultiPolynomial& o);

  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend MultiPolynomial operator*(MultiPolynomial a, const MultiPolynomial& b) { return a *= b; }
  friend MultiPolynomial operator-(const MultiPolynomial& a) { return MultiPolynomial(-1) * a; }
  friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

 private:
  void accumulate(const Exponents& e, const Rational& q);
  std::map<Exponents, Rational> terms_;
};

MultiPolynomial pow(const MultiPolynomial& p, unsigned k);

/// Sentinel returned by degree_in for the zero polynomial.
inline constexpr int kZeroPolynomialDegree = std::numeric_limits<int>::min();

int degree_in(const MultiPolynomial& p, Var v);

/// Coefficient of v^k, as a polynomial in the remaining variables.
MultiPolynomial coefficient_of(const MultiPolynomial& p, Var v, int k);

/// binom(P, s) = P (P - 1) ... (P - s + 1) / s!
MultiPolynomial poly_binomial(const MultiPolynomial& argument, unsigned s);

using Binding = std::variant<Rational, MultiPolynomial>;

/// Simultaneous substitution of the bound variables; unbound ones stay symbolic.
MultiPolynomial substitute(const MultiPolynomial& p, const std::map<Var, Binding>& bindings);

/// Full evaluation at c, b, g.
Rational evaluate(const MultiPolynomial& p, const Rational& c, const Rational& b, const Rational& g = 0);

/// Coefficients a_l with p = sum_l a_l binom(b - 1, l), via a_l = (Delta^l p)(1).
/// Requires p to involve no variable other than b.
std::vector<Rational> shifted_binomial_expand(const MultiPolynomial& p);

/// e.g. "1/2*g^2*c - g + 3".
std::string to_string(const MultiPolynomial& p);
std::ostream& operator<<(std::ostream& os, const MultiPolynomial& p);

}  // namespace csd
