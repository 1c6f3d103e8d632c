#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "csd/rational.hpp"

namespace csd {

/// Exponent vector of the monomial y1^n1 * y2^n2.
struct Monomial {
  int n1 = 0;
  int n2 = 0;

  constexpr int degree() const { return n1 + n2; }

  friend constexpr bool operator==(Monomial, Monomial) = default;
  // Total order used everywhere (storage and serialization): degree, then n1.
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.n1 <=> b.n1;
  }
};

/// Bivariate power series in y1, y2 over exact rationals, modulo all monomials
/// of total degree greater than the truncation degree L.
///
/// Values are immutable. Terms are kept sorted by Monomial order and only
/// nonzero coefficients are stored, so structural equality is series equality.
class TruncatedSeries {
 public:
  struct Term {
    Monomial monomial;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  /// The zero series at truncation degree L (L >= 0).
  explicit TruncatedSeries(int truncation_degree);

  static TruncatedSeries constant(int truncation_degree, const Rational& value);
  static TruncatedSeries one(int truncation_degree) { return constant(truncation_degree, 1); }
  static TruncatedSeries monomial(int truncation_degree, Monomial m, const Rational& coefficient = 1);
  /// Duplicate monomials are summed; terms above the truncation degree and
  /// zero coefficients are dropped.
  static TruncatedSeries from_terms(int truncation_degree, std::vector<Term> terms);

  int truncation_degree() const { return degree_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Monomial m) const;
  Rational constant_term() const { return coefficient({0, 0}); }
  /// Lowest total degree carrying a nonzero coefficient; -1 for the zero series.
  int order() const { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }

  /// Projection onto a smaller truncation degree.
  TruncatedSeries truncated(int degree) const;
  /// Terms of total degree exactly `degree`, at the same truncation degree.
  TruncatedSeries homogeneous_part(int degree) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  friend class SeriesAccumulator;
  int degree_;
  std::vector<Term> terms_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const Rational& factor);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplication by the monomial y^m; terms pushed past the truncation
/// degree are dropped.
TruncatedSeries shift(const TruncatedSeries& a, Monomial m);

/// f^k for integer k >= 0 by repeated squaring.
TruncatedSeries pow_int(const TruncatedSeries& f, unsigned k);

/// f^s = sum_k binom(s, k) (f - 1)^k. Requires constant term exactly 1.
TruncatedSeries pow_rational(const TruncatedSeries& f, const Rational& s);

/// Replaces each y^n in f by y^n * g1^n1 * g2^n2. Requires g1, g2 to have
/// constant term 1.
TruncatedSeries substitute_scaled(const TruncatedSeries& f, const TruncatedSeries& g1,
                                  const TruncatedSeries& g2);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return subtract(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(const Rational& q, const TruncatedSeries& a) { return scale(a, q); }

/// Human-readable form, e.g. "1 - 2*y2 + 3/2*y1^2*y2".
std::string to_string(const TruncatedSeries& s);
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);
std::ostream& operator<<(std::ostream& os, Monomial m);

}  // namespace csd
