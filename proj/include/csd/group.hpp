#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

#include "csd/rational.hpp"
#include "csd/series.hpp"

namespace csd {

/// Element of the lattice N = Z^2 (wall normals, charges).
struct NVec {
  int n1 = 0;
  int n2 = 0;

  constexpr int degree() const { return n1 + n2; }
  constexpr bool is_zero() const { return n1 == 0 && n2 == 0; }
  /// Member of N+ : nonnegative and nonzero.
  constexpr bool is_positive() const { return n1 >= 0 && n2 >= 0 && !is_zero(); }
  int content() const { return static_cast<int>(gcd(n1, n2)); }
  bool is_primitive() const { return content() == 1; }
  NVec primitive() const {
    const int k = content();
    return {n1 / k, n2 / k};
  }
  constexpr Monomial monomial() const { return {n1, n2}; }

  friend constexpr NVec operator+(NVec a, NVec b) { return {a.n1 + b.n1, a.n2 + b.n2}; }
  friend constexpr NVec operator*(int k, NVec a) { return {k * a.n1, k * a.n2}; }
  friend constexpr bool operator==(NVec, NVec) = default;
  // Same order as Monomial: degree, then n1.
  friend constexpr std::strong_ordering operator<=>(NVec a, NVec b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.n1 <=> b.n1;
  }
};

inline constexpr NVec e1{1, 0};
inline constexpr NVec e2{0, 1};

std::ostream& operator<<(std::ostream& os, NVec n);

/// The pair (b, c) fixing the exchange matrix ((0, c), (-b, 0)) and the
/// skew-symmetrizer diag(1/c, 1/b). Both must be positive.
class DiagramParams {
 public:
  DiagramParams(int b, int c);

  int b() const { return b_; }
  int c() const { return c_; }

  friend bool operator==(const DiagramParams&, const DiagramParams&) = default;
  friend auto operator<=>(const DiagramParams&, const DiagramParams&) = default;

 private:
  int b_;
  int c_;
};

/// {n, m} = n1 m2 - n2 m1.
constexpr std::int64_t pairing_skew(NVec n, NVec m) {
  return static_cast<std::int64_t>(n.n1) * m.n2 - static_cast<std::int64_t>(n.n2) * m.n1;
}

/// delta(n) = bc / gcd(n1 b, n2 c): the smallest positive rational with
/// delta(n) n in (cZ) + (bZ).
Rational normalized_factor(NVec n, const DiagramParams& p);

/// g(n; b, c) = gcd(n1 b, n2 c) / gcd(n1, n2).
std::int64_t g_factor(NVec n, const DiagramParams& p);

/// A structure-group element, stored as its action on the y-variables:
/// y1 -> y1 * mult1, y2 -> y2 * mult2. A general monomial then maps as
/// y^m -> y^m * mult1^m1 * mult2^m2.
class GroupElement {
 public:
  GroupElement(DiagramParams params, TruncatedSeries mult1, TruncatedSeries mult2);

  static GroupElement identity(const DiagramParams& params, int truncation_degree);

  const DiagramParams& params() const { return params_; }
  const TruncatedSeries& mult1() const { return mult1_; }
  const TruncatedSeries& mult2() const { return mult2_; }
  int truncation_degree() const { return mult1_.truncation_degree(); }
  bool is_identity() const;

  GroupElement truncated(int degree) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  DiagramParams params_;
  TruncatedSeries mult1_;
  TruncatedSeries mult2_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

/// Image of Psi[n]^(delta(n) s): the automorphism y^m -> y^m (1 + y^n)^(s delta(n) {n, m}).
///
/// The exponent on a general y-monomial comes from p_f(x^m) = x^m f^<m, delta(n) n>
/// with y^m = x1^(c m2) x2^(-b m1), which gives <m(y), delta(n) n> = delta(n) {n, m}.
GroupElement elementary_wall(NVec n, const Rational& s, const DiagramParams& p, int truncation_degree);

/// The automorphism p_f attached to a wall with primitive normal n0 and wall
/// function f in Q[[y^n0]] (constant term 1): y^m -> y^m f^(delta(n0) {n0, m}).
GroupElement wall_element(NVec n0, const TruncatedSeries& f, const DiagramParams& p);

/// Product `first * second` in written order. The leftmost factor
/// acts first: y -> first(y), then the result is transported by `second`, so
///   mult_i(result) = mult_i(second) * mult_i(first)(y1 mult1(second), y2 mult2(second)).
GroupElement compose(const GroupElement& first, const GroupElement& second);

/// compose(wall_element(n0, f, p), rest), computed by a single monomial
/// substitution instead of a general composition.
GroupElement compose_wall_first(NVec n0, const TruncatedSeries& f, const GroupElement& rest);

/// Group inverse, solved degree by degree.
GroupElement invert(const GroupElement& x);

/// True iff x and y agree after truncation at degree l.
bool equal_mod_degree(const GroupElement& x, const GroupElement& y, int l);

}  // namespace csd
