#pragma once

#include <map>
#include <vector>

#include "csd/group.hpp"

namespace csd {

/// Normalized wall exponents u_hat(n) = u(n) / delta(n) of the ordered
/// factorization of Psi[e2]^b Psi[e1]^c, for all n in N+ with deg(n) <= max_degree.
/// Only nonzero exponents are stored.
class WallExponentTable {
 public:
  WallExponentTable(DiagramParams params, int max_degree);

  const DiagramParams& params() const { return params_; }
  int max_degree() const { return max_degree_; }
  const std::map<NVec, Rational>& exponents() const { return exponents_; }

  Rational u_hat(NVec n) const;
  /// Exponent in dilogarithm normalization, delta(n) * u_hat(n).
  Rational u(NVec n) const;
  /// u_hat(k n0) / g(n0; b, c) for n = k n0 with n0 primitive.
  Rational U(NVec n) const;

  /// Sets (or, for zero, erases) an exponent. Throws if n is outside N+ or
  /// above max_degree.
  void set(NVec n, const Rational& u_hat);

  /// The same factorization viewed modulo degree > `degree`.
  WallExponentTable restricted(int degree) const;

  /// Primitive normals carrying at least one nonzero exponent, ascending slope.
  std::vector<NVec> primitive_directions() const;

  friend bool operator==(const WallExponentTable&, const WallExponentTable&) = default;

 private:
  DiagramParams params_;
  int max_degree_;
  std::map<NVec, Rational> exponents_;
};

/// Strict order by ascending slope n2/n1 (e1 first, e2 last) on N+.
bool slope_less(NVec a, NVec b);

/// Psi[e2]^b Psi[e1]^c at the given truncation degree.
GroupElement target_element(const DiagramParams& p, int truncation_degree);

/// Unique ordered factorization of the target, peeled one degree at a time.
/// Requires max_degree >= 2.
WallExponentTable factorize(const DiagramParams& p, int max_degree);

/// f_n0 = prod_k (1 + y^(k n0))^u_hat(k n0), at the given truncation degree.
TruncatedSeries wall_function(const WallExponentTable& t, NVec n0, int truncation_degree);
inline TruncatedSeries wall_function(const WallExponentTable& t, NVec n0) {
  return wall_function(t, n0, t.max_degree());
}

/// Product of all walls in ascending-slope order (leftmost acts first), with
/// parallel walls merged into one wall function.
GroupElement ordered_product(const WallExponentTable& t, int truncation_degree);
inline GroupElement ordered_product(const WallExponentTable& t) {
  return ordered_product(t, t.max_degree());
}

}  // namespace csd
