#pragma once

#include <functional>
#include <map>
#include <vector>

#include "csd/polynomial.hpp"
#include "csd/reconstruction.hpp"

namespace csd {

/// Calls fn(s) for every (s_1, ..., s_k) >= 0 with s_1 + 2 s_2 + ... + k s_k = k.
/// s is 1-indexed (s[0] is unused and zero). Order is deterministic.
void for_each_multiplicity_partition(int k, const std::function<void(const std::vector<int>&)>& fn);

/// Coefficients tau(k n0) of the wall function f_n0 = 1 + sum_k tau(k n0) y^(k n0).
struct TauTable {
  NVec n0;
  DiagramParams params;
  std::map<int, Rational> entries;
};

/// Entries for k = 1 .. floor(t.max_degree() / deg n0), zeros included.
TauTable tau_table(const WallExponentTable& t, NVec n0);

/// Coefficient of y^n in the expanded wall function along n's primitive direction.
Rational tau_numeric(NVec n, const WallExponentTable& t);
Rational tau_numeric(NVec n, const DiagramParams& p, ExponentCache& cache);
Rational tau_numeric(NVec n, const DiagramParams& p);

/// Same value through sum over partitions of prod_j binom(g U_(j n0), s_j).
Rational tau_via_partitions(NVec n, const WallExponentTable& t);
Rational tau_via_partitions(NVec n, const DiagramParams& p, ExponentCache& cache);

/// tau(n) as a polynomial in (g, b, c), with g an independent indeterminate and
/// U the reconstructed polynomials. Requires n1, n2 >= 1.
MultiPolynomial tau_symbolic(NVec n, ExponentCache& cache);

/// tau(n) = sum_{k >= 1} tau(n; k) g^k.
struct TauGExpansion {
  NVec n;
  /// Nonzero coefficients only, keyed by k >= 1.
  std::map<int, MultiPolynomial> coefficients;
  /// The g^0 part; zero whenever tau has a factor g.
  MultiPolynomial g_free_part;

  MultiPolynomial coefficient(int k) const;
};

TauGExpansion tau_g_expansion(const MultiPolynomial& tau, NVec n);
TauGExpansion tau_g_expansion(NVec n, ExponentCache& cache);

}  // namespace csd
