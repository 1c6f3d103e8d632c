#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csd/tau.hpp"

namespace csd {

enum class Status { proved_claim_holds, proved_claim_violated, empirical_observation };

const char* to_string(Status s);

using Labelled = std::vector<std::pair<std::string, std::string>>;

/// One concrete instance: the lattice point, the parameters if any, and the
/// computed values that decide the claim.
struct Witness {
  NVec n;
  std::optional<DiagramParams> params;
  Labelled values;
};

/// One claim checked over a range. Proved claims gate; empirical ones only report.
struct Finding {
  std::string claim;
  std::string description;
  bool proved = true;
  long checked = 0;
  long held = 0;
  /// Every violation of a proved claim; at most kMaxEmpiricalWitnesses
  /// counterexamples for an empirical one.
  std::vector<Witness> witnesses;

  static constexpr std::size_t kMaxEmpiricalWitnesses = 8;

  Status status() const;
  /// Records one instance; the witness is kept when the claim fails.
  void record(bool holds, const std::function<Witness()>& witness);
};

struct VerificationReport {
  std::string check_id;
  Labelled parameter_range;
  std::vector<Finding> findings;
  /// Supplementary tables (expansions, p_n0 polynomials, ...).
  Labelled data;

  bool passed() const;
  Status status() const;
};

struct LabOptions {
  int max_deg = 8;
  /// (b, c) range {1 .. grid}^2.
  int grid = 6;
  int k_max = 4;
  int max_n = 6;
  /// Primitive directions up to this degree for the props1418 range check.
  int n0_max_deg = 4;
  /// b = c values at which the specialized polynomial is compared numerically.
  int b_range = 6;
};

/// Polynomiality, deg_g tau = gcd(n), factor g, deg_(b,c) tau = (n2 - 1, n1 - 1)
/// for interior n, together with the alpha, U-degree, reproduction and
/// translation-lemma checks they rest on, and empirical U / tau integrality.
VerificationReport verify_props_123(int max_deg, int grid, ExponentCache& cache);

/// Closed forms for tau(n1, 1) and tau(1, n2), n1, n2 <= max_n.
VerificationReport verify_props_56(int max_n, int grid, ExponentCache& cache);

/// tau^(b,b)(n): degree n1 + n2 - 1 in b and nonnegative binom(b - 1, l) expansion.
VerificationReport verify_prop_11(int max_deg, int b_range, ExponentCache& cache);

/// Degree bounds of tau(k n0; j), tau(k n0; k) = tau(n0; 1)^k / k!, and
/// tau(k n0; k - 1) = tau(n0; 1)^(k - 2) / (k - 2)! p_n0 with p_n0 = U_(2 n0) - U_n0 / 2.
/// Equality in the degree bounds is reported empirically. Requires interior primitive n0.
VerificationReport verify_props_14_18(NVec n0, int k_max, ExponentCache& cache);
/// The same over every interior primitive n0 with deg(n0) <= n0_max_deg.
VerificationReport verify_props_14_18(int n0_max_deg, int k_max, ExponentCache& cache);

/// Every check, run concurrently, in the fixed order props123, props56, prop11, props1418.
std::vector<VerificationReport> verify_all(const LabOptions& options, ExponentCache& cache);

/// Interior lattice points n1, n2 >= 1 with deg(n) <= max_deg, ordered by degree then n1.
std::vector<NVec> interior_points(int max_deg);

}  // namespace csd
