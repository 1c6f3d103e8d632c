#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>

#include "csd/factorization.hpp"
#include "csd/polynomial.hpp"

namespace csd {

/// alpha_n(i, j) for 1 <= i <= n1, 1 <= j <= n2, with
/// gcd(n1, n2) u_n(c, b) = sum alpha_n(i, j) binom(c, i) binom(b, j).
/// Entries are kept as rationals; nonnegative integrality is checked, not assumed.
struct AlphaTable {
  NVec n;
  std::map<std::pair<int, int>, Rational> entries;

  Rational at(int i, int j) const;
  bool all_nonnegative_integers() const;

  friend bool operator==(const AlphaTable&, const AlphaTable&) = default;
};

/// Raised when a reconstructed polynomial disagrees with an out-of-sample
/// factorization. Never caught silently inside the library.
class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Optional persistent backing for ExponentCache (the CLI's disk cache).
class CacheBackend {
 public:
  virtual ~CacheBackend() = default;
  /// A stored table for p with max_degree >= min_degree, if any.
  virtual std::optional<WallExponentTable> load_table(const DiagramParams& p, int min_degree) = 0;
  virtual void store_table(const WallExponentTable& t) = 0;
  virtual std::optional<AlphaTable> load_alpha(NVec n) = 0;
  virtual void store_alpha(const AlphaTable& a) = 0;
};

/// Thread-safe memo of factorizations (keyed by (b, c), grown on demand) and
/// of reconstructed alpha tables. Finished tables are shared read-only.
class ExponentCache {
 public:
  explicit ExponentCache(std::shared_ptr<CacheBackend> backend = nullptr);

  /// A factorization for p valid at least up to min_degree.
  std::shared_ptr<const WallExponentTable> table(const DiagramParams& p, int min_degree);

  /// Computes the missing factorizations concurrently; the cache contents
  /// afterwards do not depend on scheduling.
  void prefetch(std::span<const DiagramParams> params, int min_degree);

  const AlphaTable& alpha(NVec n);
  const MultiPolynomial& symbolic_U(NVec n);

 private:
  std::shared_ptr<CacheBackend> backend_;
  std::mutex mutex_;
  std::map<DiagramParams, std::shared_ptr<const WallExponentTable>> tables_;
  std::map<NVec, std::unique_ptr<AlphaTable>> alphas_;
  std::map<NVec, std::unique_ptr<MultiPolynomial>> polys_;
};

/// u_n(c, b) = delta(n) u_hat(n) at the given parameters.
Rational sample_u(NVec n, const DiagramParams& p, ExponentCache& cache);
/// Uncached: runs factorize(p, deg(n)).
Rational sample_u(NVec n, const DiagramParams& p);

/// Corner of the sampling grid {c0 .. c0 + n1 - 1} x {b0 .. b0 + n2 - 1}.
struct GridOrigin {
  int c0 = 1;
  int b0 = 1;
};

/// Solves for alpha_n from samples of gcd(n) u_n on the grid and validates the
/// result at two points outside it. Requires n1, n2 >= 1. Throws
/// ReconstructionError on validation failure.
AlphaTable reconstruct_alpha(NVec n, ExponentCache& cache, GridOrigin origin = {});

/// U_n(c, b) = (1/bc) sum alpha(i, j) binom(c, i) binom(b, j), assembled as
/// sum alpha(i, j) / (i! j!) (c-1)...(c-i+1) (b-1)...(b-j+1).
MultiPolynomial symbolic_U(const AlphaTable& alpha);

}  // namespace csd
