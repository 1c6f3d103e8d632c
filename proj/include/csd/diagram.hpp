#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "csd/factorization.hpp"

namespace csd {

/// Integer direction vector in M_R = R^2.
struct MVec {
  long x = 0;
  long y = 0;

  friend constexpr bool operator==(MVec, MVec) = default;
};

/// Primitive direction of the support ray R>=0 (-c n2, b n1) of the wall
/// with normal n (orthogonal to n under <m, n> = m1 n1 / c + m2 n2 / b).
MVec support_direction(NVec n, const DiagramParams& p);

/// Wall on a ray from the origin with primitive normal and wall function in Q[[y^normal]].
struct Wall {
  NVec normal;
  MVec support;
  TruncatedSeries function;
};

/// Incoming wall supported on a full line, stored as two opposite rays
/// sharing one function.
struct InitialWall {
  NVec normal;
  std::array<MVec, 2> rays;
  TruncatedSeries function;
};

class ScatteringDiagram {
 public:
  ScatteringDiagram(DiagramParams params, int max_degree, std::vector<Wall> walls,
                    std::array<InitialWall, 2> initial_walls);

  const DiagramParams& params() const { return params_; }
  int max_degree() const { return max_degree_; }
  /// Interior walls, ascending slope of the normal. At most one per normal.
  const std::vector<Wall>& walls() const { return walls_; }
  const std::array<InitialWall, 2>& initial_walls() const { return initial_walls_; }

 private:
  DiagramParams params_;
  int max_degree_;
  std::vector<Wall> walls_;
  std::array<InitialWall, 2> initial_walls_;
};

ScatteringDiagram build_diagram(const DiagramParams& p, int max_degree);
/// Diagram for an arbitrary exponent table (tables need not come from factorize).
ScatteringDiagram build_diagram(const WallExponentTable& table);

enum class Orientation { counterclockwise, clockwise };

/// Angular sweep about the origin from `start` to `end`. Equal start and end
/// directions denote one full turn. In rank 2 every wall is a ray from the
/// origin, so any admissible path is homotopic to a chain of sweeps.
struct AngularSweep {
  MVec start;
  MVec end;
  Orientation orientation = Orientation::counterclockwise;
};

/// Signed product of wall crossings in sweep order. A crossing contributes
/// the wall's element when <velocity, normal> < 0 and its inverse otherwise.
/// Throws std::invalid_argument if a sweep endpoint lies on a support ray.
GroupElement path_ordered_product(const ScatteringDiagram& d, std::span<const AngularSweep> path);
GroupElement path_ordered_product(const ScatteringDiagram& d, const AngularSweep& sweep);

struct ConsistencyReport {
  bool consistent = true;
  /// Lowest degree at which the full-loop product differs from the identity.
  std::optional<int> first_failing_degree;
  /// Offending terms of mult1 - 1 and mult2 - 1 at that degree.
  std::array<TruncatedSeries, 2> discrepancy{TruncatedSeries(0), TruncatedSeries(0)};
};

/// Evaluates the counterclockwise full loop and compares it with the identity
/// modulo degree > max_degree.
ConsistencyReport consistency_report(const ScatteringDiagram& d);
inline bool check_consistency(const ScatteringDiagram& d) { return consistency_report(d).consistent; }

}  // namespace csd
