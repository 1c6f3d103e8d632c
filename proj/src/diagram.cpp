#include "csd/diagram.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace csd {

namespace {

using Wide = long long;

Wide cross(MVec a, MVec b) { return static_cast<Wide>(a.x) * b.y - static_cast<Wide>(a.y) * b.x; }
Wide dot(MVec a, MVec b) { return static_cast<Wide>(a.x) * b.x + static_cast<Wide>(a.y) * b.y; }

bool same_direction(MVec a, MVec b) { return cross(a, b) == 0 && dot(a, b) > 0; }

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half(MVec v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(MVec a, MVec b) {
  if (half(a) != half(b)) return half(a) < half(b);
  return cross(a, b) > 0;
}

MVec reflect(MVec v) { return {v.x, -v.y}; }

struct Crossing {
  MVec ray;
  NVec normal;
  const TruncatedSeries* function;
};

// Rays crossed by a counterclockwise sweep from s to e (full turn if equal),
// in crossing order.
std::vector<Crossing> ccw_crossings(std::vector<Crossing> rays, MVec s, MVec e) {
  const bool full_turn = same_direction(s, e);
  auto lap = [&](MVec v) { return angle_less(s, v) ? 0 : 1; };
  auto before = [&](MVec a, MVec b) {
    if (lap(a) != lap(b)) return lap(a) < lap(b);
    return angle_less(a, b);
  };
  std::erase_if(rays, [&](const Crossing& c) { return !full_turn && !before(c.ray, e); });
  std::stable_sort(rays.begin(), rays.end(),
                   [&](const Crossing& a, const Crossing& b) { return before(a.ray, b.ray); });
  return rays;
}

MVec primitive_direction(long x, long y) {
  const long g = static_cast<long>(gcd(x, y));
  return {x / g, y / g};
}

}  // namespace

MVec support_direction(NVec n, const DiagramParams& p) {
  if (!n.is_positive()) throw std::invalid_argument("support_direction: normal must lie in N+");
  return primitive_direction(-static_cast<long>(p.c()) * n.n2, static_cast<long>(p.b()) * n.n1);
}

ScatteringDiagram::ScatteringDiagram(DiagramParams params, int max_degree, std::vector<Wall> walls,
                                     std::array<InitialWall, 2> initial_walls)
    : params_(params), max_degree_(max_degree), walls_(std::move(walls)), initial_walls_(std::move(initial_walls)) {
  std::sort(walls_.begin(), walls_.end(),
            [](const Wall& a, const Wall& b) { return slope_less(a.normal, b.normal); });
  for (std::size_t i = 1; i < walls_.size(); ++i)
    if (walls_[i - 1].normal == walls_[i].normal)
      throw std::invalid_argument("ScatteringDiagram: two walls share a normal direction");
}

ScatteringDiagram build_diagram(const DiagramParams& p, int max_degree) {
  return build_diagram(factorize(p, max_degree));
}

ScatteringDiagram build_diagram(const WallExponentTable& table) {
  const DiagramParams& p = table.params();
  const int L = table.max_degree();
  std::vector<Wall> walls;
  for (NVec n0 : table.primitive_directions()) {
    if (n0 == e1 || n0 == e2) continue;
    auto f = wall_function(table, n0);
    if (f == TruncatedSeries::one(L)) continue;
    walls.push_back({n0, support_direction(n0, p), std::move(f)});
  }
  const MVec up = support_direction(e1, p);
  const MVec left = support_direction(e2, p);
  std::array<InitialWall, 2> initial{
      InitialWall{e1, {up, MVec{-up.x, -up.y}}, wall_function(table, e1)},
      InitialWall{e2, {left, MVec{-left.x, -left.y}}, wall_function(table, e2)}};
  return {p, L, std::move(walls), std::move(initial)};
}

GroupElement path_ordered_product(const ScatteringDiagram& d, std::span<const AngularSweep> path) {
  const DiagramParams& p = d.params();
  std::vector<Crossing> rays;
  for (const auto& w : d.walls()) rays.push_back({w.support, w.normal, &w.function});
  for (const auto& w : d.initial_walls())
    for (const MVec r : w.rays) rays.push_back({r, w.normal, &w.function});

  std::vector<std::pair<Crossing, int>> sequence;
  for (const auto& sweep : path) {
    for (const auto& c : rays)
      if (same_direction(c.ray, sweep.start) || same_direction(c.ray, sweep.end))
        throw std::invalid_argument("path_ordered_product: sweep endpoint lies on a support ray");
    const bool ccw = sweep.orientation == Orientation::counterclockwise;
    std::vector<Crossing> local = rays;
    if (!ccw)
      for (auto& c : local) c.ray = reflect(c.ray);
    auto crossed = ccw ? ccw_crossings(std::move(local), sweep.start, sweep.end)
                       : ccw_crossings(std::move(local), reflect(sweep.start), reflect(sweep.end));
    for (auto& c : crossed) {
      if (!ccw) c.ray = reflect(c.ray);
      // Velocity of the sweep where it meets the ray.
      const MVec v = ccw ? MVec{-c.ray.y, c.ray.x} : MVec{c.ray.y, -c.ray.x};
      // sign of <v, n0> = v1 n1 / c + v2 n2 / b
      const Wide pairing = static_cast<Wide>(v.x) * c.normal.n1 * p.b() +
                           static_cast<Wide>(v.y) * c.normal.n2 * p.c();
      sequence.emplace_back(c, pairing < 0 ? 1 : -1);
    }
  }

  GroupElement acc = GroupElement::identity(p, d.max_degree());
  for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
    const auto& [c, sign] = *it;
    const TruncatedSeries f = sign > 0 ? *c.function : pow_rational(*c.function, -1);
    acc = compose_wall_first(c.normal, f, acc);
  }
  return acc;
}

GroupElement path_ordered_product(const ScatteringDiagram& d, const AngularSweep& sweep) {
  return path_ordered_product(d, std::span<const AngularSweep>(&sweep, 1));
}

ConsistencyReport consistency_report(const ScatteringDiagram& d) {
  // (1, 1) lies in the open first quadrant, which carries no support ray.
  const AngularSweep loop{{1, 1}, {1, 1}, Orientation::counterclockwise};
  const GroupElement g = path_ordered_product(d, loop);
  const int L = d.max_degree();
  const auto one = TruncatedSeries::one(L);
  const std::array<TruncatedSeries, 2> residue{subtract(g.mult1(), one), subtract(g.mult2(), one)};

  ConsistencyReport report;
  int lowest = -1;
  for (const auto& r : residue)
    if (!r.is_zero() && (lowest < 0 || r.order() < lowest)) lowest = r.order();
  if (lowest < 0) return report;
  report.consistent = false;
  report.first_failing_degree = lowest;
  report.discrepancy = {residue[0].homogeneous_part(lowest), residue[1].homogeneous_part(lowest)};
  return report;
}

}  // namespace csd
