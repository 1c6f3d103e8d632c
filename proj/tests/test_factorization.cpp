#include <doctest.h>

#include "csd/factorization.hpp"
#include "helpers.hpp"

using namespace csd;
using testing_support::q;
using testing_support::series;

namespace {

std::map<std::pair<int, int>, Rational> as_map(const WallExponentTable& t) {
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& [n, u] : t.exponents()) out[{n.n1, n.n2}] = u;
  return out;
}

}  // namespace

TEST_CASE("target_element") {
  SUBCASE("(1,1), L = 2") {
    const auto t = target_element(DiagramParams(1, 1), 2);
    CHECK(t.mult1() == series(2, {{0, 0, "1"}, {0, 1, "-1"}, {1, 1, "-1"}, {0, 2, "1"}}));
    CHECK(t.mult2() == series(2, {{0, 0, "1"}, {1, 0, "1"}}));
  }
  SUBCASE("(2,2), L = 2") {
    const auto t = target_element(DiagramParams(2, 2), 2);
    CHECK(t.mult1() == series(2, {{0, 0, "1"}, {0, 1, "-2"}, {1, 1, "-4"}, {0, 2, "3"}}));
  }
  SUBCASE("first order, any (b,c)") {
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= 5; ++c) {
        const auto t = target_element(DiagramParams(b, c), 1);
        CHECK(t.mult1() == series(1, {{0, 0, "1"}, {0, 1, std::to_string(-b).c_str()}}));
        CHECK(t.mult2() == series(1, {{0, 0, "1"}, {1, 0, std::to_string(c).c_str()}}));
      }
  }
  SUBCASE("matches the expansion oracle") {
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        CHECK(testing_support::matches_oracle(target_element(DiagramParams(b, c), 6),
                                              oracle::expand_compose({{0, 1, 1}, {1, 0, 1}}, b, c, 6)));
  }
}

TEST_CASE("slope order") {
  CHECK(slope_less(e1, {2, 1}));
  CHECK(slope_less({2, 1}, {1, 1}));
  CHECK(slope_less({1, 1}, e2));
  CHECK_FALSE(slope_less({1, 1}, {2, 2}));
  CHECK_FALSE(slope_less({2, 2}, {1, 1}));
}

TEST_CASE("factorize: A2") {
  const auto t = factorize(DiagramParams(1, 1), 8);
  const std::map<NVec, Rational> expected{{e1, 1}, {{1, 1}, 1}, {e2, 1}};
  CHECK(t.exponents() == expected);
  CHECK(as_map(t) == oracle::pentagon_rewrite(8));
  CHECK(t.restricted(2) == factorize(DiagramParams(1, 1), 2));
}

TEST_CASE("factorize: (2,2) at L = 2") {
  const auto t = factorize(DiagramParams(2, 2), 2);
  CHECK(t.u_hat({1, 1}) == 2);
  CHECK(t.u({1, 1}) == 4);
  CHECK(t.u_hat({2, 0}) == 0);
  CHECK(t.u_hat({0, 2}) == 0);
}

TEST_CASE("factorize: C2 is of finite type") {
  const auto t = factorize(DiagramParams(1, 2), 6);
  // u = b binom(c, n1) on (n1, 1): u(1,1) = 2 with delta(1,1) = 2, u(2,1) = 1 with delta(2,1) = 1.
  CHECK(t.u({1, 1}) == 2);
  CHECK(t.u_hat({1, 1}) == 1);
  CHECK(t.u({2, 1}) == 1);
  CHECK(t.u_hat({2, 1}) == 1);
  const std::map<NVec, Rational> expected{{e1, 1}, {{2, 1}, 1}, {{1, 1}, 1}, {e2, 1}};
  CHECK(t.exponents() == expected);
  CHECK(t.primitive_directions() == std::vector<NVec>{e1, {2, 1}, {1, 1}, e2});
}

TEST_CASE("factorize agrees with the dense peeling oracle") {
  for (int b = 1; b <= 4; ++b)
    for (int c = 1; c <= 4; ++c) {
      CAPTURE(b);
      CAPTURE(c);
      CHECK(as_map(factorize(DiagramParams(b, c), 7)) == oracle::peel(b, c, 7));
    }
}

TEST_CASE("reproduction at every degree") {
  for (const auto& [b, c] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 3}, {1, 4}}) {
    const int L = 7;
    const auto t = factorize(DiagramParams(b, c), L);
    for (int l = 2; l <= L; ++l) CHECK(ordered_product(t, l) == target_element(DiagramParams(b, c), l));
  }
}

TEST_CASE("ordered_product") {
  const DiagramParams p(1, 1);
  WallExponentTable initial(p, 4);
  CHECK(ordered_product(initial).is_identity());
  initial.set(e1, 1);
  initial.set(e2, 1);
  // Psi[e1] acts first: y1 -> y1 (1 + y2)^-1, y2 -> y2 (1 + y1 (1 + y2)^-1).
  const auto inv = pow_rational(series(4, {{0, 0, "1"}, {0, 1, "1"}}), -1);
  CHECK(ordered_product(initial).mult1() == inv);
  CHECK(ordered_product(initial).mult2() == TruncatedSeries::one(4) + shift(inv, e1.monomial()));
  CHECK(testing_support::matches_oracle(ordered_product(initial),
                                        oracle::expand_compose({{1, 0, 1}, {0, 1, 1}}, 1, 1, 4)));
  CHECK(ordered_product(factorize(p, 6)) == target_element(p, 6));
}

TEST_CASE("ordered_product matches the expansion oracle on arbitrary tables") {
  const DiagramParams p(2, 3);
  WallExponentTable t(p, 6);
  t.set(e1, q("3/2"));
  t.set({2, 1}, -2);
  t.set({4, 2}, q("1/3"));
  t.set({1, 2}, 5);
  t.set(e2, 1);
  const std::vector<oracle::WallSpec> walls{{1, 0, q("3/2")}, {2, 1, -2}, {4, 2, q("1/3")}, {1, 2, 5}, {0, 1, 1}};
  CHECK(testing_support::matches_oracle(ordered_product(t), oracle::expand_compose(walls, 2, 3, 6)));
}

TEST_CASE("WallExponentTable bookkeeping") {
  WallExponentTable t(DiagramParams(1, 2), 5);
  t.set({2, 1}, 3);
  CHECK(t.u_hat({2, 1}) == 3);
  t.set({2, 1}, 0);
  CHECK(t.exponents().empty());
  CHECK_THROWS_AS(t.set({3, 3}, 1), std::invalid_argument);
  CHECK_THROWS_AS(t.set({-1, 2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(t.set({0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(t.restricted(6), std::invalid_argument);
  CHECK_THROWS_AS(factorize(DiagramParams(1, 1), 1), std::invalid_argument);
}

TEST_CASE("integrality and axis zeros") {
  for (int b = 1; b <= 4; ++b)
    for (int c = 1; c <= 4; ++c) {
      const auto t = factorize(DiagramParams(b, c), 8);
      CHECK(t.u_hat(e1) == 1);
      CHECK(t.u_hat(e2) == 1);
      for (const auto& [n, u] : t.exponents()) {
        CHECK(is_integer(u));
        CHECK(sgn(u) > 0);
        if (n.n1 == 0 || n.n2 == 0) CHECK(n.degree() == 1);
      }
    }
}

TEST_CASE("truncation coherence") {
  for (const auto& [b, c] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 2}}) {
    const auto big = factorize(DiagramParams(b, c), 9);
    for (int l = 2; l < 9; ++l) CHECK(big.restricted(l) == factorize(DiagramParams(b, c), l));
  }
}

TEST_CASE("finite type for bc <= 3") {
  const std::map<std::pair<int, int>, std::size_t> expected_walls{{{1, 1}, 3}, {{1, 2}, 4}, {{2, 1}, 4}, {{1, 3}, 6}, {{3, 1}, 6}};
  for (const auto& [bc, count] : expected_walls) {
    const auto t = factorize(DiagramParams(bc.first, bc.second), 12);
    CHECK(t.exponents().size() == count);
    for (const auto& [n, u] : t.exponents()) CHECK(n.degree() <= 5);
  }
}

TEST_CASE("u_hat = g U and u_hat = gcd(n) g u / (bc)") {
  for (int b = 1; b <= 3; ++b)
    for (int c = 1; c <= 3; ++c) {
      const DiagramParams p(b, c);
      const auto t = factorize(p, 8);
      for (const auto& [n, uh] : t.exponents()) {
        const int k = std::gcd(n.n1, n.n2);
        const NVec n0{n.n1 / k, n.n2 / k};
        CHECK(uh == g_factor(n0, p) * t.U(n));
        CHECK(uh * b * c == Rational(k) * g_factor(n, p) * t.u(n));
      }
    }
}

TEST_CASE("wall_function") {
  const auto t = factorize(DiagramParams(2, 2), 6);
  const auto f = wall_function(t, {1, 1});
  CHECK(f.coefficient({1, 1}) == 2);
  CHECK(f == wall_function(t, {1, 1}, 6));
  for (const auto& term : f.terms()) CHECK(term.monomial.n1 == term.monomial.n2);
  CHECK(wall_function(factorize(DiagramParams(1, 1), 8), {1, 1}) == series(8, {{0, 0, "1"}, {1, 1, "1"}}));
  CHECK_THROWS_AS(wall_function(t, {2, 2}), std::invalid_argument);
}
