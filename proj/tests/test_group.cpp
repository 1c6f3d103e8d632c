#include <doctest.h>

#include "csd/group.hpp"
#include "helpers.hpp"

using namespace csd;
using testing_support::q;
using testing_support::series;

namespace {

// Psi[n]^t as an elementary wall: Psi[n]^(delta(n) s) with s = t / delta(n).
GroupElement psi(NVec n, const Rational& t, const DiagramParams& p, int L) {
  return elementary_wall(n, t / normalized_factor(n, p), p, L);
}

std::vector<NVec> primitive_up_to(int max_deg) {
  std::vector<NVec> out;
  for (int d = 1; d <= max_deg; ++d)
    for (int a = 0; a <= d; ++a)
      if (NVec n{a, d - a}; n.is_primitive()) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("pairing_skew") {
  CHECK(pairing_skew(e1, e2) == 1);
  CHECK(pairing_skew({3, 5}, {3, 5}) == 0);
  CHECK(pairing_skew({1, 1}, {1, 0}) == -1);
  CHECK(pairing_skew({2, 7}, {4, 1}) == -pairing_skew({4, 1}, {2, 7}));
}

TEST_CASE("normalized_factor") {
  CHECK(normalized_factor(e1, DiagramParams(3, 5)) == 5);
  CHECK(normalized_factor({1, 1}, DiagramParams(2, 2)) == 2);
  CHECK(normalized_factor({2, 1}, DiagramParams(1, 2)) == 1);
  CHECK_THROWS_AS(normalized_factor({0, 0}, DiagramParams(1, 1)), std::invalid_argument);
  // delta(n) n lies in (cZ) + (bZ), and no smaller positive multiple does.
  for (int b = 1; b <= 4; ++b)
    for (int c = 1; c <= 4; ++c)
      for (NVec n : primitive_up_to(4)) {
        const Rational d = normalized_factor(n, DiagramParams(b, c));
        const Rational x = d * n.n1 / c;
        const Rational y = d * n.n2 / b;
        CHECK(is_integer(x));
        CHECK(is_integer(y));
        CHECK(gcd(x.get_num().get_si(), y.get_num().get_si()) == 1);
      }
}

TEST_CASE("g_factor") {
  CHECK(g_factor({1, 1}, DiagramParams(2, 2)) == 2);
  CHECK(g_factor({1, 1}, DiagramParams(6, 4)) == 2);
  CHECK(g_factor({2, 1}, DiagramParams(1, 2)) == 2);
  for (int k = 1; k <= 5; ++k) CHECK(g_factor({k, k}, DiagramParams(4, 6)) == g_factor({1, 1}, DiagramParams(4, 6)));
  CHECK_THROWS_AS(g_factor({0, 0}, DiagramParams(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(DiagramParams(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(DiagramParams(1, -2), std::invalid_argument);
}

TEST_CASE("elementary_wall") {
  const DiagramParams a2(1, 1);
  const int L = 5;
  const auto w = elementary_wall(e1, 1, a2, L);
  CHECK(w.mult1() == TruncatedSeries::one(L));
  CHECK(w.mult2() == series(L, {{0, 0, "1"}, {1, 0, "1"}}));

  const auto f = series(L, {{0, 0, "1"}, {1, 1, "1"}});
  const auto d = elementary_wall({1, 1}, 1, a2, L);
  CHECK(d.mult1() == pow_rational(f, -1));
  CHECK(d.mult2() == f);

  CHECK(elementary_wall({2, 3}, 0, DiagramParams(2, 5), L).is_identity());
  CHECK_THROWS_AS(elementary_wall({0, 0}, 1, a2, L), std::invalid_argument);
}

TEST_CASE("elementary_wall is injective in (n, s)") {
  const DiagramParams p(2, 3);
  const int L = 5;
  std::vector<std::pair<NVec, Rational>> keys;
  std::vector<GroupElement> images;
  for (int d = 1; d <= L; ++d)
    for (int a = 0; a <= d; ++a)
      for (const char* s : {"1", "-1", "1/2", "3"}) {
        keys.emplace_back(NVec{a, d - a}, q(s));
        images.push_back(elementary_wall({a, d - a}, q(s), p, L));
      }
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) CHECK(images[i] != images[j]);
}

TEST_CASE("compose and invert") {
  const DiagramParams p(1, 1);
  const int L = 6;
  const auto id = GroupElement::identity(p, L);
  const auto w = elementary_wall({1, 1}, 3, p, L);
  CHECK(compose(w, id) == w);
  CHECK(compose(id, w) == w);
  CHECK(compose(w, invert(w)) == id);
  CHECK(compose(invert(w), w) == id);
  CHECK(invert(id) == id);
  CHECK(invert(elementary_wall({2, 1}, q("5/2"), DiagramParams(2, 3), L)) ==
        elementary_wall({2, 1}, q("-5/2"), DiagramParams(2, 3), L));
  CHECK_THROWS_AS(compose(w, GroupElement::identity(DiagramParams(1, 2), L)), std::invalid_argument);
  CHECK_THROWS_AS(compose(w, GroupElement::identity(p, L - 1)), std::invalid_argument);
}

TEST_CASE("random products: associativity and involution") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(0, 3);
  const DiagramParams p(2, 3);
  const int L = 5;
  auto random_element = [&] {
    GroupElement g = GroupElement::identity(p, L);
    for (int i = 0; i < 3; ++i) {
      NVec n{coord(rng), coord(rng)};
      if (n.is_zero()) n = e2;
      g = compose(g, elementary_wall(n, testing_support::random_rational(rng), p, L));
    }
    return g;
  };
  for (int trial = 0; trial < 8; ++trial) {
    const auto x = random_element();
    const auto y = random_element();
    const auto z = random_element();
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    CHECK(invert(invert(x)) == x);
    CHECK(compose(x, invert(x)).is_identity());
  }
}

TEST_CASE("composition convention: leftmost factor acts first") {
  // Psi[e2] Psi[e1] at (b, c) = (1, 1); the flipped order gives the mirror image.
  const DiagramParams p(1, 1);
  const int L = 2;
  const auto target = compose(elementary_wall(e2, 1, p, L), elementary_wall(e1, 1, p, L));
  CHECK(target.mult1() == series(L, {{0, 0, "1"}, {0, 1, "-1"}, {1, 1, "-1"}, {0, 2, "1"}}));
  CHECK(target.mult2() == series(L, {{0, 0, "1"}, {1, 0, "1"}}));
  const auto flipped = compose(elementary_wall(e1, 1, p, L), elementary_wall(e2, 1, p, L));
  CHECK(flipped != target);
}

TEST_CASE("pentagon golden test") {
  const DiagramParams p(1, 1);
  const int L = 6;
  const auto lhs = compose(elementary_wall(e2, 1, p, L), elementary_wall(e1, 1, p, L));
  const auto rhs = compose(compose(elementary_wall(e1, 1, p, L), elementary_wall({1, 1}, 1, p, L)),
                           elementary_wall(e2, 1, p, L));
  CHECK(lhs == rhs);
  for (int l = 0; l <= L; ++l) CHECK(equal_mod_degree(lhs, rhs, l));
}

TEST_CASE("equal_mod_degree") {
  const DiagramParams p(1, 1);
  const int L = 4;
  const auto w = elementary_wall({1, 1}, 1, p, L);
  const auto id = GroupElement::identity(p, L);
  CHECK(equal_mod_degree(w, w, 4));
  CHECK(equal_mod_degree(w, id, 1));
  CHECK_FALSE(equal_mod_degree(w, id, 2));
  CHECK_THROWS_AS(equal_mod_degree(w, id, 5), std::invalid_argument);
}

TEST_CASE("parallel walls commute") {
  const DiagramParams p(2, 3);
  const int L = 8;
  for (NVec n0 : primitive_up_to(3))
    for (int k = 1; k * n0.degree() <= 4; ++k) {
      const auto a = elementary_wall(n0, q("2/3"), p, L);
      const auto b = elementary_wall(k * n0, q("-5"), p, L);
      CHECK(compose(a, b) == compose(b, a));
    }
}

TEST_CASE("pentagon relation for primitive pairs up to degree 3") {
  // Psi[n']^(1/s) Psi[n]^(1/s) = Psi[n]^(1/s) Psi[n + n']^(1/s) Psi[n']^(1/s), s = {n, n'}.
  const int L = 8;
  for (const DiagramParams p : {DiagramParams(1, 1), DiagramParams(1, 2), DiagramParams(2, 3)}) {
    int checked = 0;
    for (NVec n : primitive_up_to(3))
      for (NVec np : primitive_up_to(3)) {
        const auto s = pairing_skew(n, np);
        if (s == 0) continue;
        Rational t(1, static_cast<long>(s));
        t.canonicalize();
        const auto lhs = compose(psi(np, t, p, L), psi(n, t, p, L));
        const auto rhs = compose(compose(psi(n, t, p, L), psi(n + np, t, p, L)), psi(np, t, p, L));
        CHECK(lhs == rhs);
        ++checked;
      }
    CHECK(checked == 20);
  }
}

TEST_CASE("wall_element and compose_wall_first") {
  const DiagramParams p(2, 3);
  const int L = 7;
  const NVec n0{1, 2};
  const auto f = mul(pow_rational(add(TruncatedSeries::one(L), TruncatedSeries::monomial(L, {1, 2})), 3),
                     pow_rational(add(TruncatedSeries::one(L), TruncatedSeries::monomial(L, {2, 4})), q("1/2")));
  const auto rest = compose(elementary_wall(e1, 1, p, L), elementary_wall({1, 1}, 2, p, L));
  CHECK(compose_wall_first(n0, f, rest) == compose(wall_element(n0, f, p), rest));
  CHECK(wall_element(n0, add(TruncatedSeries::one(L), TruncatedSeries::monomial(L, {1, 2})), p) ==
        elementary_wall(n0, 1, p, L));
  CHECK_THROWS_AS(wall_element({2, 4}, f, p), std::invalid_argument);
  CHECK_THROWS_AS(wall_element(n0, add(TruncatedSeries::one(L), TruncatedSeries::monomial(L, {1, 1})), p),
                  std::invalid_argument);
}

TEST_CASE("GroupElement validation") {
  const DiagramParams p(1, 1);
  CHECK_THROWS_AS(GroupElement(p, TruncatedSeries::one(3), TruncatedSeries::one(4)), std::invalid_argument);
  CHECK_THROWS_AS(GroupElement(p, TruncatedSeries::constant(3, 2), TruncatedSeries::one(3)), std::invalid_argument);
}
