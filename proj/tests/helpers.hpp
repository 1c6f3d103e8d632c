#pragma once

#include <random>
#include <string>

#include "csd/group.hpp"
#include "oracle/oracles.hpp"

namespace testing_support {

inline csd::Rational q(const std::string& text) { return csd::parse_rational(text); }

/// Series from a list of (n1, n2, coefficient) triples.
inline csd::TruncatedSeries series(int L, std::initializer_list<std::tuple<int, int, const char*>> terms) {
  std::vector<csd::TruncatedSeries::Term> out;
  for (const auto& [a, b, c] : terms) out.push_back({{a, b}, q(c)});
  return csd::TruncatedSeries::from_terms(L, std::move(out));
}

inline csd::TruncatedSeries from_dense(const oracle::Dense& d) {
  std::vector<csd::TruncatedSeries::Term> out;
  for (int i = 0; i <= d.L; ++i)
    for (int j = 0; i + j <= d.L; ++j) out.push_back({{i, j}, d.coeff[i][j]});
  return csd::TruncatedSeries::from_terms(d.L, std::move(out));
}

inline bool matches_oracle(const csd::GroupElement& g, const std::pair<oracle::Dense, oracle::Dense>& o) {
  return g.mult1() == from_dense(o.first) && g.mult2() == from_dense(o.second);
}

/// Random series with small integer coefficients; constant term 1 when unit is set.
inline csd::TruncatedSeries random_series(std::mt19937& rng, int L, bool unit, int density = 60) {
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<int> value(-4, 4);
  std::vector<csd::TruncatedSeries::Term> out;
  for (int d = 0; d <= L; ++d)
    for (int i = 0; i <= d; ++i)
      if (coin(rng) < density) {
        csd::Rational r(value(rng), 1 + coin(rng) % 3);
        r.canonicalize();
        out.push_back({{i, d - i}, r});
      }
  auto s = csd::TruncatedSeries::from_terms(L, std::move(out));
  if (!unit) return s;
  return csd::add(csd::subtract(s, csd::TruncatedSeries::constant(L, s.constant_term())), csd::TruncatedSeries::one(L));
}

inline csd::Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  csd::Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace testing_support
