#include "csd/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace csd {

namespace {

constexpr std::size_t dense_index(Monomial m) {
  const auto d = static_cast<std::size_t>(m.degree());
  return d * (d + 1) / 2 + static_cast<std::size_t>(m.n1);
}

void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.truncation_degree() != b.truncation_degree())
    throw std::invalid_argument(std::string(op) + ": mismatched truncation degrees " +
                                std::to_string(a.truncation_degree()) + " and " +
                                std::to_string(b.truncation_degree()));
}

void require_unit_constant(const TruncatedSeries& f, const char* op) {
  if (f.constant_term() != 1)
    throw std::invalid_argument(std::string(op) + ": constant term must be exactly 1, got " +
                                to_string(f.constant_term()));
}

}  // namespace

// Dense triangular scratch buffer; iteration order of the dense index is the
// Monomial order, so finishing yields sorted canonical terms directly.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(int degree)
      : degree_(degree), coeffs_(dense_index({degree, 0}) + 1) {}

  void add(Monomial m, const Rational& q) {
    if (m.degree() <= degree_) coeffs_[dense_index(m)] += q;
  }

  // Adds the truncated product a*b (shifted by `offset`) into the buffer.
  void add_product(const TruncatedSeries& a, const TruncatedSeries& b, Monomial offset = {}) {
    const int budget = degree_ - offset.degree();
    if (budget < 0) return;
    auto bt = b.terms();
    for (const auto& ta : a.terms()) {
      const int da = ta.monomial.degree();
      if (da > budget) break;
      for (const auto& tb : bt) {
        if (da + tb.monomial.degree() > budget) break;
        const Monomial m{ta.monomial.n1 + tb.monomial.n1 + offset.n1,
                         ta.monomial.n2 + tb.monomial.n2 + offset.n2};
        mpq_class& slot = coeffs_[dense_index(m)];
        mpq_mul(scratch_.get_mpq_t(), ta.coefficient.get_mpq_t(), tb.coefficient.get_mpq_t());
        mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), scratch_.get_mpq_t());
      }
    }
  }

  void add_scaled(const TruncatedSeries& a, const Rational& factor, Monomial offset = {}) {
    for (const auto& t : a.terms()) {
      const Monomial m{t.monomial.n1 + offset.n1, t.monomial.n2 + offset.n2};
      if (m.degree() > degree_) break;
      coeffs_[dense_index(m)] += factor * t.coefficient;
    }
  }

  TruncatedSeries finish() && {
    TruncatedSeries out(degree_);
    std::size_t idx = 0;
    for (int d = 0; d <= degree_; ++d) {
      for (int n1 = 0; n1 <= d; ++n1, ++idx) {
        if (sgn(coeffs_[idx]) != 0)
          out.terms_.push_back({Monomial{n1, d - n1}, std::move(coeffs_[idx])});
      }
    }
    return out;
  }

 private:
  int degree_;
  std::vector<Rational> coeffs_;
  Rational scratch_;
};

TruncatedSeries::TruncatedSeries(int truncation_degree) : degree_(truncation_degree) {
  if (truncation_degree < 0)
    throw std::invalid_argument("TruncatedSeries: negative truncation degree");
}

TruncatedSeries TruncatedSeries::constant(int truncation_degree, const Rational& value) {
  return monomial(truncation_degree, {0, 0}, value);
}

TruncatedSeries TruncatedSeries::monomial(int truncation_degree, Monomial m, const Rational& coefficient) {
  if (m.n1 < 0 || m.n2 < 0) throw std::invalid_argument("TruncatedSeries: negative exponent");
  TruncatedSeries s(truncation_degree);
  if (m.degree() <= truncation_degree && sgn(coefficient) != 0) s.terms_.push_back({m, coefficient});
  return s;
}

TruncatedSeries TruncatedSeries::from_terms(int truncation_degree, std::vector<Term> terms) {
  SeriesAccumulator acc(truncation_degree);
  for (const auto& t : terms) {
    if (t.monomial.n1 < 0 || t.monomial.n2 < 0)
      throw std::invalid_argument("TruncatedSeries: negative exponent");
    acc.add(t.monomial, t.coefficient);
  }
  return std::move(acc).finish();
}

Rational TruncatedSeries::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

TruncatedSeries TruncatedSeries::truncated(int degree) const {
  if (degree > degree_)
    throw std::invalid_argument("truncated: target degree " + std::to_string(degree) +
                                " exceeds truncation degree " + std::to_string(degree_));
  TruncatedSeries out(degree);
  for (const auto& t : terms_) {
    if (t.monomial.degree() > degree) break;
    out.terms_.push_back(t);
  }
  return out;
}

TruncatedSeries TruncatedSeries::homogeneous_part(int degree) const {
  TruncatedSeries out(degree_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == degree) out.terms_.push_back(t);
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b, "add");
  SeriesAccumulator acc(a.truncation_degree());
  acc.add_scaled(a, 1);
  acc.add_scaled(b, 1);
  return std::move(acc).finish();
}

TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b, "subtract");
  SeriesAccumulator acc(a.truncation_degree());
  acc.add_scaled(a, 1);
  acc.add_scaled(b, -1);
  return std::move(acc).finish();
}

TruncatedSeries negate(const TruncatedSeries& a) { return scale(a, -1); }

TruncatedSeries scale(const TruncatedSeries& a, const Rational& factor) {
  SeriesAccumulator acc(a.truncation_degree());
  acc.add_scaled(a, factor);
  return std::move(acc).finish();
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b, "mul");
  SeriesAccumulator acc(a.truncation_degree());
  acc.add_product(a, b);
  return std::move(acc).finish();
}

TruncatedSeries shift(const TruncatedSeries& a, Monomial m) {
  SeriesAccumulator acc(a.truncation_degree());
  acc.add_scaled(a, 1, m);
  return std::move(acc).finish();
}

TruncatedSeries pow_int(const TruncatedSeries& f, unsigned k) {
  TruncatedSeries result = TruncatedSeries::one(f.truncation_degree());
  TruncatedSeries base = f;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

TruncatedSeries pow_rational(const TruncatedSeries& f, const Rational& s) {
  require_unit_constant(f, "pow_rational");
  const int L = f.truncation_degree();
  const TruncatedSeries u = subtract(f, TruncatedSeries::one(L));
  SeriesAccumulator acc(L);
  acc.add({0, 0}, 1);
  if (u.is_zero() || sgn(s) == 0) return std::move(acc).finish();

  // binom(s, k) vanishes for k > s when s is a nonnegative integer.
  const bool terminates = is_integer(s) && sgn(s) > 0;
  Rational coeff = 1;
  TruncatedSeries power = TruncatedSeries::one(L);
  for (long k = 1; k <= L; ++k) {
    coeff *= s - Rational(k - 1);
    coeff /= Rational(k);
    if (sgn(coeff) == 0 && terminates) break;
    power = mul(power, u);
    if (power.is_zero()) break;
    acc.add_scaled(power, coeff);
  }
  return std::move(acc).finish();
}

TruncatedSeries substitute_scaled(const TruncatedSeries& f, const TruncatedSeries& g1,
                                  const TruncatedSeries& g2) {
  require_same_degree(f, g1, "substitute_scaled");
  require_same_degree(f, g2, "substitute_scaled");
  require_unit_constant(g1, "substitute_scaled");
  require_unit_constant(g2, "substitute_scaled");
  const int L = f.truncation_degree();

  int max1 = 0;
  int max2 = 0;
  for (const auto& t : f.terms()) {
    max1 = std::max(max1, t.monomial.n1);
    max2 = std::max(max2, t.monomial.n2);
  }
  std::vector<TruncatedSeries> pow1{TruncatedSeries::one(L)};
  std::vector<TruncatedSeries> pow2{TruncatedSeries::one(L)};
  for (int k = 1; k <= max1; ++k) pow1.push_back(mul(pow1.back(), g1));
  for (int k = 1; k <= max2; ++k) pow2.push_back(mul(pow2.back(), g2));

  SeriesAccumulator acc(L);
  for (const auto& t : f.terms()) {
    const Monomial n = t.monomial;
    if (n.n1 == 0 || n.n2 == 0) {
      const TruncatedSeries& p = n.n1 == 0 ? pow2[n.n2] : pow1[n.n1];
      acc.add_scaled(p, t.coefficient, n);
      continue;
    }
    SeriesAccumulator cross(L - n.degree());
    cross.add_product(pow1[n.n1], pow2[n.n2]);
    acc.add_scaled(std::move(cross).finish(), t.coefficient, n);
  }
  return std::move(acc).finish();
}

std::ostream& operator<<(std::ostream& os, Monomial m) { return os << '(' << m.n1 << ',' << m.n2 << ')'; }

std::string to_string(const TruncatedSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : s.terms()) {
    Rational c = t.coefficient;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    first = false;
    const bool unit = c == 1;
    const Monomial m = t.monomial;
    if (m.degree() == 0) {
      os << to_string(c);
      continue;
    }
    if (!unit) os << to_string(c) << "*";
    bool need_star = false;
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (need_star) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      need_star = true;
    };
    var("y1", m.n1);
    var("y2", m.n2);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  return os << to_string(s) << " + O(deg " << s.truncation_degree() + 1 << ")";
}

}  // namespace csd
