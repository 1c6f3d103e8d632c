#include "csd/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace csd {

Rational binomial(const Rational& x, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("binomial: negative lower index");
  Rational result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= x - Rational(static_cast<long>(i));
    result /= Rational(static_cast<long>(i + 1));
  }
  return result;
}

Rational factorial(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  Integer r = 1;
  for (std::int64_t i = 2; i <= k; ++i) r *= static_cast<long>(i);
  return Rational(r);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s))
    throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = 1;
  if (slash != std::string_view::npos) {
    std::string_view d = text.substr(slash + 1);
    if (!d.empty() && (d[0] == '-' || d[0] == '+'))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    den = parse_integer(d);
  }
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace csd
