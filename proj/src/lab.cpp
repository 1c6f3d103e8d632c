#include "csd/lab.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace csd {

namespace {

std::string str(const Rational& q) { return to_string(q); }
std::string str(const MultiPolynomial& p) { return to_string(p); }
std::string str(long v) { return std::to_string(v); }
std::string str(NVec n) {
  std::ostringstream os;
  os << n;
  return os.str();
}
std::string degree_str(int d) { return d == kZeroPolynomialDegree ? "-inf" : std::to_string(d); }

std::vector<DiagramParams> grid_params(int grid) {
  std::vector<DiagramParams> out;
  for (int b = 1; b <= grid; ++b)
    for (int c = 1; c <= grid; ++c) out.emplace_back(b, c);
  return out;
}

void absorb(std::vector<Finding>& into, const std::vector<Finding>& from) {
  for (const auto& f : from) {
    auto it = std::find_if(into.begin(), into.end(), [&](const Finding& x) { return x.claim == f.claim; });
    if (it == into.end()) {
      into.push_back(f);
      continue;
    }
    it->checked += f.checked;
    it->held += f.held;
    for (const auto& w : f.witnesses) {
      if (!it->proved && it->witnesses.size() >= Finding::kMaxEmpiricalWitnesses) break;
      it->witnesses.push_back(w);
    }
  }
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::proved_claim_holds: return "proved-claim-holds";
    case Status::proved_claim_violated: return "proved-claim-violated";
    case Status::empirical_observation: return "empirical-observation";
  }
  return "?";
}

Status Finding::status() const {
  if (!proved) return Status::empirical_observation;
  return held == checked ? Status::proved_claim_holds : Status::proved_claim_violated;
}

void Finding::record(bool holds, const std::function<Witness()>& witness) {
  ++checked;
  if (holds) {
    ++held;
    return;
  }
  if (proved || witnesses.size() < kMaxEmpiricalWitnesses) witnesses.push_back(witness());
}

bool VerificationReport::passed() const {
  return std::none_of(findings.begin(), findings.end(),
                      [](const Finding& f) { return f.status() == Status::proved_claim_violated; });
}

Status VerificationReport::status() const {
  if (!passed()) return Status::proved_claim_violated;
  const bool any_proved = std::any_of(findings.begin(), findings.end(), [](const Finding& f) { return f.proved; });
  return any_proved ? Status::proved_claim_holds : Status::empirical_observation;
}

std::vector<NVec> interior_points(int max_deg) {
  std::vector<NVec> out;
  for (int d = 2; d <= max_deg; ++d)
    for (int n1 = 1; n1 < d; ++n1) out.push_back({n1, d - n1});
  return out;
}

VerificationReport verify_props_123(int max_deg, int grid, ExponentCache& cache) {
  VerificationReport r{"props123", {{"max_deg", str(long{max_deg})}, {"grid", str(long{grid})}}, {}, {}};
  const auto params = grid_params(grid);
  cache.prefetch(params, max_deg);

  Finding alpha{"alpha_nonnegative_integers", "alpha_n(i, j) are nonnegative integers", true, 0, 0, {}};
  Finding u_degree{"U_degree", "deg_(c,b) U_n = (n1 - 1, n2 - 1)", true, 0, 0, {}};
  Finding u_samples{"U_reproduces_samples", "U_n(c, b) equals u_hat_n / g(n0) from the factorization", true, 0, 0, {}};
  Finding lemma{"translation_lemma", "partition sum of binom(g U, s) equals the wall-function coefficient", true, 0, 0, {}};
  Finding poly{"tau_polynomial", "tau(n) at g = g(n0; b, c) equals the wall-function coefficient", true, 0, 0, {}};
  Finding deg_g{"tau_deg_g", "deg_g tau(n) = gcd(n1, n2)", true, 0, 0, {}};
  Finding factor_g{"tau_factor_g", "tau(n) has a factor g", true, 0, 0, {}};
  Finding deg_bc{"tau_deg_bc", "deg_(b,c) tau(n) = (n2 - 1, n1 - 1)", true, 0, 0, {}};
  Finding u_int{"U_integrality", "U_n(c, b) is an integer", false, 0, 0, {}};
  Finding tau_int{"tau_integrality", "tau(n) is an integer", false, 0, 0, {}};
  Finding tau_pos{"tau_nonnegativity", "tau(n) >= 0", false, 0, 0, {}};

  for (const NVec n : interior_points(max_deg)) {
    const NVec n0 = n.primitive();
    const auto& a = cache.alpha(n);
    alpha.record(a.all_nonnegative_integers(), [&] {
      Witness w{n, std::nullopt, {}};
      for (const auto& [ij, v] : a.entries)
        w.values.emplace_back("alpha(" + str(long{ij.first}) + "," + str(long{ij.second}) + ")", str(v));
      return w;
    });

    const auto& U = cache.symbolic_U(n);
    const int dc = degree_in(U, Var::c);
    const int db = degree_in(U, Var::b);
    u_degree.record(dc == n.n1 - 1 && db == n.n2 - 1, [&] {
      return Witness{n, std::nullopt, {{"U", str(U)}, {"deg_c", degree_str(dc)}, {"deg_b", degree_str(db)}}};
    });

    const auto tau = tau_symbolic(n, cache);
    const auto expansion = tau_g_expansion(tau, n);
    const int tg = degree_in(tau, Var::g);
    deg_g.record(tg == n.content(), [&] {
      return Witness{n, std::nullopt, {{"tau", str(tau)}, {"deg_g", degree_str(tg)}}};
    });
    factor_g.record(expansion.g_free_part.is_zero(), [&] {
      return Witness{n, std::nullopt, {{"tau", str(tau)}, {"g_free_part", str(expansion.g_free_part)}}};
    });
    const int tb = degree_in(tau, Var::b);
    const int tc = degree_in(tau, Var::c);
    deg_bc.record(tb == n.n2 - 1 && tc == n.n1 - 1, [&] {
      return Witness{n, std::nullopt, {{"tau", str(tau)}, {"deg_b", degree_str(tb)}, {"deg_c", degree_str(tc)}}};
    });
    r.data.emplace_back("U" + str(n), str(U));
    r.data.emplace_back("tau" + str(n), str(tau));

    for (const auto& p : params) {
      const auto table = cache.table(p, max_deg);
      const Rational g(static_cast<long>(g_factor(n0, p)));
      const Rational u_value = table->U(n);
      const Rational u_poly = evaluate(U, p.c(), p.b());
      u_samples.record(u_value == u_poly, [&] {
        return Witness{n, p, {{"U_factorization", str(u_value)}, {"U_polynomial", str(u_poly)}}};
      });
      u_int.record(is_integer(u_value), [&] { return Witness{n, p, {{"U", str(u_value)}}}; });

      const Rational numeric = tau_numeric(n, *table);
      const Rational partitions = tau_via_partitions(n, *table);
      lemma.record(numeric == partitions, [&] {
        return Witness{n, p, {{"tau_numeric", str(numeric)}, {"tau_via_partitions", str(partitions)}}};
      });
      const Rational symbolic = evaluate(tau, p.c(), p.b(), g);
      poly.record(symbolic == numeric, [&] {
        return Witness{n, p, {{"tau_numeric", str(numeric)}, {"tau_symbolic", str(symbolic)}}};
      });
      tau_int.record(is_integer(numeric), [&] { return Witness{n, p, {{"tau", str(numeric)}}}; });
      tau_pos.record(sgn(numeric) >= 0, [&] { return Witness{n, p, {{"tau", str(numeric)}}}; });
    }
  }
  r.findings = {alpha, u_degree, u_samples, lemma, poly, deg_g, factor_g, deg_bc, u_int, tau_int, tau_pos};
  return r;
}

VerificationReport verify_props_56(int max_n, int grid, ExponentCache& cache) {
  VerificationReport r{"props56", {{"max_n", str(long{max_n})}, {"grid", str(long{grid})}}, {}, {}};
  const auto params = grid_params(grid);
  cache.prefetch(params, max_n + 1);
  Finding row{"tau_n1_1", "tau(n1, 1) = g((n1, 1); b, c) / c binom(c, n1)", true, 0, 0, {}};
  Finding col{"tau_1_n2", "tau(1, n2) = g((1, n2); b, c) / b binom(b, n2)", true, 0, 0, {}};
  for (int m = 1; m <= max_n; ++m) {
    for (const auto& p : params) {
      const auto table = cache.table(p, m + 1);
      const NVec a{m, 1};
      const Rational ta = tau_numeric(a, *table);
      const Rational fa = Rational(static_cast<long>(g_factor(a, p))) / p.c() * binomial(Rational(p.c()), m);
      row.record(ta == fa, [&] { return Witness{a, p, {{"tau_numeric", str(ta)}, {"closed_form", str(fa)}}}; });
      const NVec b{1, m};
      const Rational tb = tau_numeric(b, *table);
      const Rational fb = Rational(static_cast<long>(g_factor(b, p))) / p.b() * binomial(Rational(p.b()), m);
      col.record(tb == fb, [&] { return Witness{b, p, {{"tau_numeric", str(tb)}, {"closed_form", str(fb)}}}; });
    }
  }
  r.findings = {row, col};
  return r;
}

VerificationReport verify_prop_11(int max_deg, int b_range, ExponentCache& cache) {
  VerificationReport r{"prop11", {{"max_deg", str(long{max_deg})}, {"b_range", str(long{b_range})}}, {}, {}};
  std::vector<DiagramParams> diagonal;
  for (int b = 1; b <= b_range; ++b) diagonal.emplace_back(b, b);
  cache.prefetch(diagonal, max_deg);

  Finding degree{"degree", "deg_b tau^(b,b)(n) = n1 + n2 - 1", true, 0, 0, {}};
  Finding positive{"positive_expansion", "tau^(b,b)(n) has nonnegative coefficients in the binom(b - 1, l) basis", true, 0, 0, {}};
  Finding numeric{"specialization", "tau^(b,b)(n) matches the wall-function coefficient at b = c", true, 0, 0, {}};
  const auto b = MultiPolynomial::variable(Var::b);

  for (const NVec n : interior_points(max_deg)) {
    const auto tau = tau_symbolic(n, cache);
    const auto diag = substitute(tau, {{Var::c, b}, {Var::g, b}});
    const int d = degree_in(diag, Var::b);
    const auto vars = diag.variables();
    const bool univariate = std::all_of(vars.begin(), vars.end(), [](Var v) { return v == Var::b; });
    degree.record(univariate && d == n.degree() - 1,
                  [&] { return Witness{n, std::nullopt, {{"tau_bb", str(diag)}, {"deg_b", degree_str(d)}}}; });
    std::string listed = "[";
    bool nonnegative = univariate;
    if (univariate) {
      const auto coeffs = shifted_binomial_expand(diag);
      for (std::size_t l = 0; l < coeffs.size(); ++l) {
        listed += (l ? ", " : "") + str(coeffs[l]);
        nonnegative = nonnegative && sgn(coeffs[l]) >= 0;
      }
    }
    listed += "]";
    positive.record(nonnegative,
                    [&] { return Witness{n, std::nullopt, {{"tau_bb", str(diag)}, {"expansion", listed}}}; });
    r.data.emplace_back("tau_bb" + str(n), str(diag));
    r.data.emplace_back("expansion" + str(n), listed);

    for (const auto& p : diagonal) {
      const Rational direct = tau_numeric(n, *cache.table(p, max_deg));
      const Rational poly = evaluate(diag, 0, p.b());
      numeric.record(direct == poly, [&] {
        return Witness{n, p, {{"tau_numeric", str(direct)}, {"tau_bb", str(poly)}}};
      });
    }
  }
  r.findings = {degree, positive, numeric};
  return r;
}

VerificationReport verify_props_14_18(NVec n0, int k_max, ExponentCache& cache) {
  if (n0.n1 < 1 || n0.n2 < 1 || !n0.is_primitive())
    throw std::invalid_argument("verify_props_14_18: n0 must be primitive with n1, n2 >= 1");
  VerificationReport r{"props1418", {{"n0", str(n0)}, {"k_max", str(long{k_max})}}, {}, {}};

  Finding bound_b{"degree_bound_b", "deg_b tau(k n0; j) <= k n0_2 - j", true, 0, 0, {}};
  Finding bound_c{"degree_bound_c", "deg_c tau(k n0; j) <= k n0_1 - j", true, 0, 0, {}};
  Finding top{"top_coefficient", "tau(k n0; k) = tau(n0; 1)^k / k!", true, 0, 0, {}};
  Finding next{"subleading_coefficient", "tau(k n0; k - 1) = tau(n0; 1)^(k - 2) / (k - 2)! p_n0", true, 0, 0, {}};
  Finding eq_b{"degree_bound_b_equality", "deg_b tau(k n0; j) = k n0_2 - j", false, 0, 0, {}};
  Finding eq_c{"degree_bound_c_equality", "deg_c tau(k n0; j) = k n0_1 - j", false, 0, 0, {}};

  const auto& u1 = cache.symbolic_U(n0);
  const MultiPolynomial p_n0 = k_max >= 2 ? cache.symbolic_U(2 * n0) - MultiPolynomial(Rational(1, 2)) * u1
                                          : MultiPolynomial();
  if (k_max >= 2) r.data.emplace_back("p" + str(n0), str(p_n0));
  MultiPolynomial tau1;

  for (int k = 1; k <= k_max; ++k) {
    const NVec n = k * n0;
    const auto expansion = tau_g_expansion(n, cache);
    if (k == 1) tau1 = expansion.coefficient(1);
    for (int j = 1; j <= k; ++j) {
      const auto coeff = expansion.coefficient(j);
      const int db = degree_in(coeff, Var::b);
      const int dc = degree_in(coeff, Var::c);
      const int limit_b = n.n2 - j;
      const int limit_c = n.n1 - j;
      auto witness = [&] {
        return Witness{n, std::nullopt,
                       {{"j", str(long{j})}, {"tau(n;j)", str(coeff)}, {"deg_b", degree_str(db)},
                        {"deg_c", degree_str(dc)}, {"bound_b", str(long{limit_b})}, {"bound_c", str(long{limit_c})}}};
      };
      bound_b.record(db <= limit_b, witness);
      bound_c.record(dc <= limit_c, witness);
      eq_b.record(db == limit_b, witness);
      eq_c.record(dc == limit_c, witness);
      r.data.emplace_back("tau(" + str(n) + ";" + str(long{j}) + ")", str(coeff));
    }
    const auto lhs = expansion.coefficient(k);
    const auto rhs = pow(tau1, static_cast<unsigned>(k)) * MultiPolynomial(Rational(1) / factorial(k));
    top.record(lhs == rhs, [&] { return Witness{n, std::nullopt, {{"lhs", str(lhs)}, {"rhs", str(rhs)}}}; });
    if (k >= 2) {
      const auto lhs2 = expansion.coefficient(k - 1);
      const auto rhs2 =
          pow(tau1, static_cast<unsigned>(k - 2)) * MultiPolynomial(Rational(1) / factorial(k - 2)) * p_n0;
      next.record(lhs2 == rhs2, [&] { return Witness{n, std::nullopt, {{"lhs", str(lhs2)}, {"rhs", str(rhs2)}}}; });
    }
  }
  r.findings = {bound_b, bound_c, top, next, eq_b, eq_c};
  return r;
}

VerificationReport verify_props_14_18(int n0_max_deg, int k_max, ExponentCache& cache) {
  VerificationReport r{"props1418", {{"n0_max_deg", str(long{n0_max_deg})}, {"k_max", str(long{k_max})}}, {}, {}};
  for (const NVec n0 : interior_points(n0_max_deg)) {
    if (!n0.is_primitive()) continue;
    const auto one = verify_props_14_18(n0, k_max, cache);
    absorb(r.findings, one.findings);
    r.data.insert(r.data.end(), one.data.begin(), one.data.end());
  }
  return r;
}

std::vector<VerificationReport> verify_all(const LabOptions& o, ExponentCache& cache) {
  auto a = std::async(std::launch::async, [&] { return verify_props_123(o.max_deg, o.grid, cache); });
  auto b = std::async(std::launch::async, [&] { return verify_props_56(o.max_n, o.grid, cache); });
  auto c = std::async(std::launch::async, [&] { return verify_prop_11(o.max_deg, o.b_range, cache); });
  auto d = std::async(std::launch::async, [&] { return verify_props_14_18(o.n0_max_deg, o.k_max, cache); });
  return {a.get(), b.get(), c.get(), d.get()};
}

}  // namespace csd
