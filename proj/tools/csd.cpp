#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "csd/diagram.hpp"
#include "csd/io.hpp"
#include "csd/lab.hpp"

namespace {

using namespace csd;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExponentCache make_cache() {
  if (auto dir = io::DiskCache::directory_from_environment()) return ExponentCache(std::make_shared<io::DiskCache>(*dir));
  return ExponentCache();
}

NVec parse_nvec(const std::string& text) {
  static const std::regex pattern(R"(\s*(-?[0-9]+)\s*,\s*(-?[0-9]+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("--n expects \"n1,n2\", got \"" + text + "\"");
  const NVec n{std::stoi(m[1].str()), std::stoi(m[2].str())};
  if (!n.is_positive()) throw UsageError("lattice point must be nonnegative and nonzero");
  return n;
}

WallExponentTable read_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return io::parse_table(buffer.str());
  } catch (const io::FormatError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string render(const WallExponentTable& t, const std::string& format) {
  if (format == "csv") return io::to_csv(t);
  if (format == "table") return io::to_table_text(t);
  return io::to_json_text(t);
}

struct FactorizeArgs {
  int b = 0;
  int c = 0;
  int max_deg = 8;
  std::string format = "json";
  std::string table;
};

int run_factorize(const FactorizeArgs& a) {
  WallExponentTable t = [&] {
    if (!a.table.empty()) return read_table_file(a.table);
    if (a.b < 1 || a.c < 1) throw UsageError("--b and --c must be positive integers");
    ExponentCache cache = make_cache();
    auto stored = cache.table(DiagramParams(a.b, a.c), a.max_deg);
    return stored->max_degree() == a.max_deg ? *stored : stored->restricted(a.max_deg);
  }();
  std::cout << render(t, a.format) << std::flush;
  return 0;
}

struct TauArgs {
  std::string n;
  int b = 0;
  int c = 0;
  bool symbolic = false;
  std::string format = "text";
};

int run_tau(const TauArgs& a) {
  const NVec n = parse_nvec(a.n);
  ExponentCache cache = make_cache();
  if (a.symbolic) {
    if (n.n1 < 1 || n.n2 < 1) throw UsageError("--symbolic requires n1, n2 >= 1");
    const auto tau = tau_symbolic(n, cache);
    const auto e = tau_g_expansion(tau, n);
    std::ostringstream os;
    if (a.format == "json") {
      os << io::expansion_to_json(e, tau).dump(2) << "\n";
    } else {
      os << "tau" << n << " = " << tau << "\n";
      for (auto it = e.coefficients.rbegin(); it != e.coefficients.rend(); ++it)
        os << "g^" << it->first << ": " << it->second << "\n";
    }
    std::cout << os.str() << std::flush;
    return 0;
  }
  if (a.b < 1 || a.c < 1) throw UsageError("numeric tau needs positive --b and --c (or --symbolic)");
  const DiagramParams p(a.b, a.c);
  const Rational value = tau_numeric(n, p, cache);
  if (a.format == "json") {
    io::Json j;
    j["n"] = io::Json::array({n.n1, n.n2});
    j["b"] = a.b;
    j["c"] = a.c;
    j["tau"] = to_string(value);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(value) << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string check;
  LabOptions options;
  std::string n0;
  std::string format = "json";
};

int run_verify(const VerifyArgs& a) {
  ExponentCache cache = make_cache();
  const LabOptions& o = a.options;
  std::vector<VerificationReport> reports;
  if (a.check == "all") {
    reports = verify_all(o, cache);
  } else if (a.check == "props123") {
    reports.push_back(verify_props_123(o.max_deg, o.grid, cache));
  } else if (a.check == "props56") {
    reports.push_back(verify_props_56(o.max_n, o.grid, cache));
  } else if (a.check == "prop11") {
    reports.push_back(verify_prop_11(o.max_deg, o.b_range, cache));
  } else if (!a.n0.empty()) {
    const NVec n0 = parse_nvec(a.n0);
    if (n0.n1 < 1 || n0.n2 < 1 || !n0.is_primitive()) throw UsageError("--n0 must be primitive with n1, n2 >= 1");
    reports.push_back(verify_props_14_18(n0, o.k_max, cache));
  } else {
    reports.push_back(verify_props_14_18(o.n0_max_deg, o.k_max, cache));
  }
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  std::ostringstream os;
  if (a.format == "text") {
    for (const auto& r : reports) os << io::report_to_text(r);
  } else if (a.check == "all") {
    os << io::reports_to_json(reports).dump(2) << "\n";
  } else {
    io::Json j;
    j["schema"] = io::kSchemaVersion;
    j.update(io::report_to_json(reports.front()));
    os << j.dump(2) << "\n";
  }
  std::cout << os.str() << std::flush;
  return passed ? 0 : kExitViolation;
}

struct ConsistencyArgs {
  int b = 0;
  int c = 0;
  int max_deg = 8;
  std::string table;
};

int run_consistency(const ConsistencyArgs& a) {
  WallExponentTable t = [&] {
    if (!a.table.empty()) return read_table_file(a.table);
    if (a.b < 1 || a.c < 1) throw UsageError("--b and --c must be positive integers (or pass --table)");
    ExponentCache cache = make_cache();
    auto stored = cache.table(DiagramParams(a.b, a.c), a.max_deg);
    return stored->max_degree() == a.max_deg ? *stored : stored->restricted(a.max_deg);
  }();
  const auto report = consistency_report(build_diagram(t));
  if (report.consistent) {
    std::cout << "consistent: b = " << t.params().b() << ", c = " << t.params().c() << ", modulo degree > "
              << t.max_degree() << "\n";
    return 0;
  }
  std::cout << "inconsistent: first failing degree " << *report.first_failing_degree << "\n"
            << "  mult1 - 1: " << report.discrepancy[0] << "\n"
            << "  mult2 - 1: " << report.discrepancy[1] << "\n";
  return kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank-2 cluster scattering diagrams: wall exponents, wall functions, coefficient checks."};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "csv", "table"});

  FactorizeArgs fa;
  auto* factorize = app.add_subcommand("factorize", "Wall exponents and wall-function coefficients for (b, c)");
  factorize->add_option("--b", fa.b, "Positive integer b")->check(CLI::PositiveNumber);
  factorize->add_option("--c", fa.c, "Positive integer c")->check(CLI::PositiveNumber);
  factorize->add_option("--max-deg", fa.max_deg, "Truncation degree (>= 2)")->check(CLI::Range(2, 1000));
  factorize->add_option("--format", fa.format, "json, csv or table")->check(formats);
  factorize->add_option("--table", fa.table, "Re-emit a stored JSON table instead of computing")
      ->check(CLI::ExistingFile);

  TauArgs ta;
  auto* tau = app.add_subcommand("tau", "Wall-function coefficient tau(n), numeric or symbolic in (g, b, c)");
  tau->add_option("--n", ta.n, "Lattice point \"n1,n2\"")->required();
  tau->add_option("--b", ta.b, "Positive integer b")->check(CLI::PositiveNumber);
  tau->add_option("--c", ta.c, "Positive integer c")->check(CLI::PositiveNumber);
  tau->add_flag("--symbolic", ta.symbolic, "Polynomial in (g, b, c) and its g-expansion");
  tau->add_option("--format", ta.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the propositions over a parameter range");
  verify->add_option("--check", va.check, "props123, props56, prop11, props1418 or all")
      ->required()
      ->check(CLI::IsMember({"props123", "props56", "prop11", "props1418", "all"}));
  verify->add_option("--max-deg", va.options.max_deg, "Largest deg(n)")->check(CLI::Range(2, 64));
  verify->add_option("--grid", va.options.grid, "(b, c) range {1..grid}^2")->check(CLI::Range(1, 64));
  verify->add_option("--kmax", va.options.k_max, "Largest multiple k")->check(CLI::Range(1, 16));
  verify->add_option("--max-n", va.options.max_n, "Largest n1 / n2 in the closed-form families")
      ->check(CLI::Range(1, 64));
  verify->add_option("--n0-max-deg", va.options.n0_max_deg, "Largest deg(n0) for props1418")
      ->check(CLI::Range(2, 16));
  verify->add_option("--b-range", va.options.b_range, "b = c values compared numerically for prop11")
      ->check(CLI::Range(1, 64));
  verify->add_option("--n0", va.n0, "Single primitive direction \"n1,n2\" for props1418");
  verify->add_option("--format", va.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  ConsistencyArgs ca;
  auto* consistency = app.add_subcommand("consistency", "Full-loop path-ordered product versus the identity");
  consistency->add_option("--b", ca.b, "Positive integer b")->check(CLI::PositiveNumber);
  consistency->add_option("--c", ca.c, "Positive integer c")->check(CLI::PositiveNumber);
  consistency->add_option("--max-deg", ca.max_deg, "Truncation degree (>= 2)")->check(CLI::Range(2, 1000));
  consistency->add_option("--table", ca.table, "Check a stored JSON table instead")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (factorize->parsed()) return run_factorize(fa);
    if (tau->parsed()) return run_tau(ta);
    if (verify->parsed()) return run_verify(va);
    if (consistency->parsed()) return run_consistency(ca);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ReconstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
