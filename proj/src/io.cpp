#include "csd/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

#include "csd/diagram.hpp"

namespace csd::io {

namespace {

Json pair_json(long a, long b) { return Json::array({a, b}); }

NVec read_nvec(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw FormatError("expected an integer pair");
  return {j[0].get<int>(), j[1].get<int>()};
}

Rational read_rational(const Json& j) {
  if (!j.is_string()) throw FormatError("rationals must be serialized as strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

int read_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) throw FormatError(std::string("missing integer field ") + key);
  return j.at(key).get<int>();
}

std::string nvec_str(NVec n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

Json wall_json(const WallExponentTable& t, NVec n0, const TruncatedSeries& f) {
  Json w;
  w["n0"] = pair_json(n0.n1, n0.n2);
  w["g_factor"] = g_factor(n0, t.params());
  Json exps = Json::array();
  Json taus = Json::array();
  for (int k = 1; k * n0.degree() <= t.max_degree(); ++k) {
    const NVec n = k * n0;
    if (sgn(t.u_hat(n)) != 0)
      exps.push_back(Json{{"k", k}, {"u_hat", to_string(t.u_hat(n))}, {"U", to_string(t.U(n))}});
    taus.push_back(Json{{"k", k}, {"value", to_string(f.coefficient(n.monomial()))}});
  }
  w["exponents"] = std::move(exps);
  w["tau"] = std::move(taus);
  return w;
}

// Ascending slope.
std::vector<NVec> interior_directions(const WallExponentTable& t) {
  std::vector<NVec> out;
  for (NVec n0 : t.primitive_directions())
    if (n0 != e1 && n0 != e2) out.push_back(n0);
  return out;
}

// By degree, then n1.
std::vector<NVec> serialization_order(std::vector<NVec> dirs) {
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

void read_exponents(const Json& wall, WallExponentTable& t) {
  const NVec n0 = read_nvec(wall.at("n0"));
  if (!n0.is_positive() || !n0.is_primitive()) throw FormatError("n0 must be primitive in N+");
  if (!wall.contains("exponents") || !wall.at("exponents").is_array()) throw FormatError("wall without exponents");
  for (const auto& e : wall.at("exponents")) {
    const int k = read_int(e, "k");
    if (k < 1) throw FormatError("exponent multiple k must be >= 1");
    const NVec n = k * n0;
    if (n.degree() > t.max_degree()) throw FormatError("exponent above max_degree");
    if (sgn(t.u_hat(n)) != 0) throw FormatError("duplicate exponent for " + nvec_str(n));
    t.set(n, read_rational(e.at("u_hat")));
  }
}

Json witness_json(const Witness& w) {
  Json j;
  j["n"] = pair_json(w.n.n1, w.n.n2);
  if (w.params) {
    j["b"] = w.params->b();
    j["c"] = w.params->c();
  }
  Json values = Json::object();
  for (const auto& [k, v] : w.values) values[k] = v;
  j["values"] = std::move(values);
  return j;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw FormatError(e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

Json table_to_json(const WallExponentTable& t) {
  const auto& p = t.params();
  Json j;
  j["schema"] = kSchemaVersion;
  j["b"] = p.b();
  j["c"] = p.c();
  j["max_degree"] = t.max_degree();
  Json walls = Json::array();
  for (NVec n0 : serialization_order(interior_directions(t))) {
    Json w = wall_json(t, n0, wall_function(t, n0));
    const MVec s = support_direction(n0, p);
    w["support"] = pair_json(s.x, s.y);
    walls.push_back(std::move(w));
  }
  j["walls"] = std::move(walls);
  Json initial = Json::array();
  for (NVec n0 : {e1, e2}) {
    Json w = wall_json(t, n0, wall_function(t, n0));
    const MVec s = support_direction(n0, p);
    w["support"] = Json::array({pair_json(s.x, s.y), pair_json(-s.x, -s.y)});
    initial.push_back(std::move(w));
  }
  j["initial_walls"] = std::move(initial);
  return j;
}

WallExponentTable table_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object()) throw FormatError("table document must be a JSON object");
    if (read_int(j, "schema") != kSchemaVersion) throw FormatError("unsupported schema version");
    const int b = read_int(j, "b");
    const int c = read_int(j, "c");
    const int L = read_int(j, "max_degree");
    if (b < 1 || c < 1) throw FormatError("b and c must be positive");
    if (L < 1) throw FormatError("max_degree must be positive");
    WallExponentTable t(DiagramParams(b, c), L);
    for (const char* key : {"walls", "initial_walls"}) {
      if (!j.contains(key) || !j.at(key).is_array()) throw FormatError(std::string("missing array ") + key);
      for (const auto& w : j.at(key)) read_exponents(w, t);
    }
    return t;
  });
}

std::string to_json_text(const WallExponentTable& t) { return table_to_json(t).dump(2) + "\n"; }

WallExponentTable parse_table(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(e.what());
  }
  return table_from_json(j);
}

std::string to_csv(const WallExponentTable& t) {
  std::ostringstream os;
  os << "b,c,n0_1,n0_2,k,n_1,n_2,g_factor,u_hat,U,tau\n";
  std::vector<NVec> dirs{e1, e2};
  for (NVec n0 : interior_directions(t)) dirs.push_back(n0);
  for (NVec n0 : serialization_order(dirs)) {
    const auto f = wall_function(t, n0);
    const auto g = g_factor(n0, t.params());
    for (int k = 1; k * n0.degree() <= t.max_degree(); ++k) {
      const NVec n = k * n0;
      os << t.params().b() << ',' << t.params().c() << ',' << n0.n1 << ',' << n0.n2 << ',' << k << ',' << n.n1 << ','
         << n.n2 << ',' << g << ',' << to_string(t.u_hat(n)) << ',' << to_string(t.U(n)) << ','
         << to_string(f.coefficient(n.monomial())) << '\n';
    }
  }
  return os.str();
}

std::string to_table_text(const WallExponentTable& t) {
  std::ostringstream os;
  os << "b = " << t.params().b() << ", c = " << t.params().c() << ", max degree " << t.max_degree() << "\n";
  os << std::left << std::setw(10) << "n0" << std::setw(6) << "g" << std::setw(4) << "k" << std::setw(12) << "u_hat"
     << std::setw(12) << "U"
     << "tau\n";
  std::vector<NVec> dirs{e1};
  for (NVec n0 : interior_directions(t)) dirs.push_back(n0);
  dirs.push_back(e2);
  for (NVec n0 : dirs) {
    const auto f = wall_function(t, n0);
    for (int k = 1; k * n0.degree() <= t.max_degree(); ++k) {
      const NVec n = k * n0;
      const auto tau = f.coefficient(n.monomial());
      if (sgn(t.u_hat(n)) == 0 && sgn(tau) == 0) continue;
      os << std::setw(10) << (k == 1 ? nvec_str(n0) : "") << std::setw(6)
         << (k == 1 ? std::to_string(g_factor(n0, t.params())) : "") << std::setw(4) << k << std::setw(12)
         << to_string(t.u_hat(n)) << std::setw(12) << to_string(t.U(n)) << to_string(tau) << "\n";
    }
  }
  os << interior_directions(t).size() + 2 << " walls\n";
  return os.str();
}

Json alpha_to_json(const AlphaTable& a) {
  Json j;
  j["n"] = pair_json(a.n.n1, a.n.n2);
  Json entries = Json::array();
  for (const auto& [ij, v] : a.entries) entries.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"value", to_string(v)}});
  j["entries"] = std::move(entries);
  return j;
}

AlphaTable alpha_from_json(const Json& j) {
  return guarded([&] {
    AlphaTable a{read_nvec(j.at("n")), {}};
    for (const auto& e : j.at("entries")) {
      const int i = read_int(e, "i");
      const int k = read_int(e, "j");
      if (i < 1 || i > a.n.n1 || k < 1 || k > a.n.n2) throw FormatError("alpha index outside the rectangle");
      a.entries[{i, k}] = read_rational(e.at("value"));
    }
    return a;
  });
}

Json expansion_to_json(const TauGExpansion& e, const MultiPolynomial& tau) {
  Json j;
  j["n"] = pair_json(e.n.n1, e.n.n2);
  j["tau"] = to_string(tau);
  Json rows = Json::array();
  for (auto it = e.coefficients.rbegin(); it != e.coefficients.rend(); ++it)
    rows.push_back(Json{{"k", it->first}, {"coefficient", to_string(it->second)}});
  j["g_expansion"] = std::move(rows);
  j["g_free_part"] = to_string(e.g_free_part);
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["check"] = r.check_id;
  j["status"] = to_string(r.status());
  j["passed"] = r.passed();
  Json range = Json::object();
  for (const auto& [k, v] : r.parameter_range) range[k] = v;
  j["parameters"] = std::move(range);
  Json findings = Json::array();
  for (const auto& f : r.findings) {
    Json fj;
    fj["claim"] = f.claim;
    fj["description"] = f.description;
    fj["kind"] = f.proved ? "proved" : "empirical";
    fj["status"] = to_string(f.status());
    fj["checked"] = f.checked;
    fj["held"] = f.held;
    Json ws = Json::array();
    for (const auto& w : f.witnesses) ws.push_back(witness_json(w));
    fj["witnesses"] = std::move(ws);
    findings.push_back(std::move(fj));
  }
  j["findings"] = std::move(findings);
  Json data = Json::array();
  for (const auto& [k, v] : r.data) data.push_back(Json{{"label", k}, {"value", v}});
  j["data"] = std::move(data);
  return j;
}

Json reports_to_json(const std::vector<VerificationReport>& reports) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["passed"] = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_to_json(r));
  j["reports"] = std::move(list);
  return j;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.check_id << ": " << (r.passed() ? "PASS" : "FAIL");
  for (const auto& [k, v] : r.parameter_range) os << "  " << k << "=" << v;
  os << "\n";
  for (const auto& f : r.findings) {
    os << "  " << std::left << std::setw(12) << (f.proved ? "[proved]" : "[empirical]") << std::setw(30) << f.claim
       << f.held << "/" << f.checked << "  " << to_string(f.status()) << "\n";
    for (const auto& w : f.witnesses) {
      os << "      n=" << nvec_str(w.n);
      if (w.params) os << " b=" << w.params->b() << " c=" << w.params->c();
      for (const auto& [k, v] : w.values) os << " " << k << "=" << v;
      os << "\n";
    }
  }
  return os.str();
}

std::string checksum(const std::string& bytes) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(bytes);
  return os.str();
}

DiskCache::DiskCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::filesystem::create_directories(directory_);
}

std::optional<std::filesystem::path> DiskCache::directory_from_environment() {
  const char* v = std::getenv("CSD_CACHE_DIR");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

std::filesystem::path DiskCache::table_path(const DiagramParams& p, int max_degree) const {
  return directory_ / ("table-v" + std::to_string(kSchemaVersion) + "-b" + std::to_string(p.b()) + "-c" +
                       std::to_string(p.c()) + "-L" + std::to_string(max_degree) + ".json");
}

std::filesystem::path DiskCache::alpha_path(NVec n) const {
  return directory_ / ("alpha-v" + std::to_string(kSchemaVersion) + "-n" + std::to_string(n.n1) + "-" +
                       std::to_string(n.n2) + ".json");
}

std::optional<Json> DiskCache::read_entry(const std::filesystem::path& file, const std::string& kind) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  in.close();
  try {
    const Json entry = Json::parse(buffer.str());
    if (entry.at("schema").get<int>() == kSchemaVersion && entry.at("kind").get<std::string>() == kind &&
        entry.at("checksum").get<std::string>() == checksum(entry.at("payload").dump()))
      return entry.at("payload");
  } catch (const Json::exception&) {
  }
  std::error_code ec;
  std::filesystem::remove(file, ec);
  return std::nullopt;
}

void DiskCache::write_entry(const std::filesystem::path& file, const std::string& kind, const Json& payload) {
  static std::atomic<unsigned> counter{0};
  Json entry;
  entry["schema"] = kSchemaVersion;
  entry["kind"] = kind;
  entry["checksum"] = checksum(payload.dump());
  entry["payload"] = payload;
  auto tmp = file;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << entry.dump() << "\n";
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::optional<WallExponentTable> DiskCache::load_table(const DiagramParams& p, int min_degree) {
  const std::regex pattern("table-v" + std::to_string(kSchemaVersion) + "-b" + std::to_string(p.b()) + "-c" +
                           std::to_string(p.c()) + "-L([0-9]+)\\.json");
  std::vector<int> degrees;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(directory_, ec)) {
    std::smatch m;
    const std::string name = entry.path().filename().string();
    if (std::regex_match(name, m, pattern)) {
      const int L = std::stoi(m[1].str());
      if (L >= min_degree) degrees.push_back(L);
    }
  }
  std::sort(degrees.begin(), degrees.end());
  for (int L : degrees) {
    const auto path = table_path(p, L);
    auto payload = read_entry(path, "table");
    if (!payload) continue;
    try {
      auto t = table_from_json(*payload);
      if (t.params() == p && t.max_degree() == L) return t;
    } catch (const std::exception&) {
    }
    std::filesystem::remove(path, ec);
  }
  return std::nullopt;
}

void DiskCache::store_table(const WallExponentTable& t) {
  write_entry(table_path(t.params(), t.max_degree()), "table", table_to_json(t));
}

std::optional<AlphaTable> DiskCache::load_alpha(NVec n) {
  const auto path = alpha_path(n);
  auto payload = read_entry(path, "alpha");
  if (!payload) return std::nullopt;
  try {
    auto a = alpha_from_json(*payload);
    if (a.n == n) return a;
  } catch (const std::exception&) {
  }
  std::error_code ec;
  std::filesystem::remove(path, ec);
  return std::nullopt;
}

void DiskCache::store_alpha(const AlphaTable& a) { write_entry(alpha_path(a.n), "alpha", alpha_to_json(a)); }

}  // namespace csd::io
