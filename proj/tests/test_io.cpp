#include <doctest.h>

#include <fstream>
#include <future>
#include <sstream>

#include "csd/io.hpp"
#include "helpers.hpp"

using namespace csd;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("csd-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("table JSON schema") {
  const auto j = io::table_to_json(factorize(DiagramParams(1, 2), 6));
  CHECK(j["schema"] == io::kSchemaVersion);
  CHECK(j["b"] == 1);
  CHECK(j["c"] == 2);
  CHECK(j["max_degree"] == 6);
  REQUIRE(j["walls"].size() == 2);
  CHECK(j["walls"][0]["n0"] == io::Json::array({1, 1}));
  CHECK(j["walls"][1]["n0"] == io::Json::array({2, 1}));
  CHECK(j["walls"][1]["exponents"][0]["u_hat"] == "1");
  CHECK(j["walls"][1]["exponents"][0]["U"] == "1/2");
  REQUIRE(j["initial_walls"].size() == 2);
  CHECK(j["initial_walls"][0]["n0"] == io::Json::array({1, 0}));
  CHECK(j["initial_walls"][0]["support"].size() == 2);
}

TEST_CASE("table JSON round trip is byte-identical") {
  for (const auto& [b, c] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 3}}) {
    const auto t = factorize(DiagramParams(b, c), 7);
    const std::string text = io::to_json_text(t);
    CHECK(text == io::to_json_text(factorize(DiagramParams(b, c), 7)));
    const auto back = io::parse_table(text);
    CHECK(back == t);
    CHECK(io::to_json_text(back) == text);
    CHECK(text.back() == '\n');
  }
}

TEST_CASE("derived fields are recomputed on import") {
  auto j = io::table_to_json(factorize(DiagramParams(2, 2), 4));
  j["walls"][0]["tau"][0]["value"] = "12345";
  j["walls"][0]["exponents"][0]["U"] = "999";
  CHECK(io::table_from_json(j) == factorize(DiagramParams(2, 2), 4));
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(io::parse_table("{"), io::FormatError);
  CHECK_THROWS_AS(io::parse_table("[]"), io::FormatError);
  auto j = io::table_to_json(factorize(DiagramParams(1, 1), 3));
  auto wrong_schema = j;
  wrong_schema["schema"] = 99;
  CHECK_THROWS_AS(io::table_from_json(wrong_schema), io::FormatError);
  auto bad_rational = j;
  bad_rational["walls"][0]["exponents"][0]["u_hat"] = "1/0";
  CHECK_THROWS_AS(io::table_from_json(bad_rational), io::FormatError);
  auto too_deep = j;
  too_deep["max_degree"] = 1;
  CHECK_THROWS_AS(io::table_from_json(too_deep), io::FormatError);
  auto zero_b = j;
  zero_b["b"] = 0;
  CHECK_THROWS_AS(io::table_from_json(zero_b), io::FormatError);
  auto missing = j;
  missing.erase("walls");
  CHECK_THROWS_AS(io::table_from_json(missing), io::FormatError);
}

TEST_CASE("CSV") {
  const std::string csv = io::to_csv(factorize(DiagramParams(1, 1), 3));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "b,c,n0_1,n0_2,k,n_1,n_2,g_factor,u_hat,U,tau");
  int rows = 0;
  bool saw_diagonal = false;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 10);
    if (line == "1,1,1,1,1,1,1,1,1,1,1") saw_diagonal = true;
  }
  CHECK(rows == 7);
  CHECK(saw_diagonal);
}

TEST_CASE("table text") {
  const std::string text = io::to_table_text(factorize(DiagramParams(1, 1), 8));
  CHECK(text.find("3 walls") != std::string::npos);
}

TEST_CASE("alpha JSON round trip") {
  ExponentCache cache;
  const auto& a = cache.alpha({3, 2});
  CHECK(io::alpha_from_json(io::alpha_to_json(a)) == a);
  CHECK_THROWS_AS(io::alpha_from_json(io::Json::object()), io::FormatError);
}

TEST_CASE("report JSON") {
  ExponentCache cache;
  const auto r = verify_props_56(2, 2, cache);
  const auto j = io::report_to_json(r);
  CHECK(j["check"] == "props56");
  CHECK(j["status"] == "proved-claim-holds");
  CHECK(j["findings"].size() == r.findings.size());
  const auto all = io::reports_to_json({r});
  CHECK(all["schema"] == io::kSchemaVersion);
  CHECK(all["passed"] == true);
  CHECK_FALSE(io::report_to_text(r).empty());
}

TEST_CASE("checksum") {
  CHECK(io::checksum("") == "cbf29ce484222325");
  CHECK(io::checksum("a") == "af63dc4c8601ec8c");
  CHECK(io::checksum("ab") != io::checksum("ba"));
}

TEST_CASE("disk cache") {
  TempDir dir;
  auto disk = std::make_shared<io::DiskCache>(dir.path);
  const DiagramParams p(2, 3);

  SUBCASE("store, load, and cache-hit equality") {
    ExponentCache first(disk);
    const auto computed = first.table(p, 6);
    REQUIRE(fs::exists(disk->table_path(p, 6)));
    const auto loaded = disk->load_table(p, 5);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == *computed);
    CHECK_FALSE(disk->load_table(p, 7).has_value());
    ExponentCache second(disk);
    CHECK(io::to_json_text(*second.table(p, 6)) == io::to_json_text(factorize(p, 6)));
  }

  SUBCASE("corrupt entry is discarded") {
    disk->store_table(factorize(p, 5));
    const auto file = disk->table_path(p, 5);
    std::string bytes = slurp(file);
    const std::string needle = "\"u_hat\":\"1\"";
    const auto pos = bytes.find(needle);
    REQUIRE(pos != std::string::npos);
    bytes.replace(pos, needle.size(), "\"u_hat\":\"7\"");
    std::ofstream(file, std::ios::binary | std::ios::trunc) << bytes;
    CHECK_FALSE(disk->load_table(p, 5).has_value());
    CHECK_FALSE(fs::exists(file));
    ExponentCache cache(disk);
    CHECK(*cache.table(p, 5) == factorize(p, 5));
  }

  SUBCASE("truncated entry is discarded") {
    disk->store_table(factorize(p, 4));
    const auto file = disk->table_path(p, 4);
    const std::string bytes = slurp(file);
    std::ofstream(file, std::ios::binary | std::ios::trunc) << bytes.substr(0, bytes.size() / 2);
    CHECK_FALSE(disk->load_table(p, 4).has_value());
  }

  SUBCASE("alpha entries") {
    ExponentCache cache(disk);
    const AlphaTable a = cache.alpha({2, 2});
    REQUIRE(fs::exists(disk->alpha_path({2, 2})));
    CHECK(disk->load_alpha({2, 2}) == a);
    CHECK_FALSE(disk->load_alpha({3, 2}).has_value());
  }

  SUBCASE("concurrent writers") {
    std::vector<std::future<void>> jobs;
    for (int i = 0; i < 6; ++i)
      jobs.push_back(std::async(std::launch::async, [&] {
        io::DiskCache mine(dir.path);
        mine.store_table(factorize(p, 6));
      }));
    for (auto& j : jobs) j.get();
    CHECK(disk->load_table(p, 6) == factorize(p, 6));
    int leftovers = 0;
    for (const auto& entry : fs::directory_iterator(dir.path))
      if (entry.path().extension() != ".json") ++leftovers;
    CHECK(leftovers == 0);
  }
}

TEST_CASE("cache directory from the environment") {
  ::setenv("CSD_CACHE_DIR", "/tmp/somewhere", 1);
  CHECK(io::DiskCache::directory_from_environment() == fs::path("/tmp/somewhere"));
  ::setenv("CSD_CACHE_DIR", "", 1);
  CHECK_FALSE(io::DiskCache::directory_from_environment().has_value());
  ::unsetenv("CSD_CACHE_DIR");
  CHECK_FALSE(io::DiskCache::directory_from_environment().has_value());
}
