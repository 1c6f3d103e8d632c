#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "csd/lab.hpp"

namespace csd::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or unsupported input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {schema, b, c, max_degree, walls, initial_walls}; one entry per primitive
/// direction with its exponents (k, u_hat, U) and expanded coefficients tau.
Json table_to_json(const WallExponentTable& t);
/// Reads b, c, max_degree and every u_hat. Derived fields are ignored and
/// recomputed on export.
WallExponentTable table_from_json(const Json& j);

/// Pretty-printed JSON document terminated by a newline.
std::string to_json_text(const WallExponentTable& t);
WallExponentTable parse_table(const std::string& text);

/// One row per (n0, k), header included.
std::string to_csv(const WallExponentTable& t);
/// Human-oriented layout; not a stable interface.
std::string to_table_text(const WallExponentTable& t);

Json alpha_to_json(const AlphaTable& a);
AlphaTable alpha_from_json(const Json& j);

Json expansion_to_json(const TauGExpansion& e, const MultiPolynomial& tau);

Json report_to_json(const VerificationReport& r);
Json reports_to_json(const std::vector<VerificationReport>& reports);
std::string report_to_text(const VerificationReport& r);

/// FNV-1a 64-bit, as 16 lowercase hex digits.
std::string checksum(const std::string& bytes);

/// File cache under one directory. Entries are keyed by (schema, b, c,
/// max_degree) or (schema, n), written atomically, and checked by checksum on
/// read; corrupt entries are deleted.
class DiskCache : public CacheBackend {
 public:
  explicit DiskCache(std::filesystem::path directory);

  /// From the CSD_CACHE_DIR environment variable, if set and non-empty.
  static std::optional<std::filesystem::path> directory_from_environment();

  std::optional<WallExponentTable> load_table(const DiagramParams& p, int min_degree) override;
  void store_table(const WallExponentTable& t) override;
  std::optional<AlphaTable> load_alpha(NVec n) override;
  void store_alpha(const AlphaTable& a) override;

  std::filesystem::path table_path(const DiagramParams& p, int max_degree) const;
  std::filesystem::path alpha_path(NVec n) const;

 private:
  std::optional<Json> read_entry(const std::filesystem::path& file, const std::string& kind);
  void write_entry(const std::filesystem::path& file, const std::string& kind, const Json& payload);

  std::filesystem::path directory_;
};

}  // namespace csd::io
