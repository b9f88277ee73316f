#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "narayana/polynomial.hpp"
#include "narayana/poset.hpp"

namespace narayana {

inline constexpr const char* kToolVersion = "1.0.0";

struct CacheEntry {
  std::string key;
  IntPolynomial polynomial;
  /// tool_version, timestamp, verification flags.
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

/// On-disk JSON store of computed polynomials, keyed by
/// "narayana:n=<n>,m=<m>" or "wpoly:<poset-hash>".
///
/// A file that cannot be read or parsed is ignored with a warning, as is any
/// entry whose coefficients are not decimal integer strings. save() writes
/// a temporary file next to the target and renames it into place.
class PolynomialCache {
 public:
  explicit PolynomialCache(std::filesystem::path path);

  static std::string narayana_key(int n, int m);
  static std::string wpoly_key(const LabeledPoset& poset);

  const std::filesystem::path& path() const noexcept { return path_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<CacheEntry> find(const std::string& key) const;
  void put(CacheEntry entry);
  void save() const;

 private:
  std::filesystem::path path_;
  std::map<std::string, CacheEntry> entries_;
  std::vector<std::string> warnings_;
};

/// Metadata block for a fresh entry: tool version, UTC timestamp, and the
/// supplied verification flags.
nlohmann::ordered_json make_cache_metadata(nlohmann::ordered_json verification);

}  // namespace narayana
