#include "narayana/cache.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace narayana {

namespace {

std::optional<IntPolynomial> decode_coefficients(const nlohmann::ordered_json& array) {
  if (!array.is_array()) return std::nullopt;
  std::vector<BigInt> coeffs;
  for (const auto& item : array) {
    if (!item.is_string()) return std::nullopt;
    const auto& text = item.get_ref<const std::string&>();
    BigInt value;
    const bool digits_only =
        !text.empty() && text.find_first_not_of("-0123456789") == std::string::npos;
    if (!digits_only || value.set_str(text, 10) != 0) return std::nullopt;
    coeffs.push_back(std::move(value));
  }
  return IntPolynomial(std::move(coeffs));
}

nlohmann::ordered_json encode_coefficients(const IntPolynomial& p) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) array.push_back(c.get_str());
  return array;
}

}  // namespace

PolynomialCache::PolynomialCache(std::filesystem::path path) : path_(std::move(path)) {
  std::error_code ec;
  if (!std::filesystem::exists(path_, ec)) return;
  std::ifstream in(path_);
  if (!in) {
    warnings_.push_back("cache " + path_.string() + " unreadable; ignoring it");
    return;
  }
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::ordered_json::exception& e) {
    warnings_.push_back("cache " + path_.string() + " is corrupt (" + e.what() + "); ignoring it");
    return;
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_object()) {
    warnings_.push_back("cache " + path_.string() + " has no entries object; ignoring it");
    return;
  }
  for (const auto& [key, value] : doc["entries"].items()) {
    std::optional<IntPolynomial> poly;
    if (value.is_object() && value.contains("coefficients")) poly = decode_coefficients(value["coefficients"]);
    if (!poly) {
      warnings_.push_back("cache entry '" + key + "' is malformed; ignoring it");
      continue;
    }
    CacheEntry entry{key, std::move(*poly), nlohmann::ordered_json::object()};
    if (value.contains("metadata") && value["metadata"].is_object()) {
      entry.metadata = value["metadata"];
    }
    entries_.emplace(key, std::move(entry));
  }
}

std::string PolynomialCache::narayana_key(int n, int m) {
  return "narayana:n=" + std::to_string(n) + ",m=" + std::to_string(m);
}

std::string PolynomialCache::wpoly_key(const LabeledPoset& poset) { return "wpoly:" + poset.hash(); }

std::optional<CacheEntry> PolynomialCache::find(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PolynomialCache::put(CacheEntry entry) {
  auto key = entry.key;
  entries_.insert_or_assign(std::move(key), std::move(entry));
}

void PolynomialCache::save() const {
  nlohmann::ordered_json doc;
  doc["format"] = "narayana-cache";
  doc["version"] = 1;
  doc["entries"] = nlohmann::ordered_json::object();
  for (const auto& [key, entry] : entries_) {
    nlohmann::ordered_json item;
    item["coefficients"] = encode_coefficients(entry.polynomial);
    item["metadata"] = entry.metadata;
    doc["entries"][key] = std::move(item);
  }
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  auto temp = path_;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + temp.string());
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing cache file " + temp.string());
  }
  std::filesystem::rename(temp, path_);
}

nlohmann::ordered_json make_cache_metadata(nlohmann::ordered_json verification) {
  const auto now = std::chrono::system_clock::now();
  const auto seconds = std::chrono::floor<std::chrono::seconds>(now);
  const std::time_t t = std::chrono::system_clock::to_time_t(seconds);
  std::tm utc{};
  gmtime_r(&t, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);

  nlohmann::ordered_json meta;
  meta["tool_version"] = kToolVersion;
  meta["timestamp"] = stamp;
  meta["verification"] = std::move(verification);
  return meta;
}

}  // namespace narayana
