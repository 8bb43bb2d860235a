#include "halin/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace halin {

using Json = nlohmann::ordered_json;

std::string encode_record(const CachedRecord& r) {
  const ExtremalRecord& x = r.record;
  Json j;
  j["format_version"] = kCacheFormatVersion;
  j["tool_version"] = kToolVersion;
  j["n"] = x.n;
  j["k"] = x.k;
  j["max_edges"] = x.max_edges ? Json(*x.max_edges) : Json(nullptr);
  j["num_extremal"] = x.num_extremal;
  j["enumerated_total"] = x.enumerated_total;
  j["witnesses"] = x.witnesses;
  j["computed_at"] = r.computed_at;
  return j.dump(2) + "\n";
}

std::optional<CachedRecord> decode_record(std::string_view text) {
  const Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    if (j.at("format_version").get<int>() != kCacheFormatVersion) return std::nullopt;
    CachedRecord r;
    r.record.n = j.at("n").get<int>();
    r.record.k = j.at("k").get<int>();
    if (!j.at("max_edges").is_null()) r.record.max_edges = j.at("max_edges").get<int>();
    r.record.num_extremal = j.at("num_extremal").get<std::uint64_t>();
    r.record.enumerated_total = j.at("enumerated_total").get<std::uint64_t>();
    r.record.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    r.computed_at = j.value("computed_at", "");
    return r;
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream os;
  os << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("HALIN_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return ".halin-cache";
}

RecordCache::RecordCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path RecordCache::path_for(int n, int k) const {
  return dir_ / ("extremal-v" + std::to_string(kCacheFormatVersion) + "-n" + std::to_string(n) +
                 "-k" + std::to_string(k) + ".json");
}

std::optional<CachedRecord> RecordCache::load(int n, int k) const {
  std::ifstream in(path_for(n, k));
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  auto r = decode_record(text.str());
  // A record for another key under this name is treated as a miss.
  if (r && (r->record.n != n || r->record.k != k)) return std::nullopt;
  return r;
}

void RecordCache::store(const CachedRecord& r) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(r.record.n, r.record.k);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << encode_record(r);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace halin
