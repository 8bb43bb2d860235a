#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "halin/enumeration.hpp"

namespace halin {

inline constexpr std::string_view kToolVersion = "0.1.0";
/// Bumped whenever the record layout or the enumeration semantics change;
/// files written under another version are ignored.
inline constexpr int kCacheFormatVersion = 1;

struct CachedRecord {
  ExtremalRecord record;
  /// UTC, ISO 8601. Not part of record identity.
  std::string computed_at;
};

/// One JSON object per record with a fixed key order:
/// format_version, tool_version, n, k, max_edges (null when no C_k-free
/// graph exists), num_extremal, enumerated_total, witnesses, computed_at.
std::string encode_record(const CachedRecord& r);
/// nullopt for malformed text or a different format_version.
std::optional<CachedRecord> decode_record(std::string_view text);

std::string utc_timestamp();

/// $HALIN_CACHE_DIR, else ./.halin-cache.
std::filesystem::path default_cache_dir();

/// Directory of `extremal-v<format>-n<N>-k<K>.json` files.
class RecordCache {
 public:
  explicit RecordCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(int n, int k) const;

  std::optional<CachedRecord> load(int n, int k) const;
  /// Writes through a temporary file and a rename, so readers never see a
  /// partial record.
  void store(const CachedRecord& r) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace halin
