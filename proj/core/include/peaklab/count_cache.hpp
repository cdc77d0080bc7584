#ifndef PEAKLAB_COUNT_CACHE_HPP
#define PEAKLAB_COUNT_CACHE_HPP

#include <atomic>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "peaklab/big_count.hpp"
#include "peaklab/composition.hpp"

namespace peaklab {

/// Version tag written into every persisted cache record. Records carrying
/// any other tag are ignored on load.
inline constexpr std::string_view kEngineVersion = "peaklab-1";

/// One line of the cache file:
///   {"key":"3,3","count":"144","version":"peaklab-1"}
struct CacheEntry {
  std::string key;
  std::string count;
  std::string version;
};

/// Accepts only well-formed records whose key is an admissible composition
/// and whose count is a nonnegative decimal.
std::optional<CacheEntry> parse_cache_line(std::string_view line);
std::string format_cache_line(const CacheEntry& entry);

/// Composition -> P(c) memo. Concurrent lookups take a shared lock; inserts
/// are serialized.
class CountCache {
 public:
  explicit CountCache(std::string version = std::string(kEngineVersion));

  std::optional<BigCount> find(const Composition& c) const;
  void insert(const Composition& c, const BigCount& count);
  BigCount get_or_compute(const Composition& c,
                          const std::function<BigCount(const Composition&)>& compute);

  std::size_t size() const;
  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

  /// Merges records from a line-delimited JSON file. A missing file is not
  /// an error. Returns the number of records accepted.
  std::size_t load(const std::filesystem::path& path);

  /// Writes every entry, sorted by composition.
  void save(const std::filesystem::path& path) const;

 private:
  std::string version_;
  mutable std::shared_mutex mutex_;
  std::map<Composition, BigCount> entries_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

}  // namespace peaklab

#endif  // PEAKLAB_COUNT_CACHE_HPP
