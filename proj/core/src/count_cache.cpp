#include "peaklab/count_cache.hpp"

#include <fstream>
#include <mutex>

#include <json.hpp>

#include "peaklab/errors.hpp"

namespace peaklab {

std::optional<CacheEntry> parse_cache_line(std::string_view line) {
  const auto doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (!doc.is_object()) return std::nullopt;
  for (const char* field : {"key", "count", "version"}) {
    if (!doc.contains(field) || !doc[field].is_string()) return std::nullopt;
  }
  CacheEntry entry{doc["key"].get<std::string>(), doc["count"].get<std::string>(),
                   doc["version"].get<std::string>()};
  try {
    if (!is_admissible(Composition::parse(entry.key))) return std::nullopt;
    parse_count(entry.count);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  return entry;
}

std::string format_cache_line(const CacheEntry& entry) {
  // Fixed key order keeps the file byte-stable.
  nlohmann::ordered_json doc;
  doc["key"] = entry.key;
  doc["count"] = entry.count;
  doc["version"] = entry.version;
  return doc.dump();
}

CountCache::CountCache(std::string version) : version_(std::move(version)) {}

std::optional<BigCount> CountCache::find(const Composition& c) const {
  std::shared_lock lock(mutex_);
  const auto it = entries_.find(c);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CountCache::insert(const Composition& c, const BigCount& count) {
  std::unique_lock lock(mutex_);
  entries_.insert_or_assign(c, count);
}

BigCount CountCache::get_or_compute(const Composition& c,
                                    const std::function<BigCount(const Composition&)>& compute) {
  if (auto hit = find(c)) {
    ++hits_;
    return *hit;
  }
  ++misses_;
  BigCount value = compute(c);
  insert(c, value);
  return value;
}

std::size_t CountCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::size_t CountCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return 0;
  std::size_t accepted = 0;
  std::string line;
  while (std::getline(in, line)) {
    const auto entry = parse_cache_line(line);
    if (!entry || entry->version != version_) continue;
    insert(Composition::parse(entry->key), parse_count(entry->count));
    ++accepted;
  }
  return accepted;
}

void CountCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write cache file " + path.string());
  std::shared_lock lock(mutex_);
  for (const auto& [c, count] : entries_) {
    out << format_cache_line({c.to_string(), to_decimal(count), version_}) << '\n';
  }
}

}  // namespace peaklab
