#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace greenaug {

enum class CacheMode {
  kLive,    // network only; the cache is neither read nor written
  kRecord,  // serve hits from the cache, fetch and append misses
  kReplay,  // cache only; a miss is an error
};

std::string_view cache_mode_name(CacheMode mode) noexcept;
std::optional<CacheMode> parse_cache_mode(std::string_view name) noexcept;

struct CompletionRecord {
  std::string cache_key;
  std::string prompt;
  std::string response_text;
  std::string timestamp;  // ISO-8601 UTC
};

// Append-only line-delimited JSON store of responses keyed by cache key.
// Reads may run concurrently; appends are serialized.
class ResponseCache {
 public:
  // Memory-only cache.
  ResponseCache() = default;

  // Loads `path` if it exists; new entries are appended to it.
  static std::shared_ptr<ResponseCache> open(const std::filesystem::path& path);

  std::optional<std::string> lookup(std::string_view key) const;

  // Appends unless the key is already present. Returns whether it was added.
  bool insert(CompletionRecord record);

  std::size_t size() const;

  const std::optional<std::filesystem::path>& path() const noexcept { return path_; }

 private:
  std::optional<std::filesystem::path> path_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, CompletionRecord> entries_;
};

std::string utc_timestamp();

struct RetryPolicy {
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{500};
  double backoff_multiplier = 2.0;
};

// Routes one keyed request through the cache according to the mode, with
// bounded retries on retryable transport failures and empty responses.
// Concurrent record-mode misses on the same key share a single fetch.
class CachedResolver {
 public:
  CachedResolver(CacheMode mode, std::shared_ptr<ResponseCache> cache, RetryPolicy retry);

  using Fetch = std::function<std::string()>;

  // `request_text` is stored alongside the response for inspection.
  std::string resolve(const std::string& key, const std::string& request_text, const Fetch& fetch);

  CacheMode mode() const noexcept { return mode_; }
  std::size_t fetch_attempts() const noexcept { return fetch_attempts_.load(); }

 private:
  std::string fetch_with_retries(const Fetch& fetch);

  CacheMode mode_;
  std::shared_ptr<ResponseCache> cache_;
  RetryPolicy retry_;
  std::atomic<std::size_t> fetch_attempts_{0};
  std::mutex inflight_mutex_;
  std::map<std::string, std::shared_future<std::string>> inflight_;
};

}  // namespace greenaug
