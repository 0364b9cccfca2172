#include "greenaug/cache.hpp"

#include <ctime>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "greenaug/error.hpp"

namespace greenaug {
namespace {

CompletionRecord parse_record(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCategory::kParse, e.what());
  }
  auto field = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
      fail(ErrorCategory::kSchema, std::string("cache record field \"") + key + "\" missing");
    }
    return it->get<std::string>();
  };
  return {field("cache_key"), field("prompt"), field("response_text"), field("timestamp")};
}

std::string record_line(const CompletionRecord& record) {
  nlohmann::ordered_json j;
  j["cache_key"] = record.cache_key;
  j["prompt"] = record.prompt;
  j["response_text"] = record.response_text;
  j["timestamp"] = record.timestamp;
  return j.dump();
}

}  // namespace

std::string_view cache_mode_name(CacheMode mode) noexcept {
  switch (mode) {
    case CacheMode::kLive: return "live";
    case CacheMode::kRecord: return "record";
    case CacheMode::kReplay: return "replay";
  }
  return "";
}

std::optional<CacheMode> parse_cache_mode(std::string_view name) noexcept {
  if (name == "live") return CacheMode::kLive;
  if (name == "record") return CacheMode::kRecord;
  if (name == "replay") return CacheMode::kReplay;
  return std::nullopt;
}

std::shared_ptr<ResponseCache> ResponseCache::open(const std::filesystem::path& path) {
  auto cache = std::make_shared<ResponseCache>();
  cache->path_ = path;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (std::filesystem::exists(path)) fail(ErrorCategory::kIo, "cannot read cache " + path.string());
    return cache;
  }
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      auto record = parse_record(line);
      std::string key = record.cache_key;
      cache->entries_.try_emplace(std::move(key), std::move(record));
    } catch (const Error& e) {
      throw Error(e.category(), path.string() + ": line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return cache;
}

std::optional<std::string> ResponseCache::lookup(std::string_view key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(std::string(key));
  if (it == entries_.end()) return std::nullopt;
  return it->second.response_text;
}

bool ResponseCache::insert(CompletionRecord record) {
  std::unique_lock lock(mutex_);
  if (entries_.contains(record.cache_key)) return false;
  if (path_) {
    std::ofstream out(*path_, std::ios::binary | std::ios::app);
    out << record_line(record) << '\n';
    out.flush();
    if (!out) fail(ErrorCategory::kIo, "cannot append to cache " + path_->string());
  }
  std::string key = record.cache_key;
  entries_.emplace(std::move(key), std::move(record));
  return true;
}

std::size_t ResponseCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

CachedResolver::CachedResolver(CacheMode mode, std::shared_ptr<ResponseCache> cache,
                               RetryPolicy retry)
    : mode_(mode), cache_(std::move(cache)), retry_(retry) {
  if (mode_ != CacheMode::kLive && !cache_) {
    fail(ErrorCategory::kConfig,
         std::string(cache_mode_name(mode_)) + " mode requires a cache");
  }
}

std::string CachedResolver::fetch_with_retries(const Fetch& fetch) {
  auto backoff = retry_.initial_backoff;
  for (int attempt = 0;; ++attempt) {
    const bool last = attempt >= retry_.max_retries;
    try {
      ++fetch_attempts_;
      std::string response = fetch();
      if (!response.empty()) return response;
      if (last) fail(ErrorCategory::kGeneration, "empty response after " + std::to_string(attempt + 1) + " attempts");
    } catch (const TransportError& e) {
      if (!e.retryable() || last) throw;
    }
    std::this_thread::sleep_for(backoff);
    backoff = std::chrono::milliseconds(
        static_cast<long long>(static_cast<double>(backoff.count()) * retry_.backoff_multiplier));
  }
}

std::string CachedResolver::resolve(const std::string& key, const std::string& request_text,
                                    const Fetch& fetch) {
  switch (mode_) {
    case CacheMode::kLive:
      return fetch_with_retries(fetch);
    case CacheMode::kReplay: {
      auto hit = cache_->lookup(key);
      if (!hit) fail(ErrorCategory::kCacheMiss, "cache miss for key " + key);
      return *hit;
    }
    case CacheMode::kRecord:
      break;
  }

  if (auto hit = cache_->lookup(key)) return *hit;

  std::promise<std::string> promise;
  std::optional<std::shared_future<std::string>> pending;
  {
    std::lock_guard lock(inflight_mutex_);
    if (auto hit = cache_->lookup(key)) return *hit;
    auto it = inflight_.find(key);
    if (it != inflight_.end()) {
      pending = it->second;
    } else {
      inflight_.emplace(key, promise.get_future().share());
    }
  }
  if (pending) return pending->get();

  try {
    std::string response = fetch_with_retries(fetch);
    cache_->insert({key, request_text, response, utc_timestamp()});
    promise.set_value(response);
    std::lock_guard lock(inflight_mutex_);
    inflight_.erase(key);
    return response;
  } catch (...) {
    promise.set_exception(std::current_exception());
    std::lock_guard lock(inflight_mutex_);
    inflight_.erase(key);
    throw;
  }
}

}  // namespace greenaug
