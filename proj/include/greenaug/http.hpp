#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace greenaug {

struct Url {
  std::string scheme;  // "http" or "https"
  std::string host;
  int port = 0;
  std::string path;  // begins with '/'

  std::string origin() const;
};

// Throws a config error for anything but an absolute http(s) URL.
Url parse_url(std::string_view url);

struct HttpOptions {
  std::chrono::seconds timeout{120};
  std::vector<std::pair<std::string, std::string>> headers;
};

// POSTs a JSON body and returns the 2xx response body. Connection failures,
// 429 and 5xx raise retryable transport errors; other statuses raise
// non-retryable ones.
std::string post_json(const Url& url, const std::string& body, const HttpOptions& options = {});

}  // namespace greenaug
