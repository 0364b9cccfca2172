#include "greenaug/http.hpp"

#include <httplib.h>

#include "greenaug/error.hpp"

namespace greenaug {

std::string Url::origin() const {
  return scheme + "://" + host + ":" + std::to_string(port);
}

Url parse_url(std::string_view url) {
  Url out;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    fail(ErrorCategory::kConfig, "not an absolute URL: " + std::string(url));
  }
  out.scheme = std::string(url.substr(0, scheme_end));
  if (out.scheme != "http" && out.scheme != "https") {
    fail(ErrorCategory::kConfig, "unsupported URL scheme: " + out.scheme);
  }
  std::string_view rest = url.substr(scheme_end + 3);
  const auto path_start = rest.find('/');
  std::string_view authority = rest.substr(0, path_start);
  out.path = path_start == std::string_view::npos ? "/" : std::string(rest.substr(path_start));

  out.port = out.scheme == "https" ? 443 : 80;
  const auto colon = authority.rfind(':');
  if (colon != std::string_view::npos && authority.find(']') == std::string_view::npos) {
    const std::string port(authority.substr(colon + 1));
    try {
      std::size_t used = 0;
      out.port = std::stoi(port, &used);
      if (used != port.size() || out.port <= 0 || out.port > 65535) throw std::out_of_range(port);
    } catch (const std::exception&) {
      fail(ErrorCategory::kConfig, "bad port in URL: " + std::string(url));
    }
    authority = authority.substr(0, colon);
  }
  if (authority.empty()) fail(ErrorCategory::kConfig, "missing host in URL: " + std::string(url));
  out.host = std::string(authority);
  return out;
}

std::string post_json(const Url& url, const std::string& body, const HttpOptions& options) {
  httplib::Client client(url.origin());
  const auto timeout = static_cast<time_t>(options.timeout.count());
  client.set_connection_timeout(timeout, 0);
  client.set_read_timeout(timeout, 0);
  client.set_write_timeout(timeout, 0);

  httplib::Headers headers;
  for (const auto& [name, value] : options.headers) headers.emplace(name, value);

  auto result = client.Post(url.path, headers, body, "application/json");
  if (!result) {
    throw TransportError("POST " + url.origin() + url.path + ": " +
                             httplib::to_string(result.error()),
                         true);
  }
  const int status = result->status;
  if (status >= 200 && status < 300) return result->body;
  const bool retryable = status == 429 || status >= 500;
  throw TransportError("POST " + url.origin() + url.path + ": HTTP " + std::to_string(status),
                       retryable);
}

}  // namespace greenaug
