#include "greenaug/llm_client.hpp"

#include <cstdlib>
#include <json.hpp>

#include "greenaug/error.hpp"
#include "greenaug/hashing.hpp"
#include "greenaug/http.hpp"
#include "greenaug/text.hpp"

namespace greenaug {

void GenerationParams::validate() const {
  if (max_new_tokens <= 0) fail(ErrorCategory::kConfig, "max_new_tokens must be positive");
  if (!(temperature >= 0.0)) fail(ErrorCategory::kConfig, "temperature must be non-negative");
  if (model_name.empty()) fail(ErrorCategory::kConfig, "model_name must be set");
}

std::string completion_cache_key(std::string_view prompt, const GenerationParams& params) {
  nlohmann::ordered_json j;
  j["kind"] = "chat";
  j["model"] = params.model_name;
  j["max_new_tokens"] = params.max_new_tokens;
  j["temperature"] = params.temperature;
  j["prompt"] = std::string(prompt);
  return sha256_hex(j.dump());
}

std::string chat_request_body(std::string_view prompt, const GenerationParams& params) {
  nlohmann::ordered_json message;
  message["role"] = "user";
  message["content"] = std::string(prompt);
  nlohmann::ordered_json j;
  j["model"] = params.model_name;
  j["messages"] = nlohmann::ordered_json::array({message});
  j["max_tokens"] = params.max_new_tokens;
  j["temperature"] = params.temperature;
  j["stream"] = false;
  return j.dump();
}

std::string parse_chat_response(std::string_view body) {
  try {
    const auto j = nlohmann::json::parse(body);
    const auto& content = j.at("choices").at(0).at("message").at("content");
    if (content.is_null()) return {};
    return content.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw TransportError(std::string("malformed chat-completion response: ") + e.what(), false);
  }
}

std::optional<std::string> api_key_from_env() {
  const char* value = std::getenv(std::string(kApiKeyEnvVar).c_str());
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

LlmClient::LlmClient(GenerationParams params, CacheMode mode,
                     std::shared_ptr<ResponseCache> cache, RetryPolicy retry,
                     std::optional<std::string> api_key)
    : params_(std::move(params)),
      api_key_(std::move(api_key)),
      resolver_(mode, std::move(cache), retry) {
  params_.validate();
}

std::string LlmClient::fetch(std::string_view prompt) const {
  HttpOptions options;
  if (api_key_) options.headers.emplace_back("Authorization", "Bearer " + *api_key_);
  const std::string body =
      post_json(parse_url(params_.endpoint_url), chat_request_body(prompt, params_), options);
  return trim(parse_chat_response(body));
}

std::string LlmClient::complete(std::string_view prompt) {
  const std::string key = completion_cache_key(prompt, params_);
  return resolver_.resolve(key, std::string(prompt), [&] { return fetch(prompt); });
}

}  // namespace greenaug
