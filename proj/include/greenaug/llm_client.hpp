#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "greenaug/cache.hpp"

namespace greenaug {

inline constexpr std::string_view kApiKeyEnvVar = "GREENAUG_API_KEY";

struct GenerationParams {
  int max_new_tokens = 400;
  double temperature = 0.5;
  std::string model_name = "AnatoliiPotapov/T-lite-instruct-0.1";
  std::string endpoint_url = "http://127.0.0.1:8000/v1/chat/completions";

  // Throws a config error if max_new_tokens <= 0 or temperature < 0.
  void validate() const;
};

// SHA-256 over a canonical JSON encoding of the prompt and the generation
// parameters. The endpoint URL is not part of the key.
std::string completion_cache_key(std::string_view prompt, const GenerationParams& params);

// OpenAI-compatible chat-completions request: a single user message, no system prompt.
std::string chat_request_body(std::string_view prompt, const GenerationParams& params);

// Extracts choices[0].message.content. Throws a transport error on malformed bodies.
std::string parse_chat_response(std::string_view body);

class TextGenerator {
 public:
  virtual ~TextGenerator() = default;
  virtual std::string complete(std::string_view prompt) = 0;
};

// Chat-completion client with record/replay caching. Safe to share across threads.
class LlmClient final : public TextGenerator {
 public:
  LlmClient(GenerationParams params, CacheMode mode, std::shared_ptr<ResponseCache> cache,
            RetryPolicy retry = {}, std::optional<std::string> api_key = std::nullopt);

  // Returns the whitespace-trimmed completion.
  std::string complete(std::string_view prompt) override;

  const GenerationParams& params() const noexcept { return params_; }
  std::size_t fetch_attempts() const noexcept { return resolver_.fetch_attempts(); }

 private:
  std::string fetch(std::string_view prompt) const;

  GenerationParams params_;
  std::optional<std::string> api_key_;
  CachedResolver resolver_;
};

// Reads the API key from the environment, if set and non-empty.
std::optional<std::string> api_key_from_env();

}  // namespace greenaug
