#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "greenaug/cache.hpp"

namespace greenaug {

class Translator {
 public:
  virtual ~Translator() = default;
  virtual std::string translate(std::string_view text, std::string_view source_lang,
                                std::string_view target_lang) = 0;
};

std::string translation_cache_key(std::string_view text, std::string_view source_lang,
                                  std::string_view target_lang);

// Client for a translate endpoint: POST {"text","source","target"} returning
// {"translation"}. Shares the record/replay cache machinery with the LLM client.
class HttpTranslator final : public Translator {
 public:
  HttpTranslator(std::string endpoint_url, CacheMode mode, std::shared_ptr<ResponseCache> cache,
                 RetryPolicy retry = {});

  std::string translate(std::string_view text, std::string_view source_lang,
                        std::string_view target_lang) override;

  std::size_t fetch_attempts() const noexcept { return resolver_.fetch_attempts(); }

 private:
  std::string endpoint_url_;
  CachedResolver resolver_;
};

}  // namespace greenaug
