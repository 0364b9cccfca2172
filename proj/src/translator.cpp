#include "greenaug/translator.hpp"

#include <json.hpp>

#include "greenaug/error.hpp"
#include "greenaug/hashing.hpp"
#include "greenaug/http.hpp"
#include "greenaug/text.hpp"

namespace greenaug {

std::string translation_cache_key(std::string_view text, std::string_view source_lang,
                                  std::string_view target_lang) {
  nlohmann::ordered_json j;
  j["kind"] = "translate";
  j["source"] = std::string(source_lang);
  j["target"] = std::string(target_lang);
  j["text"] = std::string(text);
  return sha256_hex(j.dump());
}

HttpTranslator::HttpTranslator(std::string endpoint_url, CacheMode mode,
                               std::shared_ptr<ResponseCache> cache, RetryPolicy retry)
    : endpoint_url_(std::move(endpoint_url)), resolver_(mode, std::move(cache), retry) {
  if (mode != CacheMode::kReplay) parse_url(endpoint_url_);
}

std::string HttpTranslator::translate(std::string_view text, std::string_view source_lang,
                                      std::string_view target_lang) {
  nlohmann::ordered_json request;
  request["text"] = std::string(text);
  request["source"] = std::string(source_lang);
  request["target"] = std::string(target_lang);
  const std::string body = request.dump();

  auto fetch = [&] {
    const std::string response = post_json(parse_url(endpoint_url_), body);
    try {
      return trim(nlohmann::json::parse(response).at("translation").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw TransportError(std::string("malformed translation response: ") + e.what(), false);
    }
  };
  return resolver_.resolve(translation_cache_key(text, source_lang, target_lang), body, fetch);
}

}  // namespace greenaug
