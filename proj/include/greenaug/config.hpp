#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "greenaug/llm_client.hpp"

namespace greenaug {

// Shared settings from a JSON config file. Command-line flags override
// these; the API key only ever comes from the environment.
struct AppConfig {
  std::string endpoint_url = GenerationParams{}.endpoint_url;
  std::string model_name = GenerationParams{}.model_name;
  std::string translator_url = "http://127.0.0.1:8001/translate";
  std::optional<std::filesystem::path> lexicon_path;
  std::optional<std::filesystem::path> cache_path;
  std::uint64_t seed = 42;
  std::size_t parallelism = 4;
  int max_new_tokens = 400;
  double temperature = 0.5;

  // Unknown keys are a config error. Relative paths resolve against `base_dir`.
  static AppConfig from_json(std::string_view json_text, const std::filesystem::path& base_dir = {});
  static AppConfig load(const std::filesystem::path& path);

  GenerationParams generation_params() const;

  // parallelism >= 1, generation parameters valid, lexicon file present.
  void validate() const;
};

}  // namespace greenaug
