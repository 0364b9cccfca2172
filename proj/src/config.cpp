#include "greenaug/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "greenaug/error.hpp"

namespace greenaug {

AppConfig AppConfig::from_json(std::string_view json_text, const std::filesystem::path& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCategory::kConfig, std::string("config: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCategory::kConfig, "config must be a JSON object");

  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
  };

  AppConfig config;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "endpoint_url") config.endpoint_url = value.get<std::string>();
      else if (key == "model_name") config.model_name = value.get<std::string>();
      else if (key == "translator_url") config.translator_url = value.get<std::string>();
      else if (key == "lexicon_path") config.lexicon_path = resolve(value.get<std::string>());
      else if (key == "cache_path") config.cache_path = resolve(value.get<std::string>());
      else if (key == "seed") config.seed = value.get<std::uint64_t>();
      else if (key == "parallelism") config.parallelism = value.get<std::size_t>();
      else if (key == "max_new_tokens") config.max_new_tokens = value.get<int>();
      else if (key == "temperature") config.temperature = value.get<double>();
      else fail(ErrorCategory::kConfig, "config: unknown key \"" + key + "\"");
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCategory::kConfig, std::string("config: ") + e.what());
  }
  return config;
}

AppConfig AppConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCategory::kConfig, "cannot open config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str(), path.parent_path());
}

GenerationParams AppConfig::generation_params() const {
  GenerationParams params;
  params.max_new_tokens = max_new_tokens;
  params.temperature = temperature;
  params.model_name = model_name;
  params.endpoint_url = endpoint_url;
  return params;
}

void AppConfig::validate() const {
  if (parallelism < 1) fail(ErrorCategory::kConfig, "parallelism must be at least 1");
  generation_params().validate();
  if (lexicon_path && !std::filesystem::exists(*lexicon_path)) {
    fail(ErrorCategory::kConfig, "lexicon not found: " + lexicon_path->string());
  }
}

}  // namespace greenaug
