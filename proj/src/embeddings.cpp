#include "greenaug/embeddings.hpp"

#include <fstream>
#include <json.hpp>

#include "greenaug/error.hpp"
#include "greenaug/http.hpp"

namespace greenaug {
namespace {

TokenEmbeddings from_object(const nlohmann::json& j) {
  TokenEmbeddings e;
  try {
    e.tokens = j.at("tokens").get<std::vector<std::string>>();
    e.vectors = j.at("vectors").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCategory::kSchema, std::string("embedding record: ") + ex.what());
  }
  e.validate();
  return e;
}

}  // namespace

TokenEmbeddings embeddings_from_json(const std::string& json_text) {
  try {
    return from_object(nlohmann::json::parse(json_text));
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCategory::kParse, std::string("embedding response: ") + e.what());
  }
}

FixtureEmbeddingProvider::FixtureEmbeddingProvider(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCategory::kIo, "cannot open embeddings " + path.string());
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (!j.contains("text") || !j["text"].is_string()) fail(ErrorCategory::kSchema, "missing \"text\"");
      entries_.insert_or_assign(j["text"].get<std::string>(), from_object(j));
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorCategory::kParse, path.string() + ": line " + std::to_string(line_number) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(e.category(), path.string() + ": line " + std::to_string(line_number) + ": " + e.what());
    }
  }
}

FixtureEmbeddingProvider::FixtureEmbeddingProvider(
    std::map<std::string, TokenEmbeddings, std::less<>> entries)
    : entries_(std::move(entries)) {}

TokenEmbeddings FixtureEmbeddingProvider::embed(std::string_view text) {
  auto it = entries_.find(text);
  if (it == entries_.end()) {
    fail(ErrorCategory::kCacheMiss, "no fixture embeddings for text \"" +
                                        std::string(text.substr(0, 60)) + "\"");
  }
  return it->second;
}

HttpEmbeddingProvider::HttpEmbeddingProvider(std::string endpoint_url)
    : endpoint_url_(std::move(endpoint_url)) {
  parse_url(endpoint_url_);
}

TokenEmbeddings HttpEmbeddingProvider::embed(std::string_view text) {
  nlohmann::json request;
  request["text"] = std::string(text);
  return embeddings_from_json(post_json(parse_url(endpoint_url_), request.dump()));
}

}  // namespace greenaug
