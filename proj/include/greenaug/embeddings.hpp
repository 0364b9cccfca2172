#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "greenaug/metrics.hpp"

namespace greenaug {

// Source of contextual token embeddings for BERTScore. Implementations may
// perform I/O; the metric itself never does.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual TokenEmbeddings embed(std::string_view text) = 0;
};

// Pre-computed embeddings from a JSONL file of
// {"text": str, "tokens": [str], "vectors": [[real]]}. Unknown texts raise
// a cache-miss error.
class FixtureEmbeddingProvider final : public EmbeddingProvider {
 public:
  explicit FixtureEmbeddingProvider(const std::filesystem::path& path);
  FixtureEmbeddingProvider(std::map<std::string, TokenEmbeddings, std::less<>> entries);

  TokenEmbeddings embed(std::string_view text) override;

 private:
  std::map<std::string, TokenEmbeddings, std::less<>> entries_;
};

// POST {"text": str} to an embedding service replying {"tokens", "vectors"}.
class HttpEmbeddingProvider final : public EmbeddingProvider {
 public:
  explicit HttpEmbeddingProvider(std::string endpoint_url);

  TokenEmbeddings embed(std::string_view text) override;

 private:
  std::string endpoint_url_;
};

TokenEmbeddings embeddings_from_json(const std::string& json_text);

}  // namespace greenaug
