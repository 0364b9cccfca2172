#include "greenaug/similarity.hpp"

#include <numeric>

#include "greenaug/error.hpp"
#include "greenaug/rng.hpp"
#include "greenaug/text.hpp"

namespace greenaug {

std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t sample_size,
                                                    std::uint64_t seed) {
  if (sample_size > population) {
    fail(ErrorCategory::kUsage, "sample size " + std::to_string(sample_size) +
                                    " exceeds population " + std::to_string(population));
  }
  std::vector<std::size_t> indices(population);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < sample_size; ++i) {
    const std::size_t j = i + rng.uniform_index(population - i);
    std::swap(indices[i], indices[j]);
  }
  indices.resize(sample_size);
  return indices;
}

SimilarityAverages similarity_report(const std::vector<TextPair>& pairs, std::size_t sample_size,
                                     std::uint64_t seed, EmbeddingProvider& embeddings) {
  if (pairs.empty()) fail(ErrorCategory::kUsage, "no generated/source pairs to score");
  if (sample_size == 0) fail(ErrorCategory::kUsage, "sample size must be positive");

  SimilarityAverages out;
  out.sample = sample_without_replacement(pairs.size(), sample_size, seed);
  for (std::size_t index : out.sample) {
    const auto& pair = pairs[index];
    const auto generated = tokenize(pair.generated);
    const auto source = tokenize(pair.source);
    out.rouge1 += rouge1(generated, source).f1;
    out.rouge_l += rouge_l(generated, source).f1;
    out.bertscore += bertscore(embeddings.embed(pair.generated), embeddings.embed(pair.source)).f1;
  }
  const auto n = static_cast<double>(out.sample.size());
  out.rouge1 /= n;
  out.rouge_l /= n;
  out.bertscore /= n;
  return out;
}

std::vector<TextPair> augmentation_pairs(const Dataset& dataset, PromptStrategy strategy) {
  std::vector<TextPair> out;
  for (const auto& record : dataset.records()) {
    const auto* origin = std::get_if<AugmentedOrigin>(&record.origin);
    if (origin == nullptr || origin->strategy != strategy) continue;
    const SentenceRecord* source = dataset.find(origin->source_id);
    if (source == nullptr) {
      fail(ErrorCategory::kIntegrity, "record " + record.id + " has no source " + origin->source_id);
    }
    out.push_back({record.text, source->text});
  }
  return out;
}

}  // namespace greenaug
