#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "greenaug/dataset.hpp"
#include "greenaug/embeddings.hpp"

namespace greenaug {

struct TextPair {
  std::string generated;
  std::string source;
};

struct SimilarityAverages {
  double rouge1 = 0.0;  // mean F, as a fraction
  double rouge_l = 0.0;
  double bertscore = 0.0;
  std::vector<std::size_t> sample;  // indices into the pair list, in draw order
};

inline constexpr std::size_t kDefaultSimilaritySample = 50;

// Seeded uniform sample of `sample_size` distinct indices out of `population`.
std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t sample_size,
                                                    std::uint64_t seed);

// Mean ROUGE-1, ROUGE-L and BERTScore F of generated text against its source
// over a seeded sample. Empty input or sample_size > |pairs| is a usage error.
SimilarityAverages similarity_report(const std::vector<TextPair>& pairs, std::size_t sample_size,
                                     std::uint64_t seed, EmbeddingProvider& embeddings);

// (generated, source) pairs of the augmented records of one strategy.
std::vector<TextPair> augmentation_pairs(const Dataset& dataset, PromptStrategy strategy);

}  // namespace greenaug
