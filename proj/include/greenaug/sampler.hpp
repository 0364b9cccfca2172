#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greenaug/dataset.hpp"
#include "greenaug/llm_client.hpp"
#include "greenaug/prompts.hpp"
#include "greenaug/rng.hpp"
#include "greenaug/strategy.hpp"
#include "greenaug/translator.hpp"

namespace greenaug {

struct SamplingPlan {
  double growth_factor = 1.5;
  std::uint64_t seed = 0;
  PromptStrategy strategy = PromptStrategy::kPText;
  GenerationParams params;
  std::string pivot_lang = "en";

  // 1.5 and 2.0 are the growth factors of the reference experiments.
  bool is_reference_factor() const noexcept;

  // round-half-up(growth_factor * original_size). Factors below 1 are a config error.
  std::size_t target_size(std::size_t original_size) const;
};

// Backends used to turn a source sentence into a new one. Pointers are
// non-owning; only those needed by the strategy must be set.
struct Augmenter {
  TextGenerator* generator = nullptr;
  Translator* translator = nullptr;
  const TopicLexicon* lexicon = nullptr;  // built-in phrases when unset
  std::string pivot_lang = "en";
};

// Indices of original records the strategy can use: every original for
// strategies without topics, originals with a non-empty label set otherwise.
std::vector<std::size_t> eligible_sources(const Dataset& train, PromptStrategy strategy);

// Uniform draw with replacement over the eligible originals.
const SentenceRecord& select_source(Rng& rng, const Dataset& train, PromptStrategy strategy);
const SentenceRecord& select_source(Rng& rng, const Dataset& train,
                                    const std::vector<std::size_t>& eligible);

// Id given to the augmented record produced by the n-th draw (1-based).
std::string augmented_id(const SentenceRecord& source, PromptStrategy strategy,
                         std::size_t draw_index);

SentenceRecord augment_once(const SentenceRecord& source, PromptStrategy strategy,
                            std::size_t draw_index, Augmenter& augmenter);

// ru -> pivot -> ru round trip.
std::string back_translate(std::string_view text, Translator& translator,
                           std::string_view pivot_lang = "en");

struct RunOptions {
  std::size_t parallelism = 4;
  // When a run aborts, `<output_path>.partial` receives the originals plus
  // every augmented record completed before the first failed draw.
  std::optional<std::filesystem::path> output_path;
};

// Originals unchanged as a prefix, followed by (target_size - |train|)
// augmented records in draw order.
Dataset run_plan(const SamplingPlan& plan, const Dataset& train, Augmenter& augmenter,
                 const RunOptions& options = {});

}  // namespace greenaug
