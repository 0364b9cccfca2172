#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace greenaug {

// Augmentation strategies: four LLM prompting variants and two baselines.
enum class PromptStrategy {
  kPText,
  kGTopics,
  kPTextTopics,
  kGTopicsText,
  kDuplicate,
  kBackTranslate,
};

inline constexpr std::array<PromptStrategy, 6> kAllStrategies = {
    PromptStrategy::kPText,       PromptStrategy::kGTopics,
    PromptStrategy::kPTextTopics, PromptStrategy::kGTopicsText,
    PromptStrategy::kDuplicate,   PromptStrategy::kBackTranslate,
};

// Wire name: p_text, g_topics, p_text_topics, g_topics_text, duplicate, back_translate.
std::string_view strategy_name(PromptStrategy strategy) noexcept;
std::optional<PromptStrategy> parse_strategy(std::string_view name) noexcept;

constexpr bool is_llm_strategy(PromptStrategy s) noexcept {
  return s != PromptStrategy::kDuplicate && s != PromptStrategy::kBackTranslate;
}

// Strategies whose prompt carries the [TOPICS] slot and so need a non-empty label set.
constexpr bool needs_topics(PromptStrategy s) noexcept {
  return s == PromptStrategy::kGTopics || s == PromptStrategy::kPTextTopics ||
         s == PromptStrategy::kGTopicsText;
}

}  // namespace greenaug
