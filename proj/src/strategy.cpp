#include "greenaug/strategy.hpp"

namespace greenaug {

std::string_view strategy_name(PromptStrategy strategy) noexcept {
  switch (strategy) {
    case PromptStrategy::kPText: return "p_text";
    case PromptStrategy::kGTopics: return "g_topics";
    case PromptStrategy::kPTextTopics: return "p_text_topics";
    case PromptStrategy::kGTopicsText: return "g_topics_text";
    case PromptStrategy::kDuplicate: return "duplicate";
    case PromptStrategy::kBackTranslate: return "back_translate";
  }
  return "";
}

std::optional<PromptStrategy> parse_strategy(std::string_view name) noexcept {
  for (PromptStrategy s : kAllStrategies) {
    if (strategy_name(s) == name) return s;
  }
  return std::nullopt;
}

}  // namespace greenaug
