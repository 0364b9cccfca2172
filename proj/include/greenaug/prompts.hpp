#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

#include "greenaug/labels.hpp"
#include "greenaug/strategy.hpp"

namespace greenaug {

// Russian topic phrase for each of the nine labels.
class TopicLexicon {
 public:
  // Built-in phrases; identical to data/lexicon_ru.json.
  static TopicLexicon builtin();

  // JSON object mapping "1".."9" to non-empty phrases. All nine are required.
  static TopicLexicon from_json(std::string_view json_text);
  static TopicLexicon load(const std::filesystem::path& path);

  const std::string& phrase(LabelId label) const { return phrases_[label.index()]; }
  void set_phrase(LabelId label, std::string phrase);

  friend bool operator==(const TopicLexicon&, const TopicLexicon&) = default;

 private:
  std::array<std::string, kNumLabels> phrases_;
};

// Comma-separated phrases in ascending label order. Empty set is a domain error.
std::string topics_phrase(LabelSet labels, const TopicLexicon& lexicon);

// Instantiates the strategy's template with [TEXT] and [TOPICS].
// Baseline strategies are a usage error; topic templates with an empty
// label set are a domain error.
std::string render_prompt(PromptStrategy strategy, std::string_view text, LabelSet labels,
                          const TopicLexicon& lexicon);

}  // namespace greenaug
