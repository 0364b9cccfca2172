#include "greenaug/prompts.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "greenaug/error.hpp"

namespace greenaug {
namespace {

constexpr std::string_view kParaphrase = "Перефразируй текст: ";
constexpr std::string_view kGenerate =
    "Напиши короткий пост для экологического сообщества в социальной сети, "
    "относящийся к тематикам: ";
constexpr std::string_view kParaphraseWithTopics =
    "Перефразируй текст с учетом того, что он относится к следующим тематикам: ";
constexpr std::string_view kSourceTextMarker = ". Исходный текст: ";
constexpr std::string_view kExampleMarker = ". Например: ";

constexpr std::array<std::string_view, kNumLabels> kBuiltinPhrases = {
    "сортировка отходов",
    "изучение маркировки товаров",
    "переработка отходов",
    "подписание петиций",
    "отказ от покупок",
    "обмен вещами",
    "совместное использование вещей",
    "участие в акциях по продвижению ответственного потребления",
    "ремонт вещей",
};

}  // namespace

TopicLexicon TopicLexicon::builtin() {
  TopicLexicon lexicon;
  for (int i = 0; i < kNumLabels; ++i) lexicon.phrases_[i] = std::string(kBuiltinPhrases[i]);
  return lexicon;
}

TopicLexicon TopicLexicon::from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCategory::kParse, std::string("lexicon: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCategory::kSchema, "lexicon must be a JSON object");

  TopicLexicon lexicon;
  std::array<bool, kNumLabels> seen{};
  for (const auto& [key, value] : j.items()) {
    int code = 0;
    try {
      std::size_t used = 0;
      code = std::stoi(key, &used);
      if (used != key.size()) code = 0;
    } catch (const std::exception&) {
      code = 0;
    }
    const auto label = LabelId::from_code(code);
    if (!label) fail(ErrorCategory::kSchema, "lexicon: unknown label key \"" + key + "\"");
    if (!value.is_string() || value.get<std::string>().empty()) {
      fail(ErrorCategory::kSchema, "lexicon: phrase for label " + key + " must be a non-empty string");
    }
    lexicon.phrases_[label->index()] = value.get<std::string>();
    seen[label->index()] = true;
  }
  for (LabelId label : all_labels()) {
    if (!seen[label.index()]) {
      fail(ErrorCategory::kSchema, "lexicon: missing phrase for label " + std::to_string(label.code()));
    }
  }
  return lexicon;
}

TopicLexicon TopicLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCategory::kIo, "cannot open lexicon " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

void TopicLexicon::set_phrase(LabelId label, std::string phrase) {
  if (phrase.empty()) fail(ErrorCategory::kDomain, "topic phrase must be non-empty");
  phrases_[label.index()] = std::move(phrase);
}

std::string topics_phrase(LabelSet labels, const TopicLexicon& lexicon) {
  if (labels.empty()) fail(ErrorCategory::kDomain, "topic list requires at least one label");
  std::string out;
  for (LabelId label : labels.labels()) {
    if (!out.empty()) out += ", ";
    out += lexicon.phrase(label);
  }
  return out;
}

std::string render_prompt(PromptStrategy strategy, std::string_view text, LabelSet labels,
                          const TopicLexicon& lexicon) {
  if (!is_llm_strategy(strategy)) {
    fail(ErrorCategory::kUsage,
         "strategy " + std::string(strategy_name(strategy)) + " does not use a prompt");
  }
  std::string out;
  switch (strategy) {
    case PromptStrategy::kPText:
      out.append(kParaphrase).append(text);
      break;
    case PromptStrategy::kGTopics:
      out.append(kGenerate).append(topics_phrase(labels, lexicon)).append(".");
      break;
    case PromptStrategy::kPTextTopics:
      out.append(kParaphraseWithTopics)
          .append(topics_phrase(labels, lexicon))
          .append(kSourceTextMarker)
          .append(text);
      break;
    case PromptStrategy::kGTopicsText:
      out.append(kGenerate)
          .append(topics_phrase(labels, lexicon))
          .append(kExampleMarker)
          .append(text);
      break;
    default:
      break;
  }
  return out;
}

}  // namespace greenaug
