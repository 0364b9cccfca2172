#include "support/fixtures.hpp"

#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <stdexcept>

#include "greenaug/hashing.hpp"
#include "greenaug/sampler.hpp"

namespace greenaug::testing {

std::filesystem::path source_dir() { return GREENAUG_SOURCE_DIR; }

std::filesystem::path fixture_path(const std::string& name) {
  return source_dir() / "tests" / "fixtures" / name;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

TempDir::TempDir() {
  static std::random_device device;
  const auto base = std::filesystem::temp_directory_path();
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto candidate = base / ("greenaug-test-" + std::to_string(device()));
    if (std::filesystem::create_directory(candidate)) {
      path_ = candidate;
      return;
    }
  }
  throw std::runtime_error("cannot create temp dir");
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

SentenceRecord original(std::string id, std::string text, LabelSet labels, std::string post_id) {
  SentenceRecord r;
  r.id = std::move(id);
  r.post_id = std::move(post_id);
  r.text = std::move(text);
  r.labels = labels;
  return r;
}

Dataset greenru_shaped_train() {
  constexpr std::size_t n = kGreenRuTrainSentences;
  // 1009 is coprime with 2442, so k -> k*1009 mod n is a permutation.
  auto slot = [](std::size_t k) { return (k * 1009) % n; };

  std::vector<LabelSet> labels(n);
  std::size_t offset = 0;
  for (LabelId label : all_labels()) {
    const std::size_t count = kGreenRuTrainMentions[static_cast<std::size_t>(label.index())];
    for (std::size_t t = 0; t < count; ++t) labels[slot((offset + t) % n)].insert(label);
    offset += count;
  }

  static const std::array<std::string, 9> kTopicWords = {
      "раздельный сбор отходов", "маркировка упаковки", "переработка вторсырья",
      "петиция в администрацию", "отказ от лишних покупок", "обмен вещами",
      "шеринг инструментов", "экологическая акция", "ремонт одежды"};
  static const std::array<std::string, 5> kFillers = {
      "Приходите всей семьёй", "Подробности в комментариях", "Спасибо всем участникам",
      "Ждём ваших предложений", "Расскажите друзьям"};

  Dataset d(Split::kTrain);
  for (std::size_t i = 0; i < n; ++i) {
    std::string text = "Запись " + std::to_string(i + 1) + ":";
    for (LabelId label : labels[i].labels()) text += " " + kTopicWords[static_cast<std::size_t>(label.index())] + ",";
    for (std::size_t k = 0; k <= i % 4; ++k) text += " " + kFillers[(i + k) % kFillers.size()] + ".";
    const std::size_t post = i * kGreenRuTrainPosts / n;
    d.append(original("s" + std::to_string(i + 1), text, labels[i], "post" + std::to_string(post + 1)));
  }
  return d;
}

const std::string& WorkedExample::prompt(PromptStrategy s) const {
  switch (s) {
    case PromptStrategy::kPText: return prompt_p_text;
    case PromptStrategy::kGTopics: return prompt_g_topics;
    case PromptStrategy::kPTextTopics: return prompt_p_text_topics;
    case PromptStrategy::kGTopicsText: return prompt_g_topics_text;
    default: throw std::invalid_argument("no prompt for baseline");
  }
}

const std::string& WorkedExample::result(PromptStrategy s) const {
  switch (s) {
    case PromptStrategy::kPText: return result_p_text;
    case PromptStrategy::kGTopics: return result_g_topics;
    case PromptStrategy::kPTextTopics: return result_p_text_topics;
    case PromptStrategy::kGTopicsText: return result_g_topics_text;
    default: throw std::invalid_argument("no result for baseline");
  }
}

WorkedExample load_worked_example() {
  const auto j = nlohmann::json::parse(read_file(fixture_path("worked_example.json")));
  WorkedExample t;
  t.source_text = j["source_text"].get<std::string>();
  for (int code : j["labels"].get<std::vector<int>>()) t.labels.insert(LabelId(code));
  const auto& p = j["prompts"];
  const auto& r = j["results"];
  t.prompt_p_text = p["p_text"];
  t.prompt_g_topics = p["g_topics"];
  t.prompt_p_text_topics = p["p_text_topics"];
  t.prompt_g_topics_text = p["g_topics_text"];
  t.result_p_text = r["p_text"];
  t.result_g_topics = r["g_topics"];
  t.result_p_text_topics = r["p_text_topics"];
  t.result_g_topics_text = r["g_topics_text"];
  return t;
}

std::filesystem::path worked_example_cache_path() { return fixture_path("worked_example_cache.jsonl"); }

std::string synthetic_response(const std::string& prompt) {
  return "Сгенерированный вариант " + sha256_hex(prompt).substr(0, 16) + ".";
}

void prime_cache(ResponseCache& cache, const Dataset& train, PromptStrategy strategy,
                 const GenerationParams& params, const TopicLexicon& lexicon) {
  for (std::size_t index : eligible_sources(train, strategy)) {
    const auto& record = train[index];
    const std::string prompt = render_prompt(strategy, record.text, record.labels, lexicon);
    cache.insert({completion_cache_key(prompt, params), prompt, synthetic_response(prompt),
                  "2024-01-01T00:00:00Z"});
  }
}

}  // namespace greenaug::testing
