#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "greenaug/cache.hpp"
#include "greenaug/dataset.hpp"
#include "greenaug/labels.hpp"
#include "greenaug/llm_client.hpp"
#include "greenaug/prompts.hpp"

namespace greenaug::testing {

std::filesystem::path source_dir();
std::filesystem::path fixture_path(const std::string& name);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

SentenceRecord original(std::string id, std::string text, LabelSet labels,
                        std::string post_id = "p0");

// Training-set mentions per practice, label 1..9, from the dataset statistics table.
inline constexpr std::array<std::size_t, kNumLabels> kGreenRuTrainMentions = {
    1275, 55, 272, 22, 236, 146, 109, 510, 10};
inline constexpr std::size_t kGreenRuTrainSentences = 2442;
inline constexpr std::size_t kGreenRuTrainPosts = 913;

// Deterministic synthetic training set with GreenRu's training-subset shape:
// 2442 sentences in 913 posts whose label incidences equal the corpus
// per-practice counts exactly. Texts are synthetic Russian sentences.
Dataset greenru_shaped_train();

// One source sentence with its four rendered prompts and generations.
struct WorkedExample {
  std::string source_text;
  LabelSet labels;
  std::string prompt_p_text, prompt_g_topics, prompt_p_text_topics, prompt_g_topics_text;
  std::string result_p_text, result_g_topics, result_p_text_topics, result_g_topics_text;

  const std::string& prompt(PromptStrategy s) const;
  const std::string& result(PromptStrategy s) const;
};
WorkedExample load_worked_example();

// Shipped replay cache: the four worked-example prompts (default lexicon and
// generation params) mapped to the worked-example generations.
std::filesystem::path worked_example_cache_path();

// Fills `cache` with a deterministic synthetic response for every eligible
// original record's prompt under `strategy`.
void prime_cache(ResponseCache& cache, const Dataset& train, PromptStrategy strategy,
                 const GenerationParams& params, const TopicLexicon& lexicon);

std::string synthetic_response(const std::string& prompt);

}  // namespace greenaug::testing
