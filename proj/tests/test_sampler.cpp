#include <doctest.h>

#include <map>
#include <mutex>
#include <set>

#include "greenaug/error.hpp"
#include "greenaug/sampler.hpp"
#include "greenaug/stats.hpp"
#include "support/fixtures.hpp"

using namespace greenaug;
using greenaug::testing::TempDir;
using greenaug::testing::original;

namespace {

Dataset ten_records() {
  Dataset d;
  for (int i = 0; i < 10; ++i) {
    LabelSet labels;
    if (i % 3 != 0) labels.insert(LabelId(i % 9 + 1));
    d.append(original("s" + std::to_string(i), "Предложение номер " + std::to_string(i) + ".", labels));
  }
  return d;
}

// Generator that answers from a fixed function and counts calls.
class FakeGenerator final : public TextGenerator {
 public:
  explicit FakeGenerator(std::function<std::string(std::string_view)> fn) : fn_(std::move(fn)) {}
  std::string complete(std::string_view prompt) override {
    std::lock_guard lock(mutex_);
    prompts.emplace_back(prompt);
    return fn_(prompt);
  }
  std::vector<std::string> prompts;

 private:
  std::function<std::string(std::string_view)> fn_;
  std::mutex mutex_;
};

class IdentityTranslator final : public Translator {
 public:
  std::string translate(std::string_view text, std::string_view source,
                        std::string_view target) override {
    std::lock_guard lock(mutex_);
    calls.emplace_back(std::string(source) + ">" + std::string(target));
    return std::string(text);
  }
  std::vector<std::string> calls;

 private:
  std::mutex mutex_;
};

}  // namespace

TEST_CASE("target size rounds half up and rejects shrinking factors") {
  SamplingPlan plan;
  plan.growth_factor = 1.5;
  CHECK(plan.target_size(2442) == 3663);
  CHECK(plan.target_size(3) == 5);  // 4.5 rounds up
  plan.growth_factor = 2.0;
  CHECK(plan.target_size(2442) == 4884);
  plan.growth_factor = 1.0;
  CHECK(plan.target_size(2442) == 2442);
  CHECK_FALSE(plan.is_reference_factor());
  plan.growth_factor = 0.5;
  CHECK_THROWS_AS(plan.target_size(10), Error);
}

TEST_CASE("single record training set always yields that record") {
  Dataset d;
  d.append(original("only", "Единственное предложение.", LabelSet{1}));
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    CHECK(select_source(rng, d, PromptStrategy::kPText).id == "only");
  }
}

TEST_CASE("uniform selection over ten records") {
  const Dataset d = ten_records();
  Rng rng(42);
  std::map<std::string, int> counts;
  for (int i = 0; i < 1000; ++i) ++counts[select_source(rng, d, PromptStrategy::kPText).id];
  CHECK(counts.size() == 10);
  for (const auto& [id, n] : counts) {
    INFO(id);
    CHECK(std::abs(n / 1000.0 - 0.10) <= 0.05);
  }
}

TEST_CASE("topic strategies only draw labeled sources") {
  const Dataset d = ten_records();
  CHECK(eligible_sources(d, PromptStrategy::kPText).size() == 10);
  CHECK(eligible_sources(d, PromptStrategy::kDuplicate).size() == 10);
  const auto topic = eligible_sources(d, PromptStrategy::kGTopics);
  CHECK(topic.size() == 6);
  CHECK(eligible_sources(d, PromptStrategy::kPTextTopics) == topic);
  CHECK(eligible_sources(d, PromptStrategy::kGTopicsText) == topic);
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    CHECK_FALSE(select_source(rng, d, PromptStrategy::kGTopics).labels.empty());
  }

  Dataset unlabeled;
  unlabeled.append(original("u", "Без меток.", LabelSet{}));
  CHECK_THROWS_AS(select_source(rng, unlabeled, PromptStrategy::kGTopicsText), Error);
}

TEST_CASE("duplicate copies text and labels with provenance") {
  const auto src = original("s1", "Сдал батарейки на переработку.", LabelSet{1, 3}, "post9");
  Augmenter aug;
  const auto out = augment_once(src, PromptStrategy::kDuplicate, 5, aug);
  CHECK(out.text == src.text);
  CHECK(out.labels == src.labels);
  CHECK(out.id == "s1~duplicate~5");
  CHECK(out.post_id == out.id);
  const auto& origin = std::get<AugmentedOrigin>(out.origin);
  CHECK(origin.strategy == PromptStrategy::kDuplicate);
  CHECK(origin.source_id == "s1");
}

TEST_CASE("LLM strategies render the prompt and inherit labels") {
  const auto t = testing::load_worked_example();
  const auto src = original("ex", t.source_text, t.labels);
  LlmClient client(GenerationParams{}, CacheMode::kReplay,
                   ResponseCache::open(testing::worked_example_cache_path()));
  Augmenter aug{&client};
  for (PromptStrategy s : {PromptStrategy::kPText, PromptStrategy::kGTopics,
                           PromptStrategy::kPTextTopics, PromptStrategy::kGTopicsText}) {
    const auto out = augment_once(src, s, 1, aug);
    CHECK(out.text == t.result(s));
    CHECK(out.labels == LabelSet{3, 8});
  }
  const auto ptt = augment_once(src, PromptStrategy::kPTextTopics, 1, aug);
  CHECK(ptt.text.rfind("В преддверии волшебного праздника", 0) == 0);
}

TEST_CASE("LLM strategy without a generator is a config error") {
  Augmenter aug;
  try {
    augment_once(original("a", "текст", LabelSet{1}), PromptStrategy::kPText, 1, aug);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::kConfig);
  }
}

TEST_CASE("back translation round-trips through the pivot") {
  IdentityTranslator tr;
  Augmenter aug;
  aug.translator = &tr;
  const auto src = original("s", "Обмен вещами в субботу.", LabelSet{6});
  const auto out = augment_once(src, PromptStrategy::kBackTranslate, 2, aug);
  CHECK(out.text == src.text);
  CHECK(out.labels == src.labels);
  CHECK(tr.calls == std::vector<std::string>{"ru>en", "en>ru"});

  aug.pivot_lang = "de";
  tr.calls.clear();
  augment_once(src, PromptStrategy::kBackTranslate, 3, aug);
  CHECK(tr.calls == std::vector<std::string>{"ru>de", "de>ru"});
}

TEST_CASE("back translation replays from a recorded cache") {
  auto cache = std::make_shared<ResponseCache>();
  const std::string ru = "Ремонт обуви вместо покупки новой.";
  const std::string en = "Repairing shoes instead of buying new ones.";
  const std::string back = "Ремонт обуви вместо покупки новых.";
  cache->insert({translation_cache_key(ru, "ru", "en"), ru, en, "t"});
  cache->insert({translation_cache_key(en, "en", "ru"), en, back, "t"});
  HttpTranslator tr("http://127.0.0.1:1/translate", CacheMode::kReplay, cache);
  CHECK(back_translate(ru, tr) == back);
}

TEST_CASE("run_plan output shape") {
  const Dataset train = ten_records();
  Augmenter aug;
  for (double factor : {1.0, 1.5, 2.0}) {
    SamplingPlan plan;
    plan.growth_factor = factor;
    plan.seed = 3;
    plan.strategy = PromptStrategy::kDuplicate;
    const Dataset out = run_plan(plan, train, aug);
    CHECK(out.size() == plan.target_size(train.size()));
    for (std::size_t i = 0; i < train.size(); ++i) CHECK(out[i] == train[i]);
    for (std::size_t i = train.size(); i < out.size(); ++i) {
      CHECK_FALSE(out[i].is_original());
      CHECK(out[i].id.ends_with("~" + std::to_string(i - train.size() + 1)));
    }
    CHECK_NOTHROW(out.validate_provenance());
  }
}

TEST_CASE("run_plan is deterministic under parallel generation") {
  const Dataset train = testing::greenru_shaped_train();
  auto cache = std::make_shared<ResponseCache>();
  const auto lexicon = TopicLexicon::builtin();
  testing::prime_cache(*cache, train, PromptStrategy::kGTopicsText, GenerationParams{}, lexicon);
  LlmClient client(GenerationParams{}, CacheMode::kReplay, cache);
  Augmenter aug{&client};

  SamplingPlan plan;
  plan.growth_factor = 1.5;
  plan.seed = 11;
  plan.strategy = PromptStrategy::kGTopicsText;
  const Dataset a = run_plan(plan, train, aug, {.parallelism = 1});
  const Dataset b = run_plan(plan, train, aug, {.parallelism = 8});
  CHECK(a.size() == 3663);
  CHECK(serialize_dataset(a) == serialize_dataset(b));
  for (std::size_t i = train.size(); i < a.size(); ++i) CHECK_FALSE(a[i].labels.empty());

  plan.seed = 12;
  CHECK(serialize_dataset(run_plan(plan, train, aug)) != serialize_dataset(a));
}

TEST_CASE("a failing draw aborts the run and leaves a partial file") {
  const Dataset train = ten_records();
  std::atomic<int> calls{0};
  FakeGenerator gen([&](std::string_view prompt) -> std::string {
    if (++calls == 4) return "";
    return "Ответ на " + std::string(prompt);
  });
  Augmenter aug{&gen};
  SamplingPlan plan;
  plan.growth_factor = 2.0;
  plan.seed = 5;
  TempDir dir;
  const auto out_path = dir / "augmented.jsonl";
  try {
    run_plan(plan, train, aug, {.parallelism = 1, .output_path = out_path});
    FAIL("expected generation error");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::kGeneration);
  }
  CHECK_FALSE(std::filesystem::exists(out_path));
  const Dataset partial = load_dataset(dir / "augmented.jsonl.partial", Split::kTrain);
  CHECK(partial.size() == train.size() + 3);
  for (std::size_t i = 0; i < train.size(); ++i) CHECK(partial[i] == train[i]);
}

TEST_CASE("duplicate augmentation roughly preserves label proportions") {
  const Dataset train = testing::greenru_shaped_train();
  const auto before = compute_stats(train);
  Augmenter aug;
  SamplingPlan plan;
  plan.growth_factor = 2.0;
  plan.strategy = PromptStrategy::kDuplicate;
  plan.seed = 42;
  const auto after = compute_stats(run_plan(plan, train, aug));
  CHECK(after.sentence_count == 4884);
  for (std::size_t k = 0; k < kNumLabels; ++k) {
    const double p0 = static_cast<double>(before.mentions_per_label[k]) / before.sentence_count;
    const double p1 = static_cast<double>(after.mentions_per_label[k]) / after.sentence_count;
    CHECK(std::abs(p1 - p0) < 0.03);
  }
}

TEST_CASE("run_plan rejects already augmented training data") {
  Dataset train = ten_records();
  Augmenter aug;
  SamplingPlan plan;
  plan.strategy = PromptStrategy::kDuplicate;
  const Dataset once = run_plan(plan, train, aug);
  CHECK_THROWS_AS(run_plan(plan, once, aug), Error);
}
