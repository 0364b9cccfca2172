#include "greenaug/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "greenaug/error.hpp"

namespace greenaug {

bool SamplingPlan::is_reference_factor() const noexcept {
  return growth_factor == 1.5 || growth_factor == 2.0;
}

std::size_t SamplingPlan::target_size(std::size_t original_size) const {
  if (!std::isfinite(growth_factor) || growth_factor < 1.0) {
    fail(ErrorCategory::kConfig, "growth factor must be a finite value >= 1");
  }
  const double scaled = growth_factor * static_cast<double>(original_size);
  return static_cast<std::size_t>(std::floor(scaled + 0.5));
}

std::vector<std::size_t> eligible_sources(const Dataset& train, PromptStrategy strategy) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < train.size(); ++i) {
    const auto& record = train[i];
    if (!record.is_original()) continue;
    if (needs_topics(strategy) && record.labels.empty()) continue;
    out.push_back(i);
  }
  return out;
}

const SentenceRecord& select_source(Rng& rng, const Dataset& train,
                                    const std::vector<std::size_t>& eligible) {
  if (eligible.empty()) {
    fail(ErrorCategory::kConfig, "no eligible source sentences for the strategy");
  }
  return train[eligible[rng.uniform_index(eligible.size())]];
}

const SentenceRecord& select_source(Rng& rng, const Dataset& train, PromptStrategy strategy) {
  return select_source(rng, train, eligible_sources(train, strategy));
}

std::string augmented_id(const SentenceRecord& source, PromptStrategy strategy,
                         std::size_t draw_index) {
  return source.id + "~" + std::string(strategy_name(strategy)) + "~" + std::to_string(draw_index);
}

std::string back_translate(std::string_view text, Translator& translator,
                           std::string_view pivot_lang) {
  const std::string forward = translator.translate(text, "ru", pivot_lang);
  if (forward.empty()) fail(ErrorCategory::kGeneration, "empty translation into " + std::string(pivot_lang));
  std::string back = translator.translate(forward, pivot_lang, "ru");
  if (back.empty()) fail(ErrorCategory::kGeneration, "empty back-translation from " + std::string(pivot_lang));
  return back;
}

SentenceRecord augment_once(const SentenceRecord& source, PromptStrategy strategy,
                            std::size_t draw_index, Augmenter& augmenter) {
  if (!source.is_original()) {
    fail(ErrorCategory::kUsage, "augmentation source " + source.id + " is not an original record");
  }
  std::string text;
  switch (strategy) {
    case PromptStrategy::kDuplicate:
      text = source.text;
      break;
    case PromptStrategy::kBackTranslate:
      if (augmenter.translator == nullptr) fail(ErrorCategory::kConfig, "back translation needs a translator");
      text = back_translate(source.text, *augmenter.translator, augmenter.pivot_lang);
      break;
    default: {
      if (augmenter.generator == nullptr) fail(ErrorCategory::kConfig, "LLM strategy needs a generator");
      static const TopicLexicon builtin = TopicLexicon::builtin();
      const TopicLexicon& lexicon = augmenter.lexicon ? *augmenter.lexicon : builtin;
      text = augmenter.generator->complete(render_prompt(strategy, source.text, source.labels, lexicon));
      break;
    }
  }
  if (text.empty()) fail(ErrorCategory::kGeneration, "empty augmentation for source " + source.id);

  SentenceRecord out;
  out.id = augmented_id(source, strategy, draw_index);
  out.post_id = out.id;
  out.text = std::move(text);
  out.labels = source.labels;
  out.origin = AugmentedOrigin{strategy, source.id};
  return out;
}

Dataset run_plan(const SamplingPlan& plan, const Dataset& train, Augmenter& augmenter,
                 const RunOptions& options) {
  for (const auto& record : train.records()) {
    if (!record.is_original()) {
      fail(ErrorCategory::kUsage, "training set already contains augmented record " + record.id);
    }
  }
  const std::size_t target = plan.target_size(train.size());
  const std::size_t additions = target - train.size();

  std::vector<const SentenceRecord*> sources;
  sources.reserve(additions);
  if (additions > 0) {
    const auto eligible = eligible_sources(train, plan.strategy);
    Rng rng(plan.seed);
    for (std::size_t i = 0; i < additions; ++i) {
      sources.push_back(&select_source(rng, train, eligible));
    }
  }

  std::vector<std::optional<SentenceRecord>> produced(additions);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex failure_mutex;
  std::size_t failed_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;

  auto worker = [&] {
    while (!abort.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= additions) return;
      try {
        produced[i] = augment_once(*sources[i], plan.strategy, i + 1, augmenter);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
        abort.store(true);
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(options.parallelism, 1, std::max<std::size_t>(additions, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Dataset out(train.split());
  for (const auto& record : train.records()) out.append(record);
  const std::size_t complete = failure ? failed_index : additions;
  for (std::size_t i = 0; i < complete; ++i) out.append(std::move(*produced[i]));

  if (failure) {
    if (options.output_path) {
      std::filesystem::path partial = *options.output_path;
      partial += ".partial";
      write_dataset(out, partial);
    }
    std::rethrow_exception(failure);
  }
  return out;
}

}  // namespace greenaug
