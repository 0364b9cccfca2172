#include "greenaug/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>

#include "greenaug/config.hpp"
#include "greenaug/dataset.hpp"
#include "greenaug/embeddings.hpp"
#include "greenaug/error.hpp"
#include "greenaug/metrics.hpp"
#include "greenaug/report.hpp"
#include "greenaug/sampler.hpp"
#include "greenaug/similarity.hpp"
#include "greenaug/stats.hpp"

namespace greenaug {
namespace {

namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCategory::kIo, "cannot open for writing: " + path.string());
  out << contents;
  out.flush();
  if (!out) fail(ErrorCategory::kIo, "write failed: " + path.string());
}

bool same_file(const fs::path& a, const fs::path& b) {
  std::error_code ec;
  if (fs::exists(a, ec) && fs::exists(b, ec)) return fs::equivalent(a, b, ec);
  return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

void ensure_distinct(const fs::path& input, const fs::path& output) {
  if (same_file(input, output)) {
    fail(ErrorCategory::kUsage, "output path " + output.string() + " would overwrite input");
  }
}

Split parse_split(const std::string& name) {
  if (name == "train") return Split::kTrain;
  if (name == "test") return Split::kTest;
  fail(ErrorCategory::kUsage, "unknown split " + name);
}

std::string percent(double fraction) { return format_fixed2(100.0 * fraction); }

struct GlobalOptions {
  std::optional<std::string> config_path;

  AppConfig load() const {
    AppConfig config = config_path ? AppConfig::load(*config_path) : AppConfig{};
    return config;
  }
};

struct StatsOptions {
  std::string input;
  std::string out_dir;
  std::string split = "train";
};

int run_stats(const StatsOptions& o, std::ostream& out) {
  const Dataset dataset = load_dataset(o.input, parse_split(o.split));
  const LabelStats stats = compute_stats(dataset);
  fs::create_directories(o.out_dir);
  write_text(fs::path(o.out_dir) / "label_counts.csv", label_counts_csv(stats));
  write_text(fs::path(o.out_dir) / "cooccurrence.csv", cooccurrence_csv(stats));

  out << "sentences: " << stats.sentence_count << '\n';
  out << "posts: " << stats.post_count << '\n';
  auto describe = [](const std::optional<MeanStd>& v) {
    return v ? format_mean_std(*v) : std::string("undefined");
  };
  out << "avg chars per post: " << describe(stats.chars_per_post) << '\n';
  out << "avg chars per sentence: " << describe(stats.chars_per_sentence) << '\n';
  for (LabelId label : all_labels()) {
    out << label.code() << ' ' << label.name() << ": " << stats.mentions(label) << '\n';
  }
  return 0;
}

struct AugmentOptions {
  std::string train;
  std::string strategy;
  double factor = 1.5;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> cache;
  std::string mode = "replay";
  std::string out;
  std::optional<std::string> lexicon;
  std::string pivot = "en";
  std::optional<std::size_t> parallelism;
  std::optional<std::string> endpoint;
  std::optional<std::string> model;
  std::optional<std::string> translator_url;
};

int run_augment(const AugmentOptions& o, const GlobalOptions& g, std::ostream& out,
                std::ostream& err) {
  AppConfig config = g.load();
  if (o.lexicon) config.lexicon_path = *o.lexicon;
  if (o.cache) config.cache_path = *o.cache;
  if (o.seed) config.seed = *o.seed;
  if (o.parallelism) config.parallelism = *o.parallelism;
  if (o.endpoint) config.endpoint_url = *o.endpoint;
  if (o.model) config.model_name = *o.model;
  if (o.translator_url) config.translator_url = *o.translator_url;
  config.validate();

  const auto strategy = parse_strategy(o.strategy);
  if (!strategy) fail(ErrorCategory::kUsage, "unknown strategy " + o.strategy);
  const auto mode = parse_cache_mode(o.mode);
  if (!mode) fail(ErrorCategory::kUsage, "unknown mode " + o.mode);
  ensure_distinct(o.train, o.out);

  std::shared_ptr<ResponseCache> cache;
  if (*mode != CacheMode::kLive) {
    if (!config.cache_path) {
      fail(ErrorCategory::kUsage, std::string(cache_mode_name(*mode)) + " mode requires --cache");
    }
    ensure_distinct(o.train, *config.cache_path);
    if (*mode == CacheMode::kReplay && !fs::exists(*config.cache_path)) {
      fail(ErrorCategory::kConfig, "cache file not found: " + config.cache_path->string());
    }
    cache = ResponseCache::open(*config.cache_path);
  }

  SamplingPlan plan;
  plan.growth_factor = o.factor;
  plan.seed = config.seed;
  plan.strategy = *strategy;
  plan.params = config.generation_params();
  plan.pivot_lang = o.pivot;
  if (!plan.is_reference_factor()) {
    err << "warning: growth factor " << o.factor
        << " differs from the reference factors 1.5 and 2.0\n";
  }

  const Dataset train = load_dataset(o.train, Split::kTrain);
  const TopicLexicon lexicon =
      config.lexicon_path ? TopicLexicon::load(*config.lexicon_path) : TopicLexicon::builtin();

  std::unique_ptr<LlmClient> client;
  std::unique_ptr<HttpTranslator> translator;
  if (is_llm_strategy(plan.strategy)) {
    client = std::make_unique<LlmClient>(plan.params, *mode, cache, RetryPolicy{}, api_key_from_env());
  } else if (plan.strategy == PromptStrategy::kBackTranslate) {
    translator = std::make_unique<HttpTranslator>(config.translator_url, *mode, cache);
  }

  Augmenter augmenter;
  augmenter.generator = client.get();
  augmenter.translator = translator.get();
  augmenter.lexicon = &lexicon;
  augmenter.pivot_lang = plan.pivot_lang;

  RunOptions options;
  options.parallelism = config.parallelism;
  options.output_path = o.out;
  const Dataset result = run_plan(plan, train, augmenter, options);
  write_dataset(result, o.out);
  out << "wrote " << result.size() << " records (" << (result.size() - train.size())
      << " augmented) to " << o.out << '\n';
  return 0;
}

struct SimilarityOptions {
  std::vector<std::string> inputs;
  std::optional<std::string> embeddings;
  std::optional<std::string> embedding_url;
  std::size_t sample = kDefaultSimilaritySample;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_similarity(const SimilarityOptions& o, const GlobalOptions& g, std::ostream& out) {
  const AppConfig config = g.load();
  const std::uint64_t seed = o.seed.value_or(config.seed);
  if (o.embeddings.has_value() == o.embedding_url.has_value()) {
    fail(ErrorCategory::kUsage, "exactly one of --embeddings or --embedding-url is required");
  }
  std::unique_ptr<EmbeddingProvider> provider;
  if (o.embeddings) {
    provider = std::make_unique<FixtureEmbeddingProvider>(*o.embeddings);
  } else {
    provider = std::make_unique<HttpEmbeddingProvider>(*o.embedding_url);
  }

  std::map<PromptStrategy, std::vector<TextPair>> by_strategy;
  for (const auto& input : o.inputs) {
    ensure_distinct(input, o.out);
    const Dataset dataset = load_dataset(input, Split::kTrain);
    for (PromptStrategy s : kAllStrategies) {
      auto pairs = augmentation_pairs(dataset, s);
      auto& bucket = by_strategy[s];
      bucket.insert(bucket.end(), pairs.begin(), pairs.end());
    }
  }

  std::string csv = "strategy,rouge1,rougeL,bertscore\n";
  bool any = false;
  for (const auto& [strategy, pairs] : by_strategy) {
    if (pairs.empty()) continue;
    any = true;
    const auto averages = similarity_report(pairs, o.sample, seed, *provider);
    csv += std::string(strategy_name(strategy)) + "," + percent(averages.rouge1) + "," +
           percent(averages.rouge_l) + "," + percent(averages.bertscore) + "\n";
  }
  if (!any) fail(ErrorCategory::kUsage, "inputs contain no augmented records");
  write_text(o.out, csv);
  out << csv;
  return 0;
}

struct EvaluateOptions {
  std::string test;
  std::string pred;
  std::optional<std::string> run_label;
  std::optional<std::string> out;
};

int run_evaluate(const EvaluateOptions& o, std::ostream& out) {
  const Dataset test = load_dataset(o.test, Split::kTest);
  const LabelMatrix predicted = load_predictions(o.pred, test);
  const MultiLabelF1 scores = multilabel_f1(gold_matrix(test), predicted);

  out << "code,label,precision,recall,f1\n";
  for (LabelId label : all_labels()) {
    const auto& s = scores.per_class[static_cast<std::size_t>(label.index())];
    out << label.code() << ',' << label.name() << ',' << percent(s.precision) << ','
        << percent(s.recall) << ',' << percent(s.f1) << '\n';
  }
  out << "macro_f1," << percent(scores.macro_f1) << '\n';

  if (o.out) {
    ensure_distinct(o.test, *o.out);
    ensure_distinct(o.pred, *o.out);
    if (!o.run_label) fail(ErrorCategory::kUsage, "--out requires --run-label");
    RunConfig::parse(*o.run_label);
    write_text(*o.out, run_score_json({*o.run_label, 100.0 * scores.macro_f1}));
  }
  return 0;
}

struct ReportOptions {
  std::string runs;
  std::string baseline = "original";
  std::string format = "markdown";
  std::optional<std::string> out;
  std::optional<std::string> growth_out;
};

int run_report(const ReportOptions& o, std::ostream& out) {
  TableFormat format;
  if (o.format == "markdown") format = TableFormat::kMarkdown;
  else if (o.format == "csv") format = TableFormat::kCsv;
  else fail(ErrorCategory::kUsage, "unknown format " + o.format);

  const auto runs = load_run_scores(o.runs);
  const auto reports = build_reports(runs, o.baseline);
  const std::string table = render_tables(reports, format);
  if (o.out) write_text(*o.out, table);
  else out << table;
  if (o.growth_out) write_text(*o.growth_out, render_growth_csv(reports));
  return 0;
}

void report_error(std::ostream& err, ErrorCategory category, const std::string& message) {
  std::string line = message;
  std::replace(line.begin(), line.end(), '\n', ' ');
  err << "error: " << category_name(category) << ": " << line << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Augment multi-label text datasets with LLM prompts and score the results", "greenaug"};
  app.set_version_flag("--version", GREENAUG_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--config", global.config_path, "JSON config file")->check(CLI::ExistingFile);

  std::function<int()> command;

  StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Label counts, co-occurrence and length statistics");
  stats_cmd->add_option("--in", stats.input, "Dataset JSONL")->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--out-dir", stats.out_dir, "Directory for the CSV outputs")->required();
  stats_cmd->add_option("--split", stats.split, "train or test")->check(CLI::IsMember({"train", "test"}));
  stats_cmd->callback([&] { command = [&] { return run_stats(stats, out); }; });

  AugmentOptions augment;
  auto* augment_cmd = app.add_subcommand("augment", "Grow a training set with one augmentation strategy");
  augment_cmd->add_option("--train", augment.train, "Original training JSONL")->required()->check(CLI::ExistingFile);
  augment_cmd->add_option("--strategy", augment.strategy, "Augmentation strategy")
      ->required()
      ->check(CLI::IsMember({"p_text", "g_topics", "p_text_topics", "g_topics_text", "duplicate", "back_translate"}));
  augment_cmd->add_option("--factor", augment.factor, "Growth factor (1.5 or 2.0)")->required();
  augment_cmd->add_option("--seed", augment.seed, "RNG seed");
  augment_cmd->add_option("--cache", augment.cache, "Record/replay cache JSONL");
  augment_cmd->add_option("--mode", augment.mode, "live, record or replay")
      ->check(CLI::IsMember({"live", "record", "replay"}));
  augment_cmd->add_option("--out", augment.out, "Output JSONL")->required();
  augment_cmd->add_option("--lexicon", augment.lexicon, "Topic lexicon JSON")->check(CLI::ExistingFile);
  augment_cmd->add_option("--pivot", augment.pivot, "Back-translation pivot language");
  augment_cmd->add_option("--parallelism", augment.parallelism, "Concurrent requests")->check(CLI::PositiveNumber);
  augment_cmd->add_option("--endpoint", augment.endpoint, "Chat-completions URL");
  augment_cmd->add_option("--model", augment.model, "Model name");
  augment_cmd->add_option("--translator-url", augment.translator_url, "Translate endpoint URL");
  augment_cmd->callback([&] { command = [&] { return run_augment(augment, global, out, err); }; });

  SimilarityOptions similarity;
  auto* similarity_cmd = app.add_subcommand("similarity", "ROUGE-1, ROUGE-L and BERTScore of generated text vs. source");
  similarity_cmd->add_option("--in", similarity.inputs, "Augmented dataset JSONL (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  similarity_cmd->add_option("--embeddings", similarity.embeddings, "Token-embedding fixture JSONL")->check(CLI::ExistingFile);
  similarity_cmd->add_option("--embedding-url", similarity.embedding_url, "Token-embedding service URL");
  similarity_cmd->add_option("--sample", similarity.sample, "Pairs sampled per strategy")->check(CLI::PositiveNumber);
  similarity_cmd->add_option("--seed", similarity.seed, "Sampling seed");
  similarity_cmd->add_option("--out", similarity.out, "Output CSV")->required();
  similarity_cmd->callback([&] { command = [&] { return run_similarity(similarity, global, out); }; });

  EvaluateOptions evaluate;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Multi-label macro F1 of a prediction file");
  evaluate_cmd->add_option("--test", evaluate.test, "Test dataset JSONL")->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--pred", evaluate.pred, "Prediction JSONL")->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--run-label", evaluate.run_label, "classifier/strategy[/factor]");
  evaluate_cmd->add_option("--out", evaluate.out, "Run-score JSON output");
  evaluate_cmd->callback([&] { command = [&] { return run_evaluate(evaluate, out); }; });

  ReportOptions report;
  auto* report_cmd = app.add_subcommand("report", "Aggregate run scores into mean±std tables");
  report_cmd->add_option("--runs", report.runs, "Directory of run-score JSON files")->required();
  report_cmd->add_option("--baseline", report.baseline, "Strategy used as the growth reference");
  report_cmd->add_option("--format", report.format, "markdown or csv")->check(CLI::IsMember({"markdown", "csv"}));
  report_cmd->add_option("--out", report.out, "Table output path (default stdout)");
  report_cmd->add_option("--growth-out", report.growth_out, "Growth CSV output path");
  report_cmd->callback([&] { command = [&] { return run_report(report, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, ErrorCategory::kUsage, e.what());
    err << app.help();
    return exit_code_for(ErrorCategory::kUsage);
  }

  try {
    return command ? command() : exit_code_for(ErrorCategory::kUsage);
  } catch (const Error& e) {
    report_error(err, e.category(), e.what());
    return exit_code_for(e.category());
  } catch (const fs::filesystem_error& e) {
    report_error(err, ErrorCategory::kIo, e.what());
    return exit_code_for(ErrorCategory::kIo);
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace greenaug
