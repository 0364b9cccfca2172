#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "greenaug/stats.hpp"

namespace greenaug {

// Arithmetic mean and sample (n-1) standard deviation; a single run has std 0.
// An empty list is a usage error.
MeanStd aggregate_runs(std::span<const double> scores);

// 100 * (augmented - baseline) / baseline. Non-positive baseline is a domain error.
double growth(double baseline_mean, double augmented_mean);

// Half-up rounding to two decimals, e.g. 23.418 -> "23.42".
std::string format_fixed2(double value);

// "MM.mm±SS.ss"
std::string format_mean_std(const MeanStd& value);

// Parsed from "classifier/strategy" or "classifier/strategy/factor".
struct RunConfig {
  std::string classifier;
  std::string strategy;
  std::optional<double> factor;

  static RunConfig parse(std::string_view label);
  std::string label() const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct RunScore {
  std::string config;
  double f1_percent = 0.0;
};

struct RunReport {
  RunConfig config;
  std::vector<double> run_scores;
  MeanStd summary;
  std::optional<double> growth_pct;
};

// Groups run scores by configuration and attaches growth against the
// configuration for the same classifier whose strategy is `baseline_strategy`.
std::vector<RunReport> build_reports(std::span<const RunScore> runs,
                                     std::string_view baseline_strategy);

// Orders by classifier, then strategy (original, baselines, LLM prompts,
// then others alphabetically), then factor.
void sort_reports(std::vector<RunReport>& reports);

enum class TableFormat { kMarkdown, kCsv };

std::string render_tables(std::vector<RunReport> reports, TableFormat format);

// Per-configuration growth percentages, baseline rows omitted.
std::string render_growth_csv(std::vector<RunReport> reports);

// Reads every *.json file in `dir` as {"config": str, "f1_percent": real},
// in file-name order.
std::vector<RunScore> load_run_scores(const std::filesystem::path& dir);

std::string run_score_json(const RunScore& score);

}  // namespace greenaug
