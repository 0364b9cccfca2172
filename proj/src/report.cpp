#include "greenaug/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <json.hpp>
#include <sstream>

#include "greenaug/error.hpp"
#include "greenaug/strategy.hpp"

namespace greenaug {
namespace {

int strategy_rank(std::string_view strategy) {
  if (strategy == "original") return 0;
  if (auto parsed = parse_strategy(strategy)) {
    switch (*parsed) {
      case PromptStrategy::kDuplicate: return 1;
      case PromptStrategy::kBackTranslate: return 2;
      case PromptStrategy::kPText: return 3;
      case PromptStrategy::kGTopics: return 4;
      case PromptStrategy::kPTextTopics: return 5;
      case PromptStrategy::kGTopicsText: return 6;
    }
  }
  return 7;
}

std::string format_factor(const std::optional<double>& factor) {
  if (!factor) return "";
  std::ostringstream out;
  out << *factor;
  return out.str();
}

std::string format_growth(const std::optional<double>& g) {
  if (!g) return "";
  const std::string digits = format_fixed2(*g);
  return digits.front() == '-' ? digits : "+" + digits;
}

}  // namespace

MeanStd aggregate_runs(std::span<const double> scores) {
  if (scores.empty()) fail(ErrorCategory::kUsage, "cannot aggregate an empty list of run scores");
  double sum = 0.0;
  for (double s : scores) sum += s;
  MeanStd out;
  out.mean = sum / static_cast<double>(scores.size());
  if (scores.size() > 1) {
    double sq = 0.0;
    for (double s : scores) sq += (s - out.mean) * (s - out.mean);
    out.std = std::sqrt(sq / static_cast<double>(scores.size() - 1));
  }
  return out;
}

double growth(double baseline_mean, double augmented_mean) {
  if (!(baseline_mean > 0.0)) fail(ErrorCategory::kDomain, "growth baseline must be positive");
  return 100.0 * (augmented_mean - baseline_mean) / baseline_mean;
}

std::string format_fixed2(double value) {
  // The nudge keeps decimal ties such as 0.125 (stored as 0.12499...) rounding up.
  const double scaled = std::floor(std::fabs(value) * 100.0 + 0.5 + 1e-7);
  const auto cents = static_cast<long long>(scaled);
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%s%lld.%02lld", (value < 0 && cents != 0) ? "-" : "",
                cents / 100, cents % 100);
  return buffer;
}

std::string format_mean_std(const MeanStd& value) {
  return format_fixed2(value.mean) + "±" + format_fixed2(value.std);
}

RunConfig RunConfig::parse(std::string_view label) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto slash = label.find('/', start);
    parts.emplace_back(label.substr(start, slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (parts.size() < 2 || parts.size() > 3 || parts[0].empty() || parts[1].empty()) {
    fail(ErrorCategory::kSchema, "config label must be classifier/strategy[/factor]: " + std::string(label));
  }
  RunConfig out{parts[0], parts[1], std::nullopt};
  if (parts.size() == 3) {
    std::string factor = parts[2];
    if (!factor.empty() && (factor.front() == 'x' || factor.front() == 'X')) factor.erase(0, 1);
    try {
      std::size_t used = 0;
      out.factor = std::stod(factor, &used);
      if (used != factor.size()) throw std::invalid_argument(factor);
    } catch (const std::exception&) {
      fail(ErrorCategory::kSchema, "bad growth factor in config label: " + std::string(label));
    }
  }
  return out;
}

std::string RunConfig::label() const {
  std::string out = classifier + "/" + strategy;
  if (factor) out += "/" + format_factor(factor);
  return out;
}

std::vector<RunReport> build_reports(std::span<const RunScore> runs,
                                     std::string_view baseline_strategy) {
  std::vector<RunReport> reports;
  for (const auto& run : runs) {
    const RunConfig config = RunConfig::parse(run.config);
    auto it = std::find_if(reports.begin(), reports.end(),
                           [&](const RunReport& r) { return r.config == config; });
    if (it == reports.end()) {
      reports.push_back({config, {}, {}, std::nullopt});
      it = std::prev(reports.end());
    }
    it->run_scores.push_back(run.f1_percent);
  }
  for (auto& report : reports) report.summary = aggregate_runs(report.run_scores);

  for (auto& report : reports) {
    if (report.config.strategy == baseline_strategy) continue;
    auto base = std::find_if(reports.begin(), reports.end(), [&](const RunReport& r) {
      return r.config.classifier == report.config.classifier &&
             r.config.strategy == baseline_strategy;
    });
    if (base != reports.end()) report.growth_pct = growth(base->summary.mean, report.summary.mean);
  }
  sort_reports(reports);
  return reports;
}

void sort_reports(std::vector<RunReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const RunReport& a, const RunReport& b) {
    if (a.config.classifier != b.config.classifier) return a.config.classifier < b.config.classifier;
    const int ra = strategy_rank(a.config.strategy);
    const int rb = strategy_rank(b.config.strategy);
    if (ra != rb) return ra < rb;
    if (a.config.strategy != b.config.strategy) return a.config.strategy < b.config.strategy;
    return a.config.factor.value_or(0.0) < b.config.factor.value_or(0.0);
  });
}

std::string render_tables(std::vector<RunReport> reports, TableFormat format) {
  sort_reports(reports);
  std::string out;
  if (format == TableFormat::kMarkdown) {
    out += "| Classifier | Strategy | Factor | Runs | F1, % | Growth, % |\n";
    out += "|---|---|---|---|---|---|\n";
    for (const auto& r : reports) {
      out += "| " + r.config.classifier + " | " + r.config.strategy + " | " +
             format_factor(r.config.factor) + " | " + std::to_string(r.run_scores.size()) + " | " +
             format_mean_std(r.summary) + " | " + format_growth(r.growth_pct) + " |\n";
    }
  } else {
    out += "classifier,strategy,factor,runs,f1,growth_pct\n";
    for (const auto& r : reports) {
      out += r.config.classifier + "," + r.config.strategy + "," + format_factor(r.config.factor) +
             "," + std::to_string(r.run_scores.size()) + "," + format_mean_std(r.summary) + "," +
             format_growth(r.growth_pct) + "\n";
    }
  }
  return out;
}

std::string render_growth_csv(std::vector<RunReport> reports) {
  sort_reports(reports);
  std::string out = "classifier,strategy,factor,growth_pct\n";
  for (const auto& r : reports) {
    if (!r.growth_pct) continue;
    out += r.config.classifier + "," + r.config.strategy + "," + format_factor(r.config.factor) +
           "," + format_growth(r.growth_pct) + "\n";
  }
  return out;
}

std::vector<RunScore> load_run_scores(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    fail(ErrorCategory::kIo, "runs directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<RunScore> out;
  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) fail(ErrorCategory::kIo, "cannot read " + file.string());
    try {
      const auto j = nlohmann::json::parse(in);
      out.push_back({j.at("config").get<std::string>(), j.at("f1_percent").get<double>()});
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCategory::kSchema, file.string() + ": " + e.what());
    }
  }
  return out;
}

std::string run_score_json(const RunScore& score) {
  nlohmann::ordered_json j;
  j["config"] = score.config;
  j["f1_percent"] = score.f1_percent;
  return j.dump() + "\n";
}

}  // namespace greenaug
