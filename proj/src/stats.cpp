#include "greenaug/stats.hpp"

#include <cmath>
#include <map>
#include <span>
#include <vector>

#include "greenaug/text.hpp"

namespace greenaug {
namespace {

std::optional<MeanStd> mean_std(std::span<const double> values) {
  if (values.empty()) return std::nullopt;
  double sum = 0.0;
  for (double v : values) sum += v;
  MeanStd out;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return out;
}

}  // namespace

LabelStats compute_stats(const Dataset& dataset) {
  LabelStats stats;
  stats.sentence_count = dataset.size();

  std::vector<double> sentence_chars;
  sentence_chars.reserve(dataset.size());
  // Ordered by post id so the accumulation order does not depend on hashing.
  std::map<std::string, double> post_chars;

  for (const auto& record : dataset.records()) {
    const auto chars = static_cast<double>(count_code_points(record.text));
    sentence_chars.push_back(chars);
    post_chars[record.post_id] += chars;

    const auto labels = record.labels.labels();
    for (LabelId a : labels) {
      ++stats.mentions_per_label[a.index()];
      for (LabelId b : labels) ++stats.cooccurrence[a.index()][b.index()];
    }
  }

  stats.post_count = post_chars.size();
  std::vector<double> per_post;
  per_post.reserve(post_chars.size());
  for (const auto& [post, chars] : post_chars) per_post.push_back(chars);

  stats.chars_per_sentence = mean_std(sentence_chars);
  stats.chars_per_post = mean_std(per_post);
  return stats;
}

std::string label_counts_csv(const LabelStats& stats) {
  std::string out = "code,label,mentions\n";
  for (LabelId label : all_labels()) {
    out += std::to_string(label.code());
    out += ',';
    out += label.name();
    out += ',';
    out += std::to_string(stats.mentions(label));
    out += '\n';
  }
  return out;
}

std::string cooccurrence_csv(const LabelStats& stats) {
  std::string out = "code";
  for (LabelId label : all_labels()) out += "," + std::to_string(label.code());
  out += '\n';
  for (LabelId row : all_labels()) {
    out += std::to_string(row.code());
    for (LabelId col : all_labels()) {
      out += ',';
      out += std::to_string(stats.cooccurrence[row.index()][col.index()]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace greenaug
