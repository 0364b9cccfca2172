#include "greenaug/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <json.hpp>
#include <sstream>
#include <unordered_map>

#include "greenaug/error.hpp"

namespace greenaug {
namespace {

double ratio(std::size_t numerator, std::size_t denominator) {
  return denominator == 0 ? 0.0 : static_cast<double>(numerator) / static_cast<double>(denominator);
}

// Packs vectors row-major, scaled to unit norm.
std::vector<double> normalized_rows(const TokenEmbeddings& e, const kernels::KernelTable& k) {
  const std::size_t dim = e.dim();
  std::vector<double> out;
  out.reserve(e.vectors.size() * dim);
  for (std::size_t i = 0; i < e.vectors.size(); ++i) {
    const auto& v = e.vectors[i];
    const double norm = std::sqrt(k.sum_squares(v.data(), v.size()));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      fail(ErrorCategory::kNumeric, "embedding for token \"" + e.tokens[i] + "\" has zero or non-finite norm");
    }
    for (double x : v) out.push_back(x / norm);
  }
  return out;
}

double clamped_mean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += std::clamp(v, 0.0, 1.0);
  return sum / static_cast<double>(values.size());
}

}  // namespace

ScoreTriple ScoreTriple::from_pr(double precision, double recall) noexcept {
  const double denom = precision + recall;
  return {precision, recall, denom > 0.0 ? 2.0 * precision * recall / denom : 0.0};
}

ScoreTriple rouge1(std::span<const std::string> candidate, std::span<const std::string> reference) {
  std::unordered_map<std::string_view, std::size_t> reference_counts;
  for (const auto& token : reference) ++reference_counts[token];
  std::size_t overlap = 0;
  for (const auto& token : candidate) {
    auto it = reference_counts.find(token);
    if (it != reference_counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  return ScoreTriple::from_pr(ratio(overlap, candidate.size()), ratio(overlap, reference.size()));
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> previous(b.size() + 1, 0);
  std::vector<std::size_t> current(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      current[j] = a[i - 1] == b[j - 1] ? previous[j - 1] + 1 : std::max(previous[j], current[j - 1]);
    }
    std::swap(previous, current);
  }
  return previous[b.size()];
}

ScoreTriple rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference) {
  const std::size_t lcs = lcs_length(candidate, reference);
  return ScoreTriple::from_pr(ratio(lcs, candidate.size()), ratio(lcs, reference.size()));
}

void TokenEmbeddings::validate() const {
  if (tokens.empty()) fail(ErrorCategory::kSchema, "token embeddings must contain at least one token");
  if (tokens.size() != vectors.size()) {
    fail(ErrorCategory::kSchema, "token and vector counts differ");
  }
  const std::size_t d = dim();
  if (d == 0) fail(ErrorCategory::kSchema, "embedding dimension must be positive");
  for (const auto& v : vectors) {
    if (v.size() != d) fail(ErrorCategory::kSchema, "embedding vectors differ in dimension");
  }
}

ScoreTriple bertscore(const TokenEmbeddings& candidate, const TokenEmbeddings& reference) {
  return bertscore(candidate, reference, kernels::active_table());
}

ScoreTriple bertscore(const TokenEmbeddings& candidate, const TokenEmbeddings& reference,
                      const kernels::KernelTable& k) {
  candidate.validate();
  reference.validate();
  if (candidate.dim() != reference.dim()) {
    fail(ErrorCategory::kUsage, "candidate and reference embeddings differ in dimension");
  }
  const auto a = normalized_rows(candidate, k);
  const auto b = normalized_rows(reference, k);
  std::vector<double> best_for_candidate(candidate.tokens.size());
  std::vector<double> best_for_reference(reference.tokens.size());
  kernels::greedy_match(k, a, candidate.tokens.size(), b, reference.tokens.size(), candidate.dim(),
                        best_for_candidate, best_for_reference);
  return ScoreTriple::from_pr(clamped_mean(best_for_candidate), clamped_mean(best_for_reference));
}

LabelMatrix::LabelMatrix(std::size_t rows, std::size_t classes)
    : rows_(rows), classes_(classes), cells_(rows * classes, 0) {}

LabelMatrix LabelMatrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t classes) {
  LabelMatrix m(rows.size(), classes);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != classes) {
      fail(ErrorCategory::kUsage, "label matrix row " + std::to_string(r) + " has wrong width");
    }
    for (std::size_t c = 0; c < classes; ++c) {
      const int v = rows[r][c];
      if (v != 0 && v != 1) fail(ErrorCategory::kUsage, "label matrix entries must be 0 or 1");
      m.set(r, c, v == 1);
    }
  }
  return m;
}

LabelMatrix LabelMatrix::from_label_sets(std::span<const LabelSet> rows) {
  LabelMatrix m(rows.size(), kNumLabels);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (LabelId label : rows[r].labels()) m.set(r, static_cast<std::size_t>(label.index()), true);
  }
  return m;
}

void LabelMatrix::set(std::size_t row, std::size_t cls, bool value) {
  cells_.at(row * classes_ + cls) = value ? 1 : 0;
}

LabelMatrix gold_matrix(const Dataset& dataset) {
  std::vector<LabelSet> rows;
  rows.reserve(dataset.size());
  for (const auto& record : dataset.records()) rows.push_back(record.labels);
  return LabelMatrix::from_label_sets(rows);
}

MultiLabelF1 multilabel_f1(const LabelMatrix& gold, const LabelMatrix& predicted) {
  if (gold.rows() != predicted.rows() || gold.classes() != predicted.classes()) {
    fail(ErrorCategory::kUsage, "gold and predicted label matrices differ in shape");
  }
  if (gold.classes() == 0) fail(ErrorCategory::kUsage, "label matrices have no classes");
  MultiLabelF1 out;
  out.per_class.reserve(gold.classes());
  double sum = 0.0;
  for (std::size_t c = 0; c < gold.classes(); ++c) {
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t r = 0; r < gold.rows(); ++r) {
      const bool g = gold.at(r, c);
      const bool p = predicted.at(r, c);
      tp += g && p;
      fp += !g && p;
      fn += g && !p;
    }
    const auto score = ScoreTriple::from_pr(ratio(tp, tp + fp), ratio(tp, tp + fn));
    out.per_class.push_back(score);
    sum += score.f1;
  }
  out.macro_f1 = sum / static_cast<double>(gold.classes());
  return out;
}

LabelMatrix parse_predictions(std::string_view contents, const Dataset& test) {
  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < test.size(); ++i) position.emplace(test[i].id, i);

  LabelMatrix m(test.size(), kNumLabels);
  std::vector<bool> seen(test.size(), false);
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t end = contents.find('\n', pos);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const std::string where = "prediction line " + std::to_string(line_number) + ": ";
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorCategory::kParse, where + e.what());
    }
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string() || !j.contains("labels") ||
        !j["labels"].is_array()) {
      fail(ErrorCategory::kSchema, where + "expected {\"id\": str, \"labels\": [int]}");
    }
    const std::string id = j["id"].get<std::string>();
    auto it = position.find(id);
    if (it == position.end()) fail(ErrorCategory::kIntegrity, where + "id " + id + " is not in the test set");
    if (seen[it->second]) fail(ErrorCategory::kIntegrity, where + "id " + id + " predicted twice");
    seen[it->second] = true;
    for (const auto& value : j["labels"]) {
      if (!value.is_number_integer()) fail(ErrorCategory::kSchema, where + "label codes must be integers");
      const auto code = value.get<std::int64_t>();
      const auto label = LabelId::from_code(code >= 1 && code <= kNumLabels ? static_cast<int>(code) : 0);
      if (!label) fail(ErrorCategory::kSchema, where + "unknown label code " + std::to_string(code));
      m.set(it->second, static_cast<std::size_t>(label->index()), true);
    }
  }
  for (std::size_t i = 0; i < test.size(); ++i) {
    if (!seen[i]) fail(ErrorCategory::kIntegrity, "no prediction for test id " + test[i].id);
  }
  return m;
}

LabelMatrix load_predictions(const std::filesystem::path& path, const Dataset& test) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCategory::kIo, "cannot open predictions " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_predictions(buffer.str(), test);
}

}  // namespace greenaug
