#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "greenaug/dataset.hpp"
#include "greenaug/kernels/kernels.hpp"
#include "greenaug/text.hpp"

namespace greenaug {

struct ScoreTriple {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  // f1 = 2PR/(P+R), or 0 when P+R = 0.
  static ScoreTriple from_pr(double precision, double recall) noexcept;
};

// Clipped unigram multiset overlap. A ratio whose denominator is empty is 0.
ScoreTriple rouge1(std::span<const std::string> candidate, std::span<const std::string> reference);

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

ScoreTriple rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference);

struct TokenEmbeddings {
  std::vector<std::string> tokens;
  std::vector<std::vector<double>> vectors;

  std::size_t dim() const noexcept { return vectors.empty() ? 0 : vectors.front().size(); }

  // Throws a schema error unless tokens and vectors are non-empty, of equal
  // count, with one shared positive dimension.
  void validate() const;
};

// Greedy cosine matching without IDF weighting or baseline rescaling:
// precision averages each candidate token's best match, recall each
// reference token's. Per-token maxima are clamped to [0, 1].
// Zero-norm vectors are a numeric error; differing dimensions a usage error.
ScoreTriple bertscore(const TokenEmbeddings& candidate, const TokenEmbeddings& reference);
ScoreTriple bertscore(const TokenEmbeddings& candidate, const TokenEmbeddings& reference,
                      const kernels::KernelTable& kernels);

// Row-major binary matrix: one row per sentence, one column per class.
class LabelMatrix {
 public:
  LabelMatrix(std::size_t rows, std::size_t classes);

  // Every entry must be 0 or 1 and every row `classes` wide.
  static LabelMatrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t classes);
  static LabelMatrix from_label_sets(std::span<const LabelSet> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t classes() const noexcept { return classes_; }
  bool at(std::size_t row, std::size_t cls) const { return cells_[row * classes_ + cls] != 0; }
  void set(std::size_t row, std::size_t cls, bool value);

 private:
  std::size_t rows_;
  std::size_t classes_;
  std::vector<std::uint8_t> cells_;
};

// Gold labels of a dataset in record order, nine columns.
LabelMatrix gold_matrix(const Dataset& dataset);

struct MultiLabelF1 {
  std::vector<ScoreTriple> per_class;  // index = column (label code - 1)
  double macro_f1 = 0.0;
};

// Per-column P/R/F; macro_f1 is their unweighted mean. Columns without
// gold or predicted positives contribute F1 = 0. Shape mismatch is a usage error.
MultiLabelF1 multilabel_f1(const LabelMatrix& gold, const LabelMatrix& predicted);

// Reads `{"id": str, "labels": [int]}` lines and aligns them to the test
// records by id. Missing, repeated, or unknown ids are integrity errors.
LabelMatrix load_predictions(const std::filesystem::path& path, const Dataset& test);
LabelMatrix parse_predictions(std::string_view contents, const Dataset& test);

}  // namespace greenaug
