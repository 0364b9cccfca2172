#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "greenaug/dataset.hpp"
#include "greenaug/labels.hpp"

namespace greenaug {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample (n-1) estimator; 0 for a single observation
};

struct LabelStats {
  std::size_t sentence_count = 0;
  std::size_t post_count = 0;
  std::array<std::size_t, kNumLabels> mentions_per_label{};
  std::optional<MeanStd> chars_per_sentence;  // nullopt for an empty dataset
  std::optional<MeanStd> chars_per_post;
  // cooccurrence[i][j]: sentences carrying both labels i+1 and j+1.
  std::array<std::array<std::size_t, kNumLabels>, kNumLabels> cooccurrence{};

  std::size_t mentions(LabelId label) const { return mentions_per_label[label.index()]; }
};

LabelStats compute_stats(const Dataset& dataset);

// CSV `code,label,mentions` with one row per label.
std::string label_counts_csv(const LabelStats& stats);

// 9x9 CSV with a header row and a leading code column.
std::string cooccurrence_csv(const LabelStats& stats);

}  // namespace greenaug
