#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "greenaug/labels.hpp"
#include "greenaug/strategy.hpp"

namespace greenaug {

enum class Split { kTrain, kTest };

std::string_view split_name(Split split) noexcept;

struct OriginalOrigin {
  friend bool operator==(const OriginalOrigin&, const OriginalOrigin&) = default;
};

struct AugmentedOrigin {
  PromptStrategy strategy;
  std::string source_id;
  friend bool operator==(const AugmentedOrigin&, const AugmentedOrigin&) = default;
};

using Origin = std::variant<OriginalOrigin, AugmentedOrigin>;

struct SentenceRecord {
  std::string id;
  std::string post_id;
  std::string text;
  LabelSet labels;
  Origin origin = OriginalOrigin{};

  bool is_original() const noexcept {
    return std::holds_alternative<OriginalOrigin>(origin);
  }
  friend bool operator==(const SentenceRecord&, const SentenceRecord&) = default;
};

// Ordered and id-unique collection of sentence records. Each record is kept
// exactly once in insertion order.
class Dataset {
 public:
  explicit Dataset(Split split = Split::kTrain) : split_(split) {}

  Split split() const noexcept { return split_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  std::span<const SentenceRecord> records() const noexcept { return records_; }
  const SentenceRecord& operator[](std::size_t i) const { return records_[i]; }

  // Throws an integrity error if the id is already present or the text is empty.
  void append(SentenceRecord record);

  const SentenceRecord* find(std::string_view id) const;

  // Checks provenance: augmented records point at an existing original
  // record and carry its labels. Throws an integrity error otherwise.
  void validate_provenance() const;

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.split_ == b.split_ && a.records_ == b.records_;
  }

 private:
  Split split_;
  std::vector<SentenceRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

// One JSON object, no trailing newline; keys in schema order.
std::string record_to_json_line(const SentenceRecord& record);

// Parses one JSON line. Errors have no line context; the loader adds it.
SentenceRecord record_from_json_line(std::string_view line);

Dataset load_dataset(const std::filesystem::path& path, Split split);
Dataset parse_dataset(std::string_view contents, Split split);
std::string serialize_dataset(const Dataset& dataset);

// Writes the dataset atomically via a temporary sibling file.
void write_dataset(const Dataset& dataset, const std::filesystem::path& path);

}  // namespace greenaug
