#include "greenaug/dataset.hpp"

#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "greenaug/error.hpp"

namespace greenaug {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCategory::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorCategory::kIo, "read failed: " + path.string());
  return buffer.str();
}

const nlohmann::json& require(const nlohmann::json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    fail(ErrorCategory::kSchema, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string require_string(const nlohmann::json& object, const char* key) {
  const auto& value = require(object, key);
  if (!value.is_string()) {
    fail(ErrorCategory::kSchema, std::string("field \"") + key + "\" must be a string");
  }
  return value.get<std::string>();
}

}  // namespace

std::string_view split_name(Split split) noexcept {
  return split == Split::kTrain ? "train" : "test";
}

void Dataset::append(SentenceRecord record) {
  if (record.text.empty()) {
    fail(ErrorCategory::kIntegrity, "record " + record.id + " has empty text");
  }
  auto [it, inserted] = index_.emplace(record.id, records_.size());
  if (!inserted) fail(ErrorCategory::kIntegrity, "duplicate record id " + record.id);
  records_.push_back(std::move(record));
}

const SentenceRecord* Dataset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &records_[it->second];
}

void Dataset::validate_provenance() const {
  for (const auto& record : records_) {
    const auto* augmented = std::get_if<AugmentedOrigin>(&record.origin);
    if (augmented == nullptr) continue;
    const SentenceRecord* source = find(augmented->source_id);
    if (source == nullptr || !source->is_original()) {
      fail(ErrorCategory::kIntegrity, "record " + record.id +
                                          " references missing original " +
                                          augmented->source_id);
    }
    if (source->labels != record.labels) {
      fail(ErrorCategory::kIntegrity,
           "record " + record.id + " labels differ from source " + source->id);
    }
  }
}

std::string record_to_json_line(const SentenceRecord& record) {
  ordered_json j;
  j["id"] = record.id;
  j["post_id"] = record.post_id;
  j["text"] = record.text;
  j["labels"] = record.labels.codes();
  ordered_json origin;
  if (const auto* augmented = std::get_if<AugmentedOrigin>(&record.origin)) {
    origin["kind"] = "augmented";
    origin["strategy"] = std::string(strategy_name(augmented->strategy));
    origin["source_id"] = augmented->source_id;
  } else {
    origin["kind"] = "original";
  }
  j["origin"] = std::move(origin);
  return j.dump();
}

SentenceRecord record_from_json_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCategory::kParse, e.what());
  }
  if (!j.is_object()) fail(ErrorCategory::kParse, "record is not a JSON object");

  SentenceRecord record;
  record.id = require_string(j, "id");
  record.post_id = require_string(j, "post_id");
  record.text = require_string(j, "text");
  if (record.id.empty()) fail(ErrorCategory::kSchema, "empty record id");
  if (record.text.empty()) fail(ErrorCategory::kSchema, "empty text");

  const auto& labels = require(j, "labels");
  if (!labels.is_array()) fail(ErrorCategory::kSchema, "\"labels\" must be an array");
  for (const auto& value : labels) {
    if (!value.is_number_integer()) {
      fail(ErrorCategory::kSchema, "label codes must be integers");
    }
    const auto code = value.get<std::int64_t>();
    if (code < 1 || code > kNumLabels) {
      fail(ErrorCategory::kSchema, "unknown label code " + std::to_string(code));
    }
    const LabelId label(static_cast<int>(code));
    if (record.labels.contains(label)) {
      fail(ErrorCategory::kSchema, "repeated label code " + std::to_string(label.code()));
    }
    record.labels.insert(label);
  }

  const auto& origin = require(j, "origin");
  if (!origin.is_object()) fail(ErrorCategory::kSchema, "\"origin\" must be an object");
  const std::string kind = require_string(origin, "kind");
  if (kind == "original") {
    record.origin = OriginalOrigin{};
  } else if (kind == "augmented") {
    const std::string name = require_string(origin, "strategy");
    const auto strategy = parse_strategy(name);
    if (!strategy) fail(ErrorCategory::kSchema, "unknown strategy \"" + name + "\"");
    record.origin = AugmentedOrigin{*strategy, require_string(origin, "source_id")};
  } else {
    fail(ErrorCategory::kSchema, "unknown origin kind \"" + kind + "\"");
  }
  return record;
}

Dataset parse_dataset(std::string_view contents, Split split) {
  Dataset dataset(split);
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
    try {
      dataset.append(record_from_json_line(line));
    } catch (const Error& e) {
      throw Error(e.category(), "line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  dataset.validate_provenance();
  return dataset;
}

Dataset load_dataset(const std::filesystem::path& path, Split split) {
  try {
    return parse_dataset(read_file(path), split);
  } catch (const Error& e) {
    if (e.category() == ErrorCategory::kIo) throw;
    throw Error(e.category(), path.string() + ": " + e.what());
  }
}

std::string serialize_dataset(const Dataset& dataset) {
  std::string out;
  for (const auto& record : dataset.records()) {
    out += record_to_json_line(record);
    out += '\n';
  }
  return out;
}

void write_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  const std::string contents = serialize_dataset(dataset);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCategory::kIo, "cannot open for writing: " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) fail(ErrorCategory::kIo, "write failed: " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(ErrorCategory::kIo, "cannot write " + path.string());
  }
}

}  // namespace greenaug
