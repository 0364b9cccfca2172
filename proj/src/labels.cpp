#include "greenaug/labels.hpp"

#include <bit>
#include <string>

#include "greenaug/error.hpp"

namespace greenaug {
namespace {

constexpr std::array<std::string_view, kNumLabels> kLabelNames = {
    "waste sorting",
    "studying the product labeling",
    "waste recycling",
    "signing petitions",
    "refusing purchases",
    "exchanging",
    "sharing",
    "participating in actions to promote responsible consumption",
    "repairing",
};

constexpr std::uint16_t kFullMask = (1u << kNumLabels) - 1;

}  // namespace

LabelId::LabelId(int code) : code_(code) {
  if (code < 1 || code > kNumLabels) {
    fail(ErrorCategory::kSchema, "unknown label code " + std::to_string(code));
  }
}

std::optional<LabelId> LabelId::from_code(int code) noexcept {
  if (code < 1 || code > kNumLabels) return std::nullopt;
  return LabelId(code, Unchecked{});
}

std::string_view LabelId::name() const noexcept { return kLabelNames[index()]; }

std::array<LabelId, kNumLabels> all_labels() noexcept {
  return {LabelId(1, {}), LabelId(2, {}), LabelId(3, {}),
          LabelId(4, {}), LabelId(5, {}), LabelId(6, {}),
          LabelId(7, {}), LabelId(8, {}), LabelId(9, {})};
}

LabelSet::LabelSet(std::initializer_list<int> codes) {
  for (int code : codes) insert(LabelId(code));
}

LabelSet LabelSet::from_mask(std::uint16_t mask) {
  if ((mask & ~kFullMask) != 0) {
    fail(ErrorCategory::kSchema, "label mask has bits outside 1..9");
  }
  LabelSet set;
  set.mask_ = mask;
  return set;
}

int LabelSet::size() const noexcept { return std::popcount(mask_); }

std::vector<LabelId> LabelSet::labels() const {
  std::vector<LabelId> out;
  for (LabelId label : all_labels()) {
    if (contains(label)) out.push_back(label);
  }
  return out;
}

std::vector<int> LabelSet::codes() const {
  std::vector<int> out;
  for (LabelId label : labels()) out.push_back(label.code());
  return out;
}

}  // namespace greenaug
