#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

namespace greenaug {

inline constexpr int kNumLabels = 9;

// One of the nine green waste practices, identified by its annotation code 1..9.
class LabelId {
 public:
  // Throws a schema error for codes outside 1..9.
  explicit LabelId(int code);

  static std::optional<LabelId> from_code(int code) noexcept;

  constexpr int code() const noexcept { return code_; }
  constexpr int index() const noexcept { return code_ - 1; }
  std::string_view name() const noexcept;

  friend constexpr auto operator<=>(LabelId, LabelId) = default;
  friend std::array<LabelId, kNumLabels> all_labels() noexcept;

 private:
  struct Unchecked {};
  constexpr LabelId(int code, Unchecked) noexcept : code_(code) {}
  int code_;
};

// All nine labels in ascending code order.
std::array<LabelId, kNumLabels> all_labels() noexcept;

// Set of labels stored as a 9-bit mask; iteration is in ascending code order.
class LabelSet {
 public:
  constexpr LabelSet() noexcept = default;
  LabelSet(std::initializer_list<int> codes);

  static LabelSet from_mask(std::uint16_t mask);

  void insert(LabelId label) noexcept { mask_ |= bit(label); }
  void erase(LabelId label) noexcept {
    mask_ &= static_cast<std::uint16_t>(~bit(label));
  }
  bool contains(LabelId label) const noexcept { return (mask_ & bit(label)) != 0; }
  bool empty() const noexcept { return mask_ == 0; }
  int size() const noexcept;
  std::uint16_t mask() const noexcept { return mask_; }

  std::vector<LabelId> labels() const;
  std::vector<int> codes() const;

  friend constexpr bool operator==(LabelSet, LabelSet) = default;

 private:
  static constexpr std::uint16_t bit(LabelId label) noexcept {
    return static_cast<std::uint16_t>(1u << label.index());
  }
  std::uint16_t mask_ = 0;
};

}  // namespace greenaug
