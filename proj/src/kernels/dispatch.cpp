#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace greenaug::kernels {
namespace detail {

#ifndef GREENAUG_HAVE_AVX2
const KernelTable* avx2_table() noexcept { return nullptr; }
#endif
#ifndef GREENAUG_HAVE_NEON
const KernelTable* neon_table() noexcept { return nullptr; }
#endif

}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if defined(GREENAUG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* lookup(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &scalar_table();
    case Isa::kAvx2:
      return cpu_has_avx2() ? detail::avx2_table() : nullptr;
    case Isa::kNeon:
      // Advanced SIMD is mandatory on AArch64.
      return detail::neon_table();
  }
  return nullptr;
}

const KernelTable& choose() {
  if (const char* forced = std::getenv("GREENAUG_SIMD")) {
    const std::string name(forced);
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (isa_name(isa) == name) {
        if (const auto* table = lookup(isa)) return *table;
      }
    }
  }
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (const auto* table = lookup(isa)) return *table;
  }
  return scalar_table();
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (lookup(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

const KernelTable& table_for(Isa isa) {
  const auto* table = lookup(isa);
  if (table == nullptr) {
    throw std::invalid_argument("kernel ISA not available: " + std::string(isa_name(isa)));
  }
  return *table;
}

const KernelTable& active_table() {
  static const KernelTable& table = choose();
  return table;
}

void greedy_match(const KernelTable& table, std::span<const double> rows_a, std::size_t n,
                  std::span<const double> rows_b, std::size_t m, std::size_t dim,
                  std::span<double> row_max, std::span<double> col_max) {
  if (rows_a.size() < n * dim || rows_b.size() < m * dim || row_max.size() < n ||
      col_max.size() < m) {
    throw std::invalid_argument("greedy_match: buffer sizes do not match dimensions");
  }
  constexpr double kLowest = -std::numeric_limits<double>::infinity();
  std::fill_n(row_max.begin(), n, kLowest);
  std::fill_n(col_max.begin(), m, kLowest);
  for (std::size_t i = 0; i < n; ++i) {
    const double* a = rows_a.data() + i * dim;
    for (std::size_t j = 0; j < m; ++j) {
      const double s = table.dot(a, rows_b.data() + j * dim, dim);
      row_max[i] = std::max(row_max[i], s);
      col_max[j] = std::max(col_max[j], s);
    }
  }
}

}  // namespace greenaug::kernels
