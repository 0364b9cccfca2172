#pragma once

// Data-parallel f64 kernels behind BERTScore's greedy cosine matching.
// A scalar reference implementation is always present; SIMD variants are
// compiled per architecture and chosen at runtime from CPU features.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace greenaug::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum_squares)(const double* a, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

// Instruction sets compiled in and supported by this CPU, scalar first.
std::vector<Isa> available_isas();

// Throws std::invalid_argument if the ISA is not available.
const KernelTable& table_for(Isa isa);

// Best available table, unless GREENAUG_SIMD=scalar|avx2|neon selects one.
const KernelTable& active_table();

// For the row-major unit-norm matrices `rows_a` (n x dim) and `rows_b`
// (m x dim), writes max_j <a_i, b_j> to row_max[i] and max_i <a_i, b_j> to
// col_max[j].
void greedy_match(const KernelTable& table, std::span<const double> rows_a, std::size_t n,
                  std::span<const double> rows_b, std::size_t m, std::size_t dim,
                  std::span<double> row_max, std::span<double> col_max);

}  // namespace greenaug::kernels
