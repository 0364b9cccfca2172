#pragma once

#include "greenaug/kernels/kernels.hpp"

namespace greenaug::kernels::detail {

const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;

}  // namespace greenaug::kernels::detail
