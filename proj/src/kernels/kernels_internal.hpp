#pragma once

#include "ductwave/kernels.hpp"

namespace ductwave::kernels {

#ifdef DUCTWAVE_HAVE_AVX2
const Ops& avx2_ops();
#endif

} // namespace ductwave::kernels
