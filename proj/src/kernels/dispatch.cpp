#include "kernels_internal.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace ductwave::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(DUCTWAVE_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops* pick_default() {
    if (const char* env = std::getenv("DUCTWAVE_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
#ifdef DUCTWAVE_HAVE_AVX2
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return &avx2_ops();
#endif
    }
#ifdef DUCTWAVE_HAVE_AVX2
    if (cpu_has_avx2()) return &avx2_ops();
#endif
    return &scalar_ops();
}

std::atomic<const Ops*>& active_slot() {
    static std::atomic<const Ops*> slot{pick_default()};
    return slot;
}

} // namespace

const Ops& ops() { return *active_slot().load(std::memory_order_relaxed); }

void force_backend(Backend b) {
    switch (b) {
    case Backend::automatic:
        active_slot().store(pick_default(), std::memory_order_relaxed);
        return;
    case Backend::scalar:
        active_slot().store(&scalar_ops(), std::memory_order_relaxed);
        return;
    case Backend::avx2:
#ifdef DUCTWAVE_HAVE_AVX2
        if (cpu_has_avx2()) {
            active_slot().store(&avx2_ops(), std::memory_order_relaxed);
            return;
        }
#endif
        throw std::runtime_error("avx2 kernels are not available on this machine");
    }
}

bool avx2_available() { return cpu_has_avx2(); }

std::string active_backend_name() { return ops().name; }

} // namespace ductwave::kernels
