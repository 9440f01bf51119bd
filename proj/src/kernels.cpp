#include "scl/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace scl::kernels {

#if defined(SCL_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
const KernelOps* avx2_ops_impl();
#endif
#if defined(__aarch64__)
const KernelOps* neon_ops_impl();
#endif

const KernelOps* avx2() {
#if defined(SCL_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return avx2_ops_impl();
    }
#endif
    return nullptr;
}

const KernelOps* neon() {
#if defined(__aarch64__)
    return neon_ops_impl();
#else
    return nullptr;
#endif
}

namespace {

const KernelOps& select() {
    if (const char* force = std::getenv("SCL_KERNELS")) {
        if (std::strcmp(force, "scalar") == 0) return scalar();
        if (std::strcmp(force, "avx2") == 0 && avx2()) return *avx2();
        if (std::strcmp(force, "neon") == 0 && neon()) return *neon();
        // Unknown or unavailable request: fall through to auto-detect.
    }
    if (const KernelOps* v = avx2()) return *v;
    if (const KernelOps* v = neon()) return *v;
    return scalar();
}

} // namespace

const KernelOps& active() {
    static const KernelOps& chosen = select();
    return chosen;
}

} // namespace scl::kernels
