#include "elemgen/kernels.hpp"

namespace elemgen::kernels {

namespace {

const Ops* detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) return &avx2_ops();
#elif defined(__aarch64__)
    return &neon_ops();
#endif
    return &scalar_ops();
}

const Ops* g_forced = nullptr;

}  // namespace

const Ops& active_ops() {
    if (g_forced) return *g_forced;
    static const Ops* best = detect();
    return *best;
}

void force_ops(const Ops* ops) { g_forced = ops; }

std::vector<const Ops*> supported_ops() {
    std::vector<const Ops*> v{&scalar_ops()};
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) v.push_back(&avx2_ops());
#elif defined(__aarch64__)
    v.push_back(&neon_ops());
#endif
    return v;
}

}  // namespace elemgen::kernels
