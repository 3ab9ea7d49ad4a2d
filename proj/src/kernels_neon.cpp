#if defined(__aarch64__)

#include <arm_neon.h>

#include "elemgen/kernels.hpp"

namespace elemgen::kernels {

namespace {

inline uint32x4_t cond_sub(uint32x4_t t, uint32x4_t vp) {
    uint32x4_t ge = vcgeq_u32(t, vp);
    return vsubq_u32(t, vandq_u32(ge, vp));
}

void add_mod_neon(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p) {
    uint32x4_t vp = vdupq_n_u32(p);
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        vst1q_u32(dst + i, cond_sub(vaddq_u32(vld1q_u32(a + i), vld1q_u32(b + i)), vp));
    for (; i < n; ++i) {
        uint32_t t = a[i] + b[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void sub_mod_neon(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p) {
    uint32x4_t vp = vdupq_n_u32(p);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t t = vsubq_u32(vaddq_u32(vld1q_u32(a + i), vp), vld1q_u32(b + i));
        vst1q_u32(dst + i, cond_sub(t, vp));
    }
    for (; i < n; ++i) {
        uint32_t t = a[i] + p - b[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void neg_mod_neon(uint32_t* dst, const uint32_t* a, size_t n, uint32_t p) {
    uint32x4_t vp = vdupq_n_u32(p);
    uint32x4_t zero = vdupq_n_u32(0);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t va = vld1q_u32(a + i);
        uint32x4_t t = vsubq_u32(vp, va);
        vst1q_u32(dst + i, vbicq_u32(t, vceqq_u32(va, zero)));
    }
    for (; i < n; ++i) dst[i] = a[i] == 0 ? 0 : p - a[i];
}

void scale_mod_ref(uint32_t* dst, const uint32_t* a, size_t n, uint32_t s, uint32_t p) {
    for (size_t i = 0; i < n; ++i) dst[i] = uint32_t((uint64_t(s) * a[i]) % p);
}

void submul_mod_ref(uint32_t* r, const uint32_t* g, size_t n, uint32_t t, uint32_t p) {
    uint32_t tn = t == 0 ? 0 : p - t;
    for (size_t i = 0; i < n; ++i) r[i] = uint32_t((r[i] + uint64_t(tn) * g[i]) % p);
}

void axpy64_neon(uint64_t* acc, const uint32_t* a, size_t n, uint32_t s) {
    uint32x2_t vs = vdup_n_u32(s);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t va = vld1q_u32(a + i);
        uint64x2_t lo = vaddq_u64(vld1q_u64(acc + i), vmull_u32(vget_low_u32(va), vs));
        uint64x2_t hi = vaddq_u64(vld1q_u64(acc + i + 2), vmull_u32(vget_high_u32(va), vs));
        vst1q_u64(acc + i, lo);
        vst1q_u64(acc + i + 2, hi);
    }
    for (; i < n; ++i) acc[i] += uint64_t(s) * a[i];
}

const Ops kNeon = {
    "neon", add_mod_neon, sub_mod_neon, neg_mod_neon,
    scale_mod_ref, submul_mod_ref, axpy64_neon,
};

}  // namespace

const Ops& neon_ops() { return kNeon; }

}  // namespace elemgen::kernels

#endif  // aarch64
