#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "elemgen/kernels.hpp"

// Compiled with -mavx2 (see CMakeLists); only invoked after a runtime cpuid check.

namespace elemgen::kernels {

namespace {

inline __m256i cond_sub(__m256i t, __m256i vp) {
    // t in [0, 2p), p < 2^17: signed 32-bit compares are safe
    __m256i ge = _mm256_cmpgt_epi32(vp, t);  // p > t
    return _mm256_sub_epi32(t, _mm256_andnot_si256(ge, vp));
}

void add_mod_avx2(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p) {
    __m256i vp = _mm256_set1_epi32(int(p));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256((const __m256i*)(a + i));
        __m256i vb = _mm256_loadu_si256((const __m256i*)(b + i));
        _mm256_storeu_si256((__m256i*)(dst + i), cond_sub(_mm256_add_epi32(va, vb), vp));
    }
    for (; i < n; ++i) {
        uint32_t t = a[i] + b[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void sub_mod_avx2(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p) {
    __m256i vp = _mm256_set1_epi32(int(p));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256((const __m256i*)(a + i));
        __m256i vb = _mm256_loadu_si256((const __m256i*)(b + i));
        __m256i t = _mm256_sub_epi32(_mm256_add_epi32(va, vp), vb);
        _mm256_storeu_si256((__m256i*)(dst + i), cond_sub(t, vp));
    }
    for (; i < n; ++i) {
        uint32_t t = a[i] + p - b[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void neg_mod_avx2(uint32_t* dst, const uint32_t* a, size_t n, uint32_t p) {
    __m256i vp = _mm256_set1_epi32(int(p));
    __m256i zero = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256((const __m256i*)(a + i));
        __m256i t = _mm256_sub_epi32(vp, va);
        __m256i isz = _mm256_cmpeq_epi32(va, zero);
        _mm256_storeu_si256((__m256i*)(dst + i), _mm256_andnot_si256(isz, t));
    }
    for (; i < n; ++i) dst[i] = a[i] == 0 ? 0 : p - a[i];
}

// (x * s) mod p for 32-bit lanes, x, s < p < 2^16 so x*s < 2^32.
// Barrett with magic = floor(2^32/p): q underestimates by < 2, two fixups.
struct Barrett32 {
    __m256i vm, vp;
    explicit Barrett32(uint32_t p)
        : vm(_mm256_set1_epi32(int(uint32_t(~uint32_t(0) / p)))),
          vp(_mm256_set1_epi32(int(p))) {}
    inline __m256i reduce(__m256i x) const {
        // q = mulhi_u32(x, magic)
        __m256i pe = _mm256_srli_epi64(_mm256_mul_epu32(x, vm), 32);
        __m256i po = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), vm);
        __m256i q = _mm256_blend_epi32(pe, po, 0xAA);
        __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
        r = cond_sub(r, vp);
        return cond_sub(r, vp);
    }
};

void scale_mod_avx2(uint32_t* dst, const uint32_t* a, size_t n, uint32_t s, uint32_t p) {
    Barrett32 br(p);
    __m256i vs = _mm256_set1_epi32(int(s));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256((const __m256i*)(a + i));
        _mm256_storeu_si256((__m256i*)(dst + i), br.reduce(_mm256_mullo_epi32(va, vs)));
    }
    for (; i < n; ++i) dst[i] = uint32_t((uint64_t(s) * a[i]) % p);
}

void submul_mod_avx2(uint32_t* r, const uint32_t* g, size_t n, uint32_t t, uint32_t p) {
    uint32_t tn = t == 0 ? 0 : p - t;
    Barrett32 br(p);
    __m256i vt = _mm256_set1_epi32(int(tn));
    __m256i vp = _mm256_set1_epi32(int(p));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vg = _mm256_loadu_si256((const __m256i*)(g + i));
        __m256i vr = _mm256_loadu_si256((const __m256i*)(r + i));
        __m256i y = br.reduce(_mm256_mullo_epi32(vg, vt));
        _mm256_storeu_si256((__m256i*)(r + i), cond_sub(_mm256_add_epi32(vr, y), vp));
    }
    for (; i < n; ++i) r[i] = uint32_t((r[i] + uint64_t(tn) * g[i]) % p);
}

void axpy64_avx2(uint64_t* acc, const uint32_t* a, size_t n, uint32_t s) {
    __m256i vs = _mm256_set1_epi64x(int64_t(uint64_t(s)));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m128i lo = _mm_loadu_si128((const __m128i*)(a + i));
        __m128i hi = _mm_loadu_si128((const __m128i*)(a + i + 4));
        __m256i wlo = _mm256_cvtepu32_epi64(lo);
        __m256i whi = _mm256_cvtepu32_epi64(hi);
        __m256i alo = _mm256_loadu_si256((const __m256i*)(acc + i));
        __m256i ahi = _mm256_loadu_si256((const __m256i*)(acc + i + 4));
        alo = _mm256_add_epi64(alo, _mm256_mul_epu32(wlo, vs));
        ahi = _mm256_add_epi64(ahi, _mm256_mul_epu32(whi, vs));
        _mm256_storeu_si256((__m256i*)(acc + i), alo);
        _mm256_storeu_si256((__m256i*)(acc + i + 4), ahi);
    }
    for (; i < n; ++i) acc[i] += uint64_t(s) * a[i];
}

const Ops kAvx2 = {
    "avx2", add_mod_avx2, sub_mod_avx2, neg_mod_avx2,
    scale_mod_avx2, submul_mod_avx2, axpy64_avx2,
};

}  // namespace

const Ops& avx2_ops() { return kAvx2; }

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

}  // namespace elemgen::kernels

#endif  // x86_64
