#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace elemgen::kernels {

// Span kernels for residue arithmetic mod a prime p < 2^16.
// All input/output arrays hold values in [0, p); axpy64 accumulates raw
// 64-bit sums (caller keeps them below 2^63, see poly multiplication).
//
// Scalar versions are the reference semantics; SIMD variants must be
// bit-identical and are checked against them by the equivalence tests.
struct Ops {
    const char* name;
    // dst[i] = (a[i] + b[i]) mod p
    void (*add_mod)(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p);
    // dst[i] = (a[i] - b[i]) mod p
    void (*sub_mod)(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p);
    // dst[i] = (-a[i]) mod p
    void (*neg_mod)(uint32_t* dst, const uint32_t* a, size_t n, uint32_t p);
    // dst[i] = (s * a[i]) mod p, s in [0, p)
    void (*scale_mod)(uint32_t* dst, const uint32_t* a, size_t n, uint32_t s, uint32_t p);
    // r[i] = (r[i] - t * g[i]) mod p, t in [0, p)  (polynomial division inner step)
    void (*submul_mod)(uint32_t* r, const uint32_t* g, size_t n, uint32_t t, uint32_t p);
    // acc[i] += (uint64) s * a[i], no reduction (schoolbook multiply inner step)
    void (*axpy64)(uint64_t* acc, const uint32_t* a, size_t n, uint32_t s);
};

const Ops& scalar_ops();
const Ops& active_ops();                  // best variant for this CPU, chosen once
void force_ops(const Ops* ops);           // test hook; nullptr restores auto-detection
std::vector<const Ops*> supported_ops();  // every variant runnable on this CPU

#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
bool avx2_available();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

// dst[i] = acc[i] mod p (Barrett; shared by all variants)
void reduce64_mod(uint32_t* dst, const uint64_t* acc, size_t n, uint32_t p);

}  // namespace elemgen::kernels
