#include "elemgen/kernels.hpp"

namespace elemgen::kernels {

namespace {

void add_mod_scalar(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) {
        uint32_t t = a[i] + b[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void sub_mod_scalar(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) {
        uint32_t t = a[i] + p - b[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void neg_mod_scalar(uint32_t* dst, const uint32_t* a, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) dst[i] = a[i] == 0 ? 0 : p - a[i];
}

void scale_mod_scalar(uint32_t* dst, const uint32_t* a, size_t n, uint32_t s, uint32_t p) {
    for (size_t i = 0; i < n; ++i) dst[i] = uint32_t((uint64_t(s) * a[i]) % p);
}

void submul_mod_scalar(uint32_t* r, const uint32_t* g, size_t n, uint32_t t, uint32_t p) {
    uint32_t tn = t == 0 ? 0 : p - t;  // r - t g == r + (p - t) g
    for (size_t i = 0; i < n; ++i) r[i] = uint32_t((r[i] + uint64_t(tn) * g[i]) % p);
}

void axpy64_scalar(uint64_t* acc, const uint32_t* a, size_t n, uint32_t s) {
    for (size_t i = 0; i < n; ++i) acc[i] += uint64_t(s) * a[i];
}

const Ops kScalar = {
    "scalar", add_mod_scalar, sub_mod_scalar, neg_mod_scalar,
    scale_mod_scalar, submul_mod_scalar, axpy64_scalar,
};

}  // namespace

const Ops& scalar_ops() { return kScalar; }

void reduce64_mod(uint32_t* dst, const uint64_t* acc, size_t n, uint32_t p) {
    if (p == 2) {
        for (size_t i = 0; i < n; ++i) dst[i] = uint32_t(acc[i] & 1);
        return;
    }
    // Barrett: q = floor(x * floor(2^64/p) / 2^64) underestimates x/p by at most 2
    uint64_t magic = ~uint64_t(0) / p;
    for (size_t i = 0; i < n; ++i) {
        uint64_t x = acc[i];
        uint64_t q = uint64_t((unsigned __int128)x * magic >> 64);
        uint64_t r = x - q * p;
        while (r >= p) r -= p;
        dst[i] = uint32_t(r);
    }
}

}  // namespace elemgen::kernels
