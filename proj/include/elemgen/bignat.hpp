#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace elemgen {

// Arbitrary-precision natural number; values in the pipeline are kept
// non-negative, signed intermediates appear only in Bezout coefficients.
using BigNat = mpz_class;

struct IntXgcd {
    BigNat g;                // gcd(a, b)
    mpz_class alpha, beta;   // alpha*a + beta*b = g (signed)
};

IntXgcd int_xgcd(const BigNat& a, const BigNat& b);  // throws on (0, 0)

// (q^deg - 1) / (q - 1)
BigNat delta_invariant(uint32_t q, unsigned deg);

}  // namespace elemgen
