#pragma once

#include <optional>

#include "elemgen/matrix.hpp"
#include "elemgen/reduce.hpp"

namespace elemgen {

// s = s1 s2 with a = k1 s1 + 1 = k2 s2 - 1; exists whenever a^2 == 1 mod s
struct SwindleFactors {
    Poly s1, s2, k1, k2;
};
SwindleFactors make_swindle_factors(const Poly& s, const Poly& a);

// M^k = e I + f M for a 2x2 determinant-1 matrix
struct CHPair {
    Poly e, f;
    BigNat k;
};
CHPair ch_power(const SqMatrix& M, const BigNat& k);

struct SwindleResult {
    ElemWord left, right;
    SqMatrix out;
    size_t moves = 0;
    bool schedule_degenerate = false;  // some schedule parameter vanished (or s = 0)
};
// framed3(a, b; s c, d) ~ framed3(-a, -s b; c, d) with -1 at (3,3), 11 moves.
// trace, when given, receives the working matrix after each schedule step.
SwindleResult swindle(const Poly& a, const Poly& b, const Poly& c, const Poly& d, const Poly& s,
                      unsigned n, std::vector<SqMatrix>* trace = nullptr);

struct DaggerResult {
    ElemWord left, right;
    FieldElement u;
    size_t moves = 0;
    size_t swindle_moves = 0;
    bool swindle_degenerate = true;
};
// product(left) * framed(M'^k) * product(right) = diag(-u, u^-1, -1, 1, ...),
// <= 14 moves; lower-left of M' must be the prime c_prime, k a positive
// multiple of delta(c_prime)
DaggerResult dagger_reduce(const SqMatrix& m_primed, const BigNat& k, const Poly& c_prime,
                           unsigned n);

struct Primalized {
    SqMatrix m;          // 2x2 with prime antidiagonal, coprime degrees
    Poly g, h;           // m = E21(g) * input * E12(h)
    Poly b_prime, c_prime;
};
Primalized primalize_antidiagonal(const SqMatrix& M2, unsigned max_prime_degree);

struct SplitExponents {
    BigNat x, y;  // minimal positive with x delta(b') - y delta(c') = 1, y >= 1
};
SplitExponents split_exponents(const Poly& b_prime, const Poly& c_prime);

struct DecomposeOptions {
    unsigned max_prime_degree = 24;
    // desk-scale governors; unset = unlimited. The construction's output size
    // is exponential in the core degree, so callers that must terminate
    // promptly set these (the CLI defaults to 10^6 / 10^5).
    std::optional<BigNat> exponent_ceiling;   // max allowed max(x delta(b'), y delta(c'))
    std::optional<BigNat> degree_ceiling;     // max allowed predicted entry degree
};

struct FramedWord {
    ElemWord word;  // product(word) = framed(B)
    std::map<std::string, size_t> breakdown;
    size_t dagger_moves[2] = {0, 0};       // x side, y side
    size_t swindle_moves[2] = {0, 0};
    bool swindle_degenerate[2] = {true, true};
};
// one-sided word for a framed SL2 matrix, <= 34 factors
FramedWord reduce_framed_sl2(const SqMatrix& B2, unsigned n, const DecomposeOptions& opt = {});

// the whole pipeline: stable range + framed reduction + verification
Certificate decompose(const SqMatrix& M, const DecomposeOptions& opt = {});

}  // namespace elemgen
