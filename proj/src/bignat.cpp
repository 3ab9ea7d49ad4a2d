#include "elemgen/bignat.hpp"

#include "elemgen/gf.hpp"

namespace elemgen {

IntXgcd int_xgcd(const BigNat& a, const BigNat& b) {
    if (a == 0 && b == 0) throw ValidationError("int_xgcd(0, 0)");
    IntXgcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.alpha.get_mpz_t(), r.beta.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return r;
}

BigNat delta_invariant(uint32_t q, unsigned deg) {
    BigNat t;
    mpz_ui_pow_ui(t.get_mpz_t(), q, deg);
    t -= 1;
    BigNat r;
    mpz_divexact_ui(r.get_mpz_t(), t.get_mpz_t(), q - 1);
    return r;
}

}  // namespace elemgen
