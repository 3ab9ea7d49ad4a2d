#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elemgen/bignat.hpp"
#include "elemgen/gf.hpp"

namespace elemgen {

// Element of A = F_q[X]. Coefficients ascending, canonical form (no trailing
// zero coefficient; the zero polynomial has none). Digits are stored
// digit-major with stride m, so for prime fields the digit array is the
// coefficient array and the mod-p span kernels apply directly.
class Poly {
public:
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly one(FieldPtr f);
    static Poly X(FieldPtr f);
    static Poly constant(FieldPtr f, const FieldElement& c);
    static Poly from_coeffs(FieldPtr f, const std::vector<FieldElement>& coeffs);
    // coefficients as packed base-p integers in [0, q) (the file syntax)
    static Poly from_packed(FieldPtr f, const std::vector<uint32_t>& packed);

    const FieldSpec& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }

    int degree() const { return int(len()) - 1; }  // -1 stands for deg(0) = -inf
    bool is_zero() const { return dg_.empty(); }
    bool is_constant() const { return len() <= 1; }
    bool is_one() const;

    size_t len() const { return dg_.size() / f_->m(); }  // number of coefficients
    FieldElement coeff(size_t k) const;                  // zero beyond the degree
    FieldElement lead() const;
    std::vector<uint32_t> packed() const;
    std::string str() const;  // "[c0 c1 ...]", "[]" for zero

    bool operator==(const Poly& o) const { return *f_ == *o.f_ && dg_ == o.dg_; }

    // raw digit storage; kernels and io use these
    const std::vector<uint32_t>& digits() const { return dg_; }
    std::vector<uint32_t>& digits_mut() { return dg_; }
    void canonicalize();

private:
    FieldPtr f_;
    std::vector<uint32_t> dg_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly scale(const Poly& a, const FieldElement& s);
Poly shift(const Poly& a, unsigned k);  // a * X^k

struct DivMod {
    Poly quot, rem;
};
DivMod divmod(const Poly& f, const Poly& g);  // f = quot*g + rem, deg rem < deg g
Poly mod(const Poly& f, const Poly& g);
Poly divexact(const Poly& f, const Poly& g);  // throws InternalError if not exact

Poly monic(const Poly& f);
Poly gcd(const Poly& f, const Poly& g);  // monic, or zero if both zero

struct PolyXgcd {
    Poly g, alpha, beta;  // g = alpha*f + beta*g_in, g monic
};
PolyXgcd xgcd(const Poly& f, const Poly& g);  // throws if both zero

Poly derivative(const Poly& f);
Poly modpow(const Poly& base, const BigNat& exp, const Poly& modulus);

// monic product of the distinct monic irreducible divisors of f
Poly radical(const Poly& f);  // throws on zero

// t with gcd(u, v + t*w) = 1, given u != 0 and gcd(u, v, w) = 1
Poly coprime_shift(const Poly& u, const Poly& v, const Poly& w);

bool is_irreducible(const Poly& f);  // Rabin; constants and zero are not prime

// visit every c == b (mod a) with deg c == D, ascending (monic leading first);
// visitor returns true to stop early. Returns true if stopped.
bool for_each_in_class(const Poly& a, const Poly& b, unsigned D,
                       const std::function<bool(const Poly&)>& visit);

// irreducible b' == b (mod a), minimal admissible degree; if deg_coprime_to is
// set, additionally gcd(deg b', *deg_coprime_to) = 1. Throws BudgetError when
// no prime is found up to max_degree.
Poly find_prime_in_progression(const Poly& a, const Poly& b,
                               std::optional<unsigned> deg_coprime_to, unsigned max_degree);

BigNat delta(const Poly& f);  // (q^deg(f) - 1)/(q - 1); throws on constants

}  // namespace elemgen
