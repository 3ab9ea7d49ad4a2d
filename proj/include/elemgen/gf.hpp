#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace elemgen {

class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
// bad user input: malformed files, n < 2, det != 1, gcd preconditions, ...
class ValidationError : public Error {
    using Error::Error;
};
// search/size budget exhausted (prime degree budget, decompose ceilings)
class BudgetError : public Error {
    using Error::Error;
};
// pipeline invariant violated; indicates a bug, never user error
class InternalError : public Error {
    using Error::Error;
};

// The coefficient field GF(q), q = p^m, with an explicit modulus.
// Desk-scale envelope: p < 2^16 prime, q = p^m <= 2^16.
class FieldSpec {
public:
    // deterministic lexicographically-minimal irreducible modulus
    FieldSpec(uint32_t p, uint32_t m);
    // user-supplied modulus (monic, degree m, irreducible; checked)
    FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    // ascending coefficients over GF(p), length m+1, monic; [0,1] placeholder for m = 1
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

private:
    uint32_t p_, m_, q_;
    std::vector<uint32_t> modulus_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

inline FieldPtr make_field(uint32_t p, uint32_t m) {
    return std::make_shared<const FieldSpec>(p, m);
}
inline FieldPtr make_field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
    return std::make_shared<const FieldSpec>(p, m, std::move(modulus));
}

// monic degree-m polynomial over GF(p), irreducible, minimal base-p encoding
std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m);

// Element of GF(p^m): m base-p digits, ascending powers of the field generator.
class FieldElement {
public:
    static constexpr uint32_t kMaxM = 16;  // p^m <= 2^16, p >= 2

    FieldElement() = default;  // zero of a 1-digit field; reassign before mixing fields

    static FieldElement zero(const FieldSpec& f);
    static FieldElement one(const FieldSpec& f);
    static FieldElement gen(const FieldSpec& f);  // the field generator (m > 1), else p's 1... X image
    static FieldElement from_packed(const FieldSpec& f, uint32_t packed);  // sum d_i p^i
    static FieldElement from_digits(const FieldSpec& f, const std::vector<uint32_t>& digits);

    uint32_t m() const { return m_; }
    uint32_t digit(uint32_t i) const { return d_[i]; }
    uint32_t packed(const FieldSpec& f) const;
    bool is_zero() const;
    bool operator==(const FieldElement& o) const { return m_ == o.m_ && d_ == o.d_; }

    std::string str(const FieldSpec& f) const;

    friend FieldElement ff_add(const FieldSpec&, const FieldElement&, const FieldElement&);
    friend FieldElement ff_sub(const FieldSpec&, const FieldElement&, const FieldElement&);
    friend FieldElement ff_mul(const FieldSpec&, const FieldElement&, const FieldElement&);
    friend FieldElement ff_neg(const FieldSpec&, const FieldElement&);

private:
    std::array<uint32_t, kMaxM> d_{};
    uint32_t m_ = 1;
};

FieldElement ff_add(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement ff_sub(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement ff_mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement ff_neg(const FieldSpec& f, const FieldElement& a);
FieldElement ff_inv(const FieldSpec& f, const FieldElement& a);  // throws on zero
FieldElement ff_pow(const FieldSpec& f, FieldElement a, uint64_t e);
// the unique b with b^p = a (Frobenius inverse), computed as a^(p^(m-1))
FieldElement pth_root(const FieldSpec& f, const FieldElement& a);

}  // namespace elemgen
