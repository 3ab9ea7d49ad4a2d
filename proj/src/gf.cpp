#include "elemgen/gf.hpp"

#include <algorithm>
#include <numeric>

namespace elemgen {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- small helpers over GF(p)[Y], coefficients ascending, canonical ---
using PPoly = std::vector<uint32_t>;

void pf_canon(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

uint32_t pf_inv(uint32_t a, uint32_t p) {
    // p prime, a != 0
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return uint32_t((t % p + p) % p);
}

PPoly pf_mul(const PPoly& a, const PPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j) acc[i + j] += uint64_t(a[i]) * b[j];
    PPoly r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = uint32_t(acc[i] % p);
    pf_canon(r);
    return r;
}

void pf_mod_inplace(PPoly& r, const PPoly& g, uint32_t p) {
    uint32_t ginv = pf_inv(g.back(), p);
    while (r.size() >= g.size()) {
        uint32_t t = uint32_t(uint64_t(r.back()) * ginv % p);
        size_t k = r.size() - g.size();
        if (t) {
            uint32_t tn = p - t;
            for (size_t i = 0; i < g.size(); ++i)
                r[k + i] = uint32_t((r[k + i] + uint64_t(tn) * g[i]) % p);
        } else {
            r.back() = 0;
        }
        pf_canon(r);
        if (r.empty()) break;
    }
}

PPoly pf_gcd(PPoly a, PPoly b, uint32_t p) {
    pf_canon(a);
    pf_canon(b);
    while (!b.empty()) {
        pf_mod_inplace(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        uint32_t s = pf_inv(a.back(), p);
        for (auto& c : a) c = uint32_t(uint64_t(c) * s % p);
    }
    return a;
}

PPoly pf_powmod(PPoly base, uint64_t e, const PPoly& m, uint32_t p) {
    PPoly r{1};
    pf_mod_inplace(base, m, p);
    while (e) {
        if (e & 1) {
            r = pf_mul(r, base, p);
            pf_mod_inplace(r, m, p);
        }
        e >>= 1;
        if (e) {
            base = pf_mul(base, base, p);
            pf_mod_inplace(base, m, p);
        }
    }
    return r;
}

// Rabin over the prime field: used only for modulus validation / construction
bool pf_irreducible(const PPoly& f, uint32_t p) {
    size_t d = f.size() - 1;
    if (f.empty() || d < 1) return false;
    if (d == 1) return true;
    PPoly x{0, 1};
    // h_i = Y^(p^i) mod f
    std::vector<PPoly> h(d + 1);
    PPoly cur = x;
    pf_mod_inplace(cur, f, p);
    for (size_t i = 1; i <= d; ++i) {
        cur = pf_powmod(cur, p, f, p);
        h[i] = cur;
    }
    PPoly xm = x;
    pf_mod_inplace(xm, f, p);
    PPoly diff = h[d];
    // diff -= x
    diff.resize(std::max(diff.size(), xm.size()), 0);
    for (size_t i = 0; i < xm.size(); ++i) diff[i] = (diff[i] + p - xm[i]) % p;
    pf_canon(diff);
    if (!diff.empty()) return false;
    size_t dd = d;
    for (size_t ell = 2; ell <= dd; ++ell) {
        if (dd % ell) continue;
        while (dd % ell == 0) dd /= ell;
        PPoly df = h[d / ell];
        df.resize(std::max(df.size(), xm.size()), 0);
        for (size_t i = 0; i < xm.size(); ++i) df[i] = (df[i] + p - xm[i]) % p;
        pf_canon(df);
        PPoly g = pf_gcd(df, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m) {
    if (!is_prime_u32(p)) throw ValidationError("field characteristic must be prime");
    if (m < 1) throw ValidationError("extension degree must be >= 1");
    if (m == 1) return {0, 1};  // placeholder Y, unused for prime fields
    // ascending base-p encoding of (c_0 .. c_{m-1}); leading coefficient fixed to 1
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t enc = 0; enc < count; ++enc) {
        PPoly f(m + 1, 0);
        uint64_t v = enc;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = uint32_t(v % p);
            v /= p;
        }
        f[m] = 1;
        if (pf_irreducible(f, p)) return f;
    }
    throw InternalError("no irreducible modulus found");  // unreachable
}

FieldSpec::FieldSpec(uint32_t p, uint32_t m) : FieldSpec(p, m, default_modulus(p, m)) {}

FieldSpec::FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime_u32(p_)) throw ValidationError("field characteristic must be prime");
    if (p_ >= (1u << 16)) throw ValidationError("field characteristic must be < 2^16");
    if (m_ < 1 || m_ > FieldElement::kMaxM) throw ValidationError("extension degree out of range");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        q *= p_;
        if (q > (1u << 16)) throw ValidationError("field size q = p^m must be <= 2^16");
    }
    q_ = uint32_t(q);
    if (modulus_.size() != size_t(m_) + 1 || modulus_.back() != 1)
        throw ValidationError("modulus must be monic of degree m");
    for (uint32_t c : modulus_)
        if (c >= p_) throw ValidationError("modulus coefficient out of range");
    if (m_ > 1 && !pf_irreducible(modulus_, p_))
        throw ValidationError("modulus is not irreducible");
}

FieldElement FieldElement::zero(const FieldSpec& f) {
    FieldElement e;
    e.m_ = f.m();
    return e;
}

FieldElement FieldElement::one(const FieldSpec& f) {
    FieldElement e;
    e.m_ = f.m();
    e.d_[0] = 1;
    return e;
}

FieldElement FieldElement::gen(const FieldSpec& f) {
    if (f.m() < 2) throw ValidationError("prime field has no extension generator");
    FieldElement e;
    e.m_ = f.m();
    e.d_[1] = 1;
    return e;
}

FieldElement FieldElement::from_packed(const FieldSpec& f, uint32_t packed) {
    if (packed >= f.q()) throw ValidationError("field element value out of range");
    FieldElement e;
    e.m_ = f.m();
    for (uint32_t i = 0; i < f.m(); ++i) {
        e.d_[i] = packed % f.p();
        packed /= f.p();
    }
    return e;
}

FieldElement FieldElement::from_digits(const FieldSpec& f, const std::vector<uint32_t>& digits) {
    if (digits.size() != f.m()) throw ValidationError("field element digit count mismatch");
    FieldElement e;
    e.m_ = f.m();
    for (uint32_t i = 0; i < f.m(); ++i) {
        if (digits[i] >= f.p()) throw ValidationError("field element digit out of range");
        e.d_[i] = digits[i];
    }
    return e;
}

uint32_t FieldElement::packed(const FieldSpec& f) const {
    uint32_t v = 0;
    for (uint32_t i = f.m(); i-- > 0;) v = v * f.p() + d_[i];
    return v;
}

bool FieldElement::is_zero() const {
    for (uint32_t i = 0; i < m_; ++i)
        if (d_[i]) return false;
    return true;
}

std::string FieldElement::str(const FieldSpec& f) const { return std::to_string(packed(f)); }

namespace {
void check_field(const FieldSpec& f, const FieldElement& a) {
    if (a.m() != f.m()) throw ValidationError("mismatched FieldSpec");
}
}  // namespace

FieldElement ff_add(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
    check_field(f, a);
    check_field(f, b);
    FieldElement r;
    r.m_ = f.m();
    for (uint32_t i = 0; i < f.m(); ++i) {
        uint32_t t = a.d_[i] + b.d_[i];
        r.d_[i] = t >= f.p() ? t - f.p() : t;
    }
    return r;
}

FieldElement ff_sub(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
    check_field(f, a);
    check_field(f, b);
    FieldElement r;
    r.m_ = f.m();
    for (uint32_t i = 0; i < f.m(); ++i) {
        uint32_t t = a.d_[i] + f.p() - b.d_[i];
        r.d_[i] = t >= f.p() ? t - f.p() : t;
    }
    return r;
}

FieldElement ff_neg(const FieldSpec& f, const FieldElement& a) {
    check_field(f, a);
    FieldElement r;
    r.m_ = f.m();
    for (uint32_t i = 0; i < f.m(); ++i) r.d_[i] = a.d_[i] == 0 ? 0 : f.p() - a.d_[i];
    return r;
}

FieldElement ff_mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
    check_field(f, a);
    check_field(f, b);
    uint32_t m = f.m(), p = f.p();
    FieldElement r;
    r.m_ = m;
    if (m == 1) {
        r.d_[0] = uint32_t(uint64_t(a.d_[0]) * b.d_[0] % p);
        return r;
    }
    uint64_t acc[2 * FieldElement::kMaxM - 1] = {};
    for (uint32_t i = 0; i < m; ++i)
        if (a.d_[i])
            for (uint32_t j = 0; j < m; ++j) acc[i + j] += uint64_t(a.d_[i]) * b.d_[j];
    uint32_t t[2 * FieldElement::kMaxM - 1];
    for (uint32_t i = 0; i < 2 * m - 1; ++i) t[i] = uint32_t(acc[i] % p);
    const auto& mod = f.modulus();
    for (uint32_t i = 2 * m - 2; i >= m; --i) {
        uint32_t c = t[i];
        if (c) {
            t[i] = 0;
            for (uint32_t j = 0; j < m; ++j)
                t[i - m + j] = uint32_t((t[i - m + j] + uint64_t(p - mod[j]) * c) % p);
        }
        if (i == m) break;
    }
    for (uint32_t i = 0; i < m; ++i) r.d_[i] = t[i];
    return r;
}

FieldElement ff_pow(const FieldSpec& f, FieldElement a, uint64_t e) {
    FieldElement r = FieldElement::one(f);
    while (e) {
        if (e & 1) r = ff_mul(f, r, a);
        e >>= 1;
        if (e) a = ff_mul(f, a, a);
    }
    return r;
}

FieldElement ff_inv(const FieldSpec& f, const FieldElement& a) {
    check_field(f, a);
    if (a.is_zero()) throw ValidationError("inverse of zero field element");
    return ff_pow(f, a, f.q() - 2);
}

FieldElement pth_root(const FieldSpec& f, const FieldElement& a) {
    check_field(f, a);
    uint64_t e = 1;
    for (uint32_t i = 1; i < f.m(); ++i) e *= f.p();
    return ff_pow(f, a, e);  // a^(p^(m-1)); identity on prime fields
}

}  // namespace elemgen
