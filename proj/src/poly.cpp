#include "elemgen/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "elemgen/kernels.hpp"

namespace elemgen {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!(*a.field_ptr() == *b.field_ptr())) throw ValidationError("mismatched FieldSpec");
}

// out[off .. off+z.size()) += z (mod p), m = 1 layout
void add_into(std::vector<uint32_t>& out, size_t off, const uint32_t* z, size_t n, uint32_t p) {
    kernels::active_ops().add_mod(out.data() + off, out.data() + off, z, n, p);
}

constexpr size_t kKaratsubaMin = 48;

std::vector<uint32_t> mul_m1(const uint32_t* a, size_t la, const uint32_t* b, size_t lb,
                             uint32_t p) {
    const auto& K = kernels::active_ops();
    if (la == 0 || lb == 0) return {};
    if (std::min(la, lb) < kKaratsubaMin) {
        std::vector<uint64_t> acc(la + lb - 1, 0);
        if (la <= lb) {
            for (size_t i = 0; i < la; ++i)
                if (a[i]) K.axpy64(acc.data() + i, b, lb, a[i]);
        } else {
            for (size_t i = 0; i < lb; ++i)
                if (b[i]) K.axpy64(acc.data() + i, a, la, b[i]);
        }
        std::vector<uint32_t> out(acc.size());
        kernels::reduce64_mod(out.data(), acc.data(), acc.size(), p);
        return out;
    }
    if (la < lb) std::swap(a, b), std::swap(la, lb);
    size_t h = (la + 1) / 2;
    if (lb <= h) {
        // unbalanced: split a only
        auto z0 = mul_m1(a, h, b, lb, p);
        auto z1 = mul_m1(a + h, la - h, b, lb, p);
        std::vector<uint32_t> out(la + lb - 1, 0);
        std::copy(z0.begin(), z0.end(), out.begin());
        add_into(out, h, z1.data(), z1.size(), p);
        return out;
    }
    // z0 = a0 b0, z2 = a1 b1, z1 = (a0+a1)(b0+b1) - z0 - z2
    auto z0 = mul_m1(a, h, b, h, p);
    auto z2 = mul_m1(a + h, la - h, b + h, lb - h, p);
    std::vector<uint32_t> sa(a, a + h), sb(b, b + h);
    K.add_mod(sa.data(), sa.data(), a + h, la - h, p);
    K.add_mod(sb.data(), sb.data(), b + h, lb - h, p);
    auto z1 = mul_m1(sa.data(), sa.size(), sb.data(), sb.size(), p);
    K.sub_mod(z1.data(), z1.data(), z0.data(), z0.size(), p);
    K.sub_mod(z1.data(), z1.data(), z2.data(), z2.size(), p);
    std::vector<uint32_t> out(la + lb - 1, 0);
    std::copy(z0.begin(), z0.end(), out.begin());
    add_into(out, h, z1.data(), z1.size(), p);
    add_into(out, 2 * h, z2.data(), z2.size(), p);
    return out;
}

// rem mod g in place, m = 1 layout; g canonical nonzero
void mod_inplace_m1(std::vector<uint32_t>& rem, const std::vector<uint32_t>& g, uint32_t p) {
    const auto& K = kernels::active_ops();
    const size_t lg = g.size();
    uint64_t ginv = 1;
    {  // inverse of the leading coefficient mod p
        uint64_t base = g.back() % p, e = p - 2, r = 1;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        ginv = r;
    }
    while (rem.size() >= lg) {
        uint32_t cur = rem.back();
        if (cur) {
            uint32_t t = uint32_t(cur * ginv % p);
            K.submul_mod(rem.data() + (rem.size() - lg), g.data(), lg, t, p);
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
}

std::vector<FieldElement> to_coeffs(const Poly& f) {
    std::vector<FieldElement> c(f.len());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i);
    return c;
}

}  // namespace

Poly Poly::one(FieldPtr f) { return constant(std::move(f), FieldElement::one(*f)); }

Poly Poly::X(FieldPtr f) {
    Poly r(f);
    r.dg_.assign(2 * f->m(), 0);
    r.dg_[f->m()] = 1;
    return r;
}

Poly Poly::constant(FieldPtr f, const FieldElement& c) {
    Poly r(std::move(f));
    if (c.is_zero()) return r;
    r.dg_.assign(r.f_->m(), 0);
    for (uint32_t i = 0; i < r.f_->m(); ++i) r.dg_[i] = c.digit(i);
    return r;
}

Poly Poly::from_coeffs(FieldPtr f, const std::vector<FieldElement>& coeffs) {
    Poly r(std::move(f));
    uint32_t m = r.f_->m();
    r.dg_.assign(coeffs.size() * m, 0);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].m() != m) throw ValidationError("mismatched FieldSpec");
        for (uint32_t i = 0; i < m; ++i) r.dg_[k * m + i] = coeffs[k].digit(i);
    }
    r.canonicalize();
    return r;
}

Poly Poly::from_packed(FieldPtr f, const std::vector<uint32_t>& packed) {
    std::vector<FieldElement> c;
    c.reserve(packed.size());
    for (uint32_t v : packed) c.push_back(FieldElement::from_packed(*f, v));
    return from_coeffs(std::move(f), c);
}

bool Poly::is_one() const {
    if (len() != 1) return false;
    return coeff(0) == FieldElement::one(*f_);
}

FieldElement Poly::coeff(size_t k) const {
    if (k >= len()) return FieldElement::zero(*f_);
    std::vector<uint32_t> d(dg_.begin() + k * f_->m(), dg_.begin() + (k + 1) * f_->m());
    return FieldElement::from_digits(*f_, d);
}

FieldElement Poly::lead() const {
    if (is_zero()) return FieldElement::zero(*f_);
    return coeff(len() - 1);
}

std::vector<uint32_t> Poly::packed() const {
    std::vector<uint32_t> v(len());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i).packed(*f_);
    return v;
}

std::string Poly::str() const {
    std::ostringstream os;
    os << '[';
    auto v = packed();
    if (v.empty()) os << '0';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << ']';
    return os.str();
}

void Poly::canonicalize() {
    uint32_t m = f_->m();
    size_t n = len();
    while (n > 0) {
        bool allz = true;
        for (uint32_t i = 0; i < m; ++i)
            if (dg_[(n - 1) * m + i]) {
                allz = false;
                break;
            }
        if (!allz) break;
        --n;
    }
    dg_.resize(n * m);
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& K = kernels::active_ops();
    uint32_t p = a.field().p();
    Poly r = a.digits().size() >= b.digits().size() ? a : b;
    const Poly& s = a.digits().size() >= b.digits().size() ? b : a;
    K.add_mod(r.digits_mut().data(), r.digits().data(), s.digits().data(), s.digits().size(), p);
    r.canonicalize();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& K = kernels::active_ops();
    uint32_t p = a.field().p();
    Poly r = a;
    if (b.digits().size() > r.digits().size()) r.digits_mut().resize(b.digits().size(), 0);
    K.sub_mod(r.digits_mut().data(), r.digits().data(), b.digits().data(), b.digits().size(), p);
    r.canonicalize();
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    kernels::active_ops().neg_mod(r.digits_mut().data(), r.digits().data(), r.digits().size(),
                                  a.field().p());
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const FieldSpec& F = a.field();
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_ptr());
    if (F.m() == 1) {
        Poly r(a.field_ptr());
        r.digits_mut() =
            mul_m1(a.digits().data(), a.len(), b.digits().data(), b.len(), F.p());
        r.canonicalize();
        return r;
    }
    auto ca = to_coeffs(a), cb = to_coeffs(b);
    std::vector<FieldElement> out(ca.size() + cb.size() - 1, FieldElement::zero(F));
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].is_zero()) continue;
        for (size_t j = 0; j < cb.size(); ++j)
            out[i + j] = ff_add(F, out[i + j], ff_mul(F, ca[i], cb[j]));
    }
    return Poly::from_coeffs(a.field_ptr(), out);
}

Poly scale(const Poly& a, const FieldElement& s) {
    const FieldSpec& F = a.field();
    if (s.is_zero()) return Poly::zero(a.field_ptr());
    if (F.m() == 1) {
        Poly r = a;
        kernels::active_ops().scale_mod(r.digits_mut().data(), r.digits().data(),
                                        r.digits().size(), s.digit(0), F.p());
        r.canonicalize();
        return r;
    }
    auto c = to_coeffs(a);
    for (auto& x : c) x = ff_mul(F, x, s);
    return Poly::from_coeffs(a.field_ptr(), c);
}

Poly shift(const Poly& a, unsigned k) {
    if (a.is_zero() || k == 0) return a;
    Poly r(a.field_ptr());
    r.digits_mut().assign(size_t(k) * a.field().m(), 0);
    r.digits_mut().insert(r.digits_mut().end(), a.digits().begin(), a.digits().end());
    return r;
}

DivMod divmod(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (g.is_zero()) throw ValidationError("polynomial division by zero");
    const FieldSpec& F = f.field();
    if (f.degree() < g.degree()) return {Poly::zero(f.field_ptr()), f};
    if (F.m() == 1) {
        uint32_t p = F.p();
        std::vector<uint32_t> rem = f.digits();
        const auto& gd = g.digits();
        size_t lg = gd.size();
        std::vector<uint32_t> quot(rem.size() - lg + 1, 0);
        uint64_t ginv = 1;
        {
            uint64_t base = gd.back(), e = p - 2, r = 1;
            while (e) {
                if (e & 1) r = r * base % p;
                base = base * base % p;
                e >>= 1;
            }
            ginv = r;
        }
        const auto& K = kernels::active_ops();
        for (size_t k = rem.size(); k >= lg; --k) {
            uint32_t cur = rem[k - 1];
            if (cur) {
                uint32_t t = uint32_t(cur * ginv % p);
                quot[k - lg] = t;
                K.submul_mod(rem.data() + (k - lg), gd.data(), lg, t, p);
            }
        }
        Poly q(f.field_ptr()), r(f.field_ptr());
        q.digits_mut() = std::move(quot);
        r.digits_mut() = std::move(rem);
        q.canonicalize();
        r.canonicalize();
        return {std::move(q), std::move(r)};
    }
    auto rem = to_coeffs(f);
    auto gd = to_coeffs(g);
    std::vector<FieldElement> quot(rem.size() - gd.size() + 1, FieldElement::zero(F));
    FieldElement ginv = ff_inv(F, gd.back());
    for (size_t k = rem.size(); k >= gd.size(); --k) {
        FieldElement cur = rem[k - 1];
        if (cur.is_zero()) continue;
        FieldElement t = ff_mul(F, cur, ginv);
        quot[k - gd.size()] = t;
        for (size_t i = 0; i < gd.size(); ++i) {
            size_t pos = k - gd.size() + i;
            rem[pos] = ff_sub(F, rem[pos], ff_mul(F, t, gd[i]));
        }
    }
    return {Poly::from_coeffs(f.field_ptr(), quot), Poly::from_coeffs(f.field_ptr(), rem)};
}

Poly mod(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (g.is_zero()) throw ValidationError("polynomial division by zero");
    if (f.degree() < g.degree()) return f;
    if (f.field().m() == 1) {
        Poly r = f;
        mod_inplace_m1(r.digits_mut(), g.digits(), f.field().p());
        return r;
    }
    return divmod(f, g).rem;
}

Poly divexact(const Poly& f, const Poly& g) {
    auto qr = divmod(f, g);
    if (!qr.rem.is_zero()) throw InternalError("expected exact polynomial division");
    return qr.quot;
}

Poly monic(const Poly& f) {
    if (f.is_zero()) return f;
    FieldElement lc = f.lead();
    if (lc == FieldElement::one(f.field())) return f;
    return scale(f, ff_inv(f.field(), lc));
}

Poly gcd(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (f.field().m() == 1) {
        uint32_t p = f.field().p();
        std::vector<uint32_t> a = f.digits(), b = g.digits();
        while (!b.empty()) {
            if (a.size() >= b.size()) mod_inplace_m1(a, b, p);
            std::swap(a, b);
        }
        Poly r(f.field_ptr());
        r.digits_mut() = std::move(a);
        return monic(r);
    }
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

PolyXgcd xgcd(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (f.is_zero() && g.is_zero()) throw ValidationError("xgcd(0, 0)");
    auto fp = f.field_ptr();
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::one(fp), s1 = Poly::zero(fp);
    Poly t0 = Poly::zero(fp), t1 = Poly::one(fp);
    while (!r1.is_zero()) {
        auto qr = divmod(r0, r1);
        Poly r2 = std::move(qr.rem);
        Poly s2 = s0 - qr.quot * s1;
        Poly t2 = t0 - qr.quot * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    FieldElement lc = r0.lead();
    FieldElement s = ff_inv(f.field(), lc);
    return {scale(r0, s), scale(s0, s), scale(t0, s)};
}

Poly derivative(const Poly& f) {
    const FieldSpec& F = f.field();
    if (f.len() <= 1) return Poly::zero(f.field_ptr());
    std::vector<FieldElement> c(f.len() - 1, FieldElement::zero(F));
    for (size_t k = 1; k < f.len(); ++k) {
        // k * coeff(k), with k reduced into the prime subfield
        FieldElement kk = FieldElement::from_packed(F, uint32_t(k % F.p()));
        c[k - 1] = ff_mul(F, f.coeff(k), kk);
    }
    return Poly::from_coeffs(f.field_ptr(), c);
}

Poly modpow(const Poly& base, const BigNat& exp, const Poly& modulus) {
    require_same_field(base, modulus);
    if (modulus.degree() < 1) throw ValidationError("modpow modulus must be nonconstant");
    Poly r = Poly::one(base.field_ptr());
    Poly b = mod(base, modulus);
    size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (exp == 0) return mod(r, modulus);
    for (size_t i = bits; i-- > 0;) {
        r = mod(r * r, modulus);
        if (mpz_tstbit(exp.get_mpz_t(), i)) r = mod(r * b, modulus);
    }
    return r;
}

Poly radical(const Poly& f) {
    if (f.is_zero()) throw ValidationError("radical of zero");
    const FieldSpec& F = f.field();
    Poly g = monic(f);
    if (g.degree() == 0) return Poly::one(f.field_ptr());
    Poly d = derivative(g);
    if (d.is_zero()) {
        // g = h(X^p) = (h-hat)^p with coefficients pth-rooted
        std::vector<FieldElement> c;
        for (size_t k = 0; k < g.len(); k += F.p()) c.push_back(pth_root(F, g.coeff(k)));
        return radical(Poly::from_coeffs(f.field_ptr(), c));
    }
    Poly w = gcd(g, d);
    if (w.degree() == 0) return g;
    Poly r1 = radical(divexact(g, w));
    Poly r2 = radical(w);
    return divexact(r1 * r2, gcd(r1, r2));  // lcm of the two radicals
}

Poly coprime_shift(const Poly& u, const Poly& v, const Poly& w) {
    if (u.is_zero()) throw ValidationError("coprime_shift: u = 0");
    if (gcd(gcd(u, v), w).degree() != 0)
        throw ValidationError("coprime_shift: gcd(u, v, w) != 1");
    Poly r = radical(u);
    while (true) {
        Poly g = gcd(r, v);
        if (g.degree() == 0) break;
        r = divexact(r, g);
    }
    Poly t = r.degree() <= 0 ? Poly::one(u.field_ptr()) : r;
    if (gcd(u, v + t * w).degree() == 0) return t;
    // guaranteed-terminating fallback (never expected to trigger)
    const FieldSpec& F = u.field();
    for (unsigned D = 0;; ++D) {
        uint64_t count = 1;
        for (unsigned i = 0; i <= D; ++i) count *= F.q();
        for (uint64_t enc = (D == 0 ? 1 : count / F.q()); enc < count; ++enc) {
            std::vector<uint32_t> pk;
            uint64_t e = enc;
            while (e) {
                pk.push_back(uint32_t(e % F.q()));
                e /= F.q();
            }
            Poly cand = Poly::from_packed(u.field_ptr(), pk);
            if (gcd(u, v + cand * w).degree() == 0) return cand;
        }
    }
}

bool is_irreducible(const Poly& f) {
    int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const FieldSpec& F = f.field();
    Poly g = monic(f);
    BigNat q = F.q();
    Poly x = mod(Poly::X(f.field_ptr()), g);
    // Frobenius tower: h_i = X^(q^i) mod g
    std::vector<unsigned> checkpoints;
    unsigned du = unsigned(d);
    for (unsigned ell = 2; ell <= du; ++ell) {
        if (du % ell) continue;
        checkpoints.push_back(unsigned(d) / ell);
        while (du % ell == 0) du /= ell;
    }
    Poly h = x;
    std::sort(checkpoints.begin(), checkpoints.end());
    size_t ci = 0;
    for (unsigned i = 1; i <= unsigned(d); ++i) {
        h = modpow(h, q, g);
        while (ci < checkpoints.size() && checkpoints[ci] == i) {
            if (gcd(h - x, g).degree() != 0) return false;
            ++ci;
        }
    }
    return (h - x).is_zero();
}

bool for_each_in_class(const Poly& a, const Poly& b, unsigned D,
                       const std::function<bool(const Poly&)>& visit) {
    if (a.is_zero()) throw ValidationError("progression modulus a = 0");
    const FieldSpec& F = a.field();
    Poly r = mod(b, a);
    if (r.degree() == int(D) && visit(r)) return true;
    int e = int(D) - a.degree();
    if (e < 0) return false;
    FieldElement lcinv = ff_inv(F, a.lead());
    for (uint32_t lam = 1; lam < F.q(); ++lam) {
        FieldElement hl = ff_mul(F, FieldElement::from_packed(F, lam), lcinv);
        std::vector<uint32_t> low(size_t(e), 0);  // packed coefficient odometer
        while (true) {
            std::vector<FieldElement> hc(size_t(e) + 1, FieldElement::zero(F));
            for (int i = 0; i < e; ++i) hc[size_t(i)] = FieldElement::from_packed(F, low[size_t(i)]);
            hc[size_t(e)] = hl;
            Poly h = Poly::from_coeffs(a.field_ptr(), hc);
            Poly cand = r + a * h;
            if (cand.degree() != int(D)) throw InternalError("class enumeration degree drift");
            if (visit(cand)) return true;
            int i = 0;
            for (; i < e; ++i) {
                if (++low[size_t(i)] < F.q()) break;
                low[size_t(i)] = 0;
            }
            if (i == e) break;
        }
    }
    return false;
}

Poly find_prime_in_progression(const Poly& a, const Poly& b,
                               std::optional<unsigned> deg_coprime_to, unsigned max_degree) {
    if (a.is_zero()) throw ValidationError("progression modulus a = 0");
    if (gcd(a, b).degree() != 0)
        throw ValidationError("prime search requires gcd(a, b) = 1");
    Poly r = mod(b, a);
    unsigned start = std::max(1, r.degree());
    std::optional<Poly> found;
    for (unsigned D = start; D <= max_degree; ++D) {
        if (deg_coprime_to && std::gcd(D, *deg_coprime_to) != 1) continue;
        for_each_in_class(a, b, D, [&](const Poly& cand) {
            if (is_irreducible(cand)) {
                found = cand;
                return true;
            }
            return false;
        });
        if (found) return *found;
    }
    throw BudgetError("prime search degree budget exceeded (max_degree " +
                      std::to_string(max_degree) + ", a = " + a.str() + ", b = " + b.str() +
                      (deg_coprime_to ? ", deg coprime to " + std::to_string(*deg_coprime_to)
                                      : std::string()) +
                      ")");
}

BigNat delta(const Poly& f) {
    if (f.degree() < 1) throw ValidationError("delta of a constant polynomial");
    return delta_invariant(f.field().q(), unsigned(f.degree()));
}

}  // namespace elemgen
