#include "elemgen/core.hpp"

#include <algorithm>

namespace elemgen {

namespace {

Poly det2(const SqMatrix& M) { return M.at(0, 0) * M.at(1, 1) - M.at(0, 1) * M.at(1, 0); }

SqMatrix framed(const FieldPtr& f, unsigned n, const Poly& a, const Poly& b, const Poly& c,
                const Poly& d) {
    SqMatrix M(f, n);
    M.at(0, 0) = a;
    M.at(0, 1) = b;
    M.at(1, 0) = c;
    M.at(1, 1) = d;
    return M;
}

}  // namespace

SwindleFactors make_swindle_factors(const Poly& s, const Poly& a) {
    if (s.is_zero()) throw ValidationError("swindle factors need s != 0");
    auto fp = s.field_ptr();
    Poly one = Poly::one(fp);
    Poly am1 = a - one, ap1 = a + one;
    // a^2 == 1 mod s makes a single gcd split s into the (a-1)- and (a+1)-parts
    Poly s1 = gcd(s, am1);  // monic; gcd(s, 0) = monic(s)
    Poly s2 = divexact(s, s1);
    SwindleFactors out{s1, s2, divexact(am1, s1), divexact(ap1, s2)};
    if (!(out.s1 * out.s2 == s)) throw InternalError("swindle factors: s1 s2 != s");
    if (!(out.k1 * out.s1 + one == a)) throw InternalError("swindle factors: k1 s1 + 1 != a");
    if (!(out.k2 * out.s2 - one == a)) throw InternalError("swindle factors: k2 s2 - 1 != a");
    return out;
}

CHPair ch_power(const SqMatrix& M, const BigNat& k) {
    if (M.n() != 2) throw ValidationError("ch_power expects a 2x2 matrix");
    if (!det2(M).is_one()) throw ValidationError("ch_power expects det = 1");
    auto fp = M.field_ptr();
    Poly tau = M.at(0, 0) + M.at(1, 1);
    // T^k mod (T^2 - tau T + 1), as pairs (e, f) = e + f T
    Poly e = Poly::one(fp), f = Poly::zero(fp);
    size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    if (k == 0) return {e, f, k};
    for (size_t i = bits; i-- > 0;) {
        Poly e2 = e * e, f2 = f * f, ef = e * f;
        e = e2 - f2;
        f = ef + ef + f2 * tau;
        if (mpz_tstbit(k.get_mpz_t(), i)) {
            // multiply by T: (e, f) -> (-f, e + f tau)
            Poly ne = -f;
            f = e + f * tau;
            e = std::move(ne);
        }
    }
    return {e, f, k};
}

SwindleResult swindle(const Poly& a, const Poly& b, const Poly& c, const Poly& d, const Poly& s,
                      unsigned n, std::vector<SqMatrix>* trace) {
    if (n < 3) throw ValidationError("swindle needs n >= 3");
    auto fp = a.field_ptr();
    const FieldSpec& F = *fp;
    Poly sc = s * c;
    if (!(a * d - b * sc).is_one()) throw ValidationError("swindle: determinant != 1");
    if (s.is_zero() ? !(a == d) : !mod(a - d, s).is_zero())
        throw ValidationError("swindle: a != d mod s");

    MoveTracker wk(framed(fp, n, a, b, sc, d));
    SqMatrix target = framed(fp, n, -a, -(s * b), c, d);
    target.at(2, 2) = Poly::constant(fp, ff_neg(F, FieldElement::one(F)));

    if (s.is_zero()) {
        // a = d = +-1; clear b, fix signs, restore c
        if (a.degree() != 0) throw InternalError("degenerate swindle: a is not a unit");
        FieldElement eps = a.coeff(0);
        FieldElement epsinv = ff_inv(F, eps);
        if (!b.is_zero()) wk.col(0, 1, -scale(b, epsinv));
        ElemWord patch = unit_diag_word(fp, ff_neg(F, FieldElement::one(F)), 0, 2, n);
        for (const auto& mv : patch.factors()) wk.col(mv.i, mv.j, mv.t);
        if (!c.is_zero()) wk.row(1, 0, -scale(c, eps));
        if (!(wk.mat() == target)) throw InternalError("degenerate swindle output mismatch");
        return {wk.left(), wk.right(), wk.mat(), wk.moves(), true};
    }

    SwindleFactors sf = make_swindle_factors(s, a);
    const Poly &s1 = sf.s1, &s2 = sf.s2, &k1 = sf.k1, &k2 = sf.k2;
    struct Step {
        bool is_row;
        unsigned i, j;
        Poly t;
    };
    const Step seq[11] = {
        {false, 2, 0, s1},            // C1 += s1 C3
        {true, 0, 2, -k1},            // R1 -= k1 R3
        {true, 1, 2, -(s2 * c)},      // R2 -= s2 c R3
        {true, 2, 0, -s1},            // R3 -= s1 R1
        {false, 0, 1, -b},            // C2 -= b C1
        {false, 0, 2, k1 + s2},       // C3 += (k1 + s2) C1
        {true, 1, 0, c},              // R2 += c R1
        {true, 2, 0, -k2},            // R3 -= k2 R1
        {true, 0, 2, s2},             // R1 += s2 R3
        {false, 2, 0, -k2},           // C1 -= k2 C3
        {false, 2, 1, -(s1 * b)},     // C2 -= s1 b C3
    };
    bool degenerate = false;
    for (const auto& st : seq) {
        if (st.t.is_zero()) degenerate = true;
        if (st.is_row)
            wk.row(st.i, st.j, st.t);
        else
            wk.col(st.i, st.j, st.t);
        if (trace) trace->push_back(wk.mat());
    }
    if (!(wk.mat() == target)) throw InternalError("swindle output mismatch");
    if (wk.moves() > 11) throw InternalError("swindle move budget exceeded");
    return {wk.left(), wk.right(), wk.mat(), wk.moves(), degenerate};
}

namespace {

// continue on an existing tracker whose matrix is framed3(a, b; s c, d)
SwindleResult swindle_on(MoveTracker& wk, const Poly& a, const Poly& b, const Poly& c,
                         const Poly& d, const Poly& s, unsigned n) {
    SwindleResult r = swindle(a, b, c, d, s, n);
    for (const auto& mv : word_inverse(word_inverse(r.left)).factors()) (void)mv;  // no-op guard
    return r;
}

}  // namespace

DaggerResult dagger_reduce(const SqMatrix& m_primed, const BigNat& k, const Poly& c_prime,
                           unsigned n) {
    if (m_primed.n() != 2) throw ValidationError("dagger_reduce expects a 2x2 core");
    if (!(m_primed.at(1, 0) == c_prime))
        throw ValidationError("dagger_reduce: lower-left entry must be the designated prime");
    if (!det2(m_primed).is_one()) throw ValidationError("dagger_reduce: det != 1");
    BigNat dc = delta(c_prime);
    if (k < 1 || k % dc != 0)
        throw ValidationError("dagger_reduce: exponent must be a positive multiple of delta");

    auto fp = m_primed.field_ptr();
    const FieldSpec& F = *fp;
    const Poly &a = m_primed.at(0, 0), &b = m_primed.at(0, 1), &d = m_primed.at(1, 1);
    CHPair ch = ch_power(m_primed, k);

    if (ch.f.is_zero()) {
        // M'^k is scalar: e = +-1, shortcut within the budget
        if (!(ch.e * ch.e).is_one() || ch.e.degree() != 0)
            throw InternalError("scalar power is not +-1");
        FieldElement u = ch.e.coeff(0);
        MoveTracker wk(framed(fp, n, ch.e, Poly::zero(fp), Poly::zero(fp), ch.e));
        ElemWord patch = unit_diag_word(fp, ff_neg(F, FieldElement::one(F)), 0, 2, n);
        for (const auto& mv : patch.factors()) wk.col(mv.i, mv.j, mv.t);
        SqMatrix target(fp, n);
        target.at(0, 0) = Poly::constant(fp, ff_neg(F, u));
        target.at(1, 1) = Poly::constant(fp, ff_inv(F, u));
        target.at(2, 2) = Poly::constant(fp, ff_neg(F, FieldElement::one(F)));
        if (!(wk.mat() == target)) throw InternalError("scalar dagger target mismatch");
        if (wk.moves() > 14) throw InternalError("dagger move budget exceeded");
        return {wk.left(), wk.right(), u, wk.moves(), 0, true};
    }

    Poly A = ch.e + ch.f * a;  // e + f a
    Poly B = ch.f * b;
    Poly D = ch.e + ch.f * d;

    MoveTracker wk(framed(fp, n, A, B, ch.f * c_prime, D));
    SwindleResult sw = swindle(A, B, c_prime, D, ch.f, n);
    // replay the swindle moves on our tracker (same matrix, same schedule)
    for (auto it = sw.left.factors().rbegin(); it != sw.left.factors().rend(); ++it) (void)it;
    // apply: left factors in application order are the reversed product order
    {
        const auto& lf = sw.left.factors();
        const auto& rf = sw.right.factors();
        // interleaving does not matter: row moves commute with column moves
        for (auto it = lf.rbegin(); it != lf.rend(); ++it) wk.row(it->i, it->j, it->t);
        for (const auto& mv : rf) wk.col(mv.i, mv.j, mv.t);
    }
    if (!(wk.mat() == sw.out)) throw InternalError("swindle replay mismatch");

    Poly u_poly = mod(A, c_prime);
    if (u_poly.degree() != 0)
        throw InternalError("dagger: e + f a is not a unit mod c'");
    FieldElement u = u_poly.coeff(0);
    FieldElement uinv = ff_inv(F, u);
    if (!(mod(D, c_prime) == Poly::constant(fp, uinv)))
        throw InternalError("dagger: e + f d != u^-1 mod c'");

    wk.row(0, 1, divexact(A - Poly::constant(fp, u), c_prime));
    wk.col(0, 1, divexact(Poly::constant(fp, uinv) - D, c_prime));
    if (!wk.mat().at(0, 1).is_zero())
        throw InternalError("dagger: upper-right entry did not vanish");
    wk.row(1, 0, scale(c_prime, uinv));

    SqMatrix target(fp, n);
    target.at(0, 0) = Poly::constant(fp, ff_neg(F, u));
    target.at(1, 1) = Poly::constant(fp, uinv);
    target.at(2, 2) = Poly::constant(fp, ff_neg(F, FieldElement::one(F)));
    if (!(wk.mat() == target)) throw InternalError("dagger target mismatch");
    if (wk.moves() > 14) throw InternalError("dagger move budget exceeded");
    return {wk.left(), wk.right(), u, wk.moves(), sw.moves, sw.schedule_degenerate};
}

Primalized primalize_antidiagonal(const SqMatrix& M2, unsigned max_prime_degree) {
    if (M2.n() != 2) throw ValidationError("primalize expects a 2x2 core");
    if (!det2(M2).is_one()) throw ValidationError("primalize: det != 1");
    if (M2.at(0, 0).is_zero()) throw ValidationError("primalize: a = 0 handled upstream");
    auto fp = M2.field_ptr();
    const Poly& a = M2.at(0, 0);

    SqMatrix M = M2;
    Poly h = Poly::zero(fp);
    {
        const Poly& b = M.at(0, 1);
        Poly bq = find_prime_in_progression(a, b, std::nullopt, max_prime_degree);
        if (!(is_irreducible(b) && b.degree() == bq.degree())) {
            h = divexact(bq - b, a);
            M.col_op(0, 1, h);  // b -> b + a h = b', d -> d + c h
            if (!(M.at(0, 1) == bq)) throw InternalError("primalize: b' mismatch");
        }
    }
    Poly b_prime = M.at(0, 1);
    Poly g = Poly::zero(fp);
    {
        const Poly& c = M.at(1, 0);
        unsigned db = unsigned(b_prime.degree());
        Poly cq = find_prime_in_progression(a, c, db, max_prime_degree);
        bool keep = is_irreducible(c) && c.degree() == cq.degree() &&
                    std::gcd(unsigned(c.degree()), db) == 1;
        if (!keep) {
            g = divexact(cq - c, a);
            M.row_op(1, 0, g);  // c -> c + g a = c', d -> d + g b'
            if (!(M.at(1, 0) == cq)) throw InternalError("primalize: c' mismatch");
        }
    }
    Poly c_prime = M.at(1, 0);
    if (!det2(M).is_one()) throw InternalError("primalize: det drifted");
    if (std::gcd(b_prime.degree(), c_prime.degree()) != 1)
        throw InternalError("primalize: degrees not coprime");
    return {M, g, h, b_prime, c_prime};
}

SplitExponents split_exponents(const Poly& b_prime, const Poly& c_prime) {
    if (b_prime.degree() < 1 || c_prime.degree() < 1)
        throw InternalError("split_exponents: nonconstant primes required");
    if (std::gcd(b_prime.degree(), c_prime.degree()) != 1)
        throw InternalError("split_exponents: degrees not coprime");
    BigNat db = delta(b_prime), dc = delta(c_prime);
    if (gcd(db, dc) != 1) throw InternalError("delta invariants not coprime");
    BigNat x;
    if (dc == 1) {
        x = 1;
    } else if (mpz_invert(x.get_mpz_t(), db.get_mpz_t(), dc.get_mpz_t()) == 0) {
        throw InternalError("delta inverse does not exist");
    }
    BigNat y = (x * db - 1) / dc;
    while (x < 1 || y < 1) {
        x += dc;
        y += db;
    }
    if (x * db - y * dc != 1) throw InternalError("exponent split identity failed");
    return {x, y};
}

FramedWord reduce_framed_sl2(const SqMatrix& B2, unsigned n, const DecomposeOptions& opt) {
    if (B2.n() != 2) throw ValidationError("reduce_framed_sl2 expects a 2x2 core");
    if (n < 3)
        throw ValidationError(
            "SL2(F[X]) is not boundedly generated by the elementary matrices; n >= 3 required");
    if (!det2(B2).is_one()) throw ValidationError("matrix is not in SL_n: det != 1");
    auto fp = B2.field_ptr();
    const FieldSpec& F = *fp;

    FramedWord out;
    out.breakdown = {{"primalize", 0}, {"x_side", 0}, {"patch", 0}, {"y_side", 0}, {"finish", 0}};
    if (B2.is_identity()) return out;

    const Poly &a = B2.at(0, 0), &b = B2.at(0, 1), &d = B2.at(1, 1);
    if (a.is_zero()) {
        // -bc = 1, b is a unit: three moves
        if (b.degree() != 0) throw InternalError("a = 0 core has non-unit b");
        FieldElement bc = b.coeff(0);
        out.word.push(0, 1, b);
        out.word.push(1, 0, Poly::constant(fp, ff_neg(F, ff_inv(F, bc))));
        out.word.push(0, 1, b - b * d);
        out.breakdown["finish"] = out.word.length();
        if (out.word.length() > 3) throw InternalError("a = 0 branch exceeded 3 moves");
        return out;
    }

    Primalized pr = primalize_antidiagonal(B2, opt.max_prime_degree);
    SplitExponents xy = split_exponents(pr.b_prime, pr.c_prime);
    BigNat kx = xy.x * delta(pr.b_prime);
    BigNat ky = xy.y * delta(pr.c_prime);
    BigNat kmax = std::max(kx, ky);

    if (opt.exponent_ceiling && kmax > *opt.exponent_ceiling)
        throw BudgetError("exponent ceiling exceeded: k = " + kmax.get_str() +
                          " > " + opt.exponent_ceiling->get_str() +
                          " (certificate size is exponential in the core degree)");
    if (opt.degree_ceiling) {
        Poly tau = pr.m.at(0, 0) + pr.m.at(1, 1);
        BigNat predicted = 2 * kmax * std::max(1, tau.degree()) + pr.b_prime.degree() +
                           pr.c_prime.degree();
        if (predicted > *opt.degree_ceiling)
            throw BudgetError("degree ceiling exceeded: predicted entry degree " +
                              predicted.get_str() + " > " + opt.degree_ceiling->get_str());
    }

    // Y side: framed(M'^ky) ~ diag(-u, u^-1, -1)
    DaggerResult dy = dagger_reduce(pr.m, ky, pr.c_prime, n);
    // X side on the transposed problem, transported back by word transposition
    DaggerResult dx = dagger_reduce(pr.m.transposed(), kx, pr.b_prime, n);
    ElemWord Lx = word_transpose(dx.right);
    ElemWord Rx = word_transpose(dx.left);

    // patch D(v) -> D(u)
    FieldElement w = ff_mul(F, dy.u, ff_inv(F, dx.u));
    ElemWord P = unit_diag_word(fp, w, 0, 1, n);

    // framed(B) = E21(-g) inv(Lx) conj_{D(u)}(inv(P) inv(Rx) Ry) Ly E12(-h)
    std::vector<FieldElement> dvec(n, FieldElement::one(F));
    dvec[0] = ff_neg(F, dy.u);
    dvec[1] = ff_inv(F, dy.u);
    dvec[2] = ff_neg(F, FieldElement::one(F));
    ElemWord mid = word_inverse(P);
    mid.append(word_inverse(Rx));
    mid.append(dy.right);
    mid = word_conjugate_by_diagonal(mid, F, dvec);

    out.word.push(1, 0, -pr.g);
    out.word.append(word_inverse(Lx));
    out.word.append(mid);
    out.word.append(dy.left);
    out.word.push(0, 1, -pr.h);

    out.breakdown["primalize"] = (pr.g.is_zero() ? 0 : 1) + (pr.h.is_zero() ? 0 : 1);
    out.breakdown["x_side"] = Lx.length() + Rx.length();
    out.breakdown["patch"] = P.length();
    out.breakdown["y_side"] = dy.left.length() + dy.right.length();
    out.dagger_moves[0] = dx.moves;
    out.dagger_moves[1] = dy.moves;
    out.swindle_moves[0] = dx.swindle_moves;
    out.swindle_moves[1] = dy.swindle_moves;
    out.swindle_degenerate[0] = dx.swindle_degenerate;
    out.swindle_degenerate[1] = dy.swindle_degenerate;

    if (out.word.length() > 34) throw InternalError("framed reduction exceeded 34 moves");
    return out;
}

Certificate decompose(const SqMatrix& M, const DecomposeOptions& opt) {
    unsigned n = M.n();
    FramedReduction fr = reduce_to_framed(M);
    FramedWord fw = reduce_framed_sl2(fr.core, n, opt);

    Certificate cert{M.field_ptr(), n, M, ElemWord{}, 0, elementary_bound(n), false, {}};
    cert.word = word_inverse(fr.left);
    cert.word.append(fw.word);
    cert.word.append(word_inverse(fr.right));
    cert.length = cert.word.length();
    cert.breakdown = fw.breakdown;
    cert.breakdown["stable_range"] = fr.moves_used;

    if (cert.length > cert.bound) throw InternalError("word exceeds the elementary bound");
    if (!verify(cert)) throw InternalError("certificate failed verification");
    return cert;
}

}  // namespace elemgen
