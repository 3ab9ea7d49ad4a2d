#include "elemgen/matrix.hpp"

#include <algorithm>

namespace elemgen {

SqMatrix::SqMatrix(FieldPtr f, unsigned n) : f_(std::move(f)), n_(n) {
    if (n_ < 2) throw ValidationError("matrix dimension must be >= 2");
    e_.assign(size_t(n_) * n_, Poly::zero(f_));
    for (unsigned i = 0; i < n_; ++i) at(i, i) = Poly::one(f_);
}

bool SqMatrix::is_identity() const {
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool SqMatrix::operator==(const SqMatrix& o) const {
    return n_ == o.n_ && *f_ == *o.f_ && e_ == o.e_;
}

SqMatrix SqMatrix::transposed() const {
    SqMatrix T(f_, n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) T.at(j, i) = at(i, j);
    return T;
}

void SqMatrix::row_op(unsigned i, unsigned j, const Poly& t) {
    if (t.is_zero()) return;
    for (unsigned c = 0; c < n_; ++c)
        if (!at(j, c).is_zero()) at(i, c) = at(i, c) + t * at(j, c);
}

void SqMatrix::col_op(unsigned i, unsigned j, const Poly& t) {
    if (t.is_zero()) return;
    for (unsigned r = 0; r < n_; ++r)
        if (!at(r, i).is_zero()) at(r, j) = at(r, j) + at(r, i) * t;
}

int SqMatrix::max_entry_degree() const {
    int d = -1;
    for (const auto& e : e_) d = std::max(d, e.degree());
    return d;
}

SqMatrix mat_mul(const SqMatrix& A, const SqMatrix& B) {
    if (A.n() != B.n() || !(A.field() == B.field()))
        throw ValidationError("matrix product shape or field mismatch");
    unsigned n = A.n();
    SqMatrix C(A.field_ptr(), n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Poly s = Poly::zero(A.field_ptr());
            for (unsigned k = 0; k < n; ++k) {
                if (A.at(i, k).is_zero() || B.at(k, j).is_zero()) continue;
                s = s + A.at(i, k) * B.at(k, j);
            }
            C.at(i, j) = std::move(s);
        }
    return C;
}

namespace {

Poly det_cofactor(const SqMatrix& A, std::vector<unsigned> rows, std::vector<unsigned> cols) {
    const auto& f = A.field_ptr();
    if (rows.size() == 1) return A.at(rows[0], cols[0]);
    Poly s = Poly::zero(f);
    std::vector<unsigned> subrows(rows.begin() + 1, rows.end());
    for (size_t k = 0; k < cols.size(); ++k) {
        const Poly& a = A.at(rows[0], cols[k]);
        if (a.is_zero()) continue;
        std::vector<unsigned> subcols;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) subcols.push_back(cols[j]);
        Poly t = a * det_cofactor(A, subrows, subcols);
        s = (k % 2 == 0) ? s + t : s - t;
    }
    return s;
}

Poly det_bareiss(SqMatrix M) {
    // one-step fraction-free elimination; all divisions exact
    unsigned n = M.n();
    auto fp = M.field_ptr();
    Poly denom = Poly::one(fp);
    bool neg = false;
    for (unsigned k = 0; k + 1 < n; ++k) {
        if (M.at(k, k).is_zero()) {
            unsigned s = k + 1;
            while (s < n && M.at(s, k).is_zero()) ++s;
            if (s == n) return Poly::zero(fp);
            for (unsigned j = k; j < n; ++j) std::swap(M.at(k, j), M.at(s, j));
            neg = !neg;
        }
        for (unsigned i = k + 1; i < n; ++i) {
            for (unsigned j = k + 1; j < n; ++j) {
                Poly t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                M.at(i, j) = divexact(t, denom);
            }
            M.at(i, k) = Poly::zero(fp);
        }
        denom = M.at(k, k);
    }
    Poly d = M.at(n - 1, n - 1);
    return neg ? -d : d;
}

}  // namespace

Poly det(const SqMatrix& A) {
    unsigned n = A.n();
    if (n <= 4) {
        std::vector<unsigned> idx(n);
        for (unsigned i = 0; i < n; ++i) idx[i] = i;
        return det_cofactor(A, idx, idx);
    }
    return det_bareiss(A);
}

void ElemWord::push(unsigned i, unsigned j, Poly t) {
    if (t.is_zero()) return;  // degenerate move, dropped
    if (i == j) throw ValidationError("elementary matrix requires i != j");
    fs_.push_back(ElemMat{i, j, std::move(t)});
}

void ElemWord::append(const ElemWord& w) {
    fs_.insert(fs_.end(), w.fs_.begin(), w.fs_.end());
}

SqMatrix word_product(const FieldPtr& f, unsigned n, const ElemWord& w) {
    SqMatrix M(f, n);
    for (const auto& e : w.factors()) M.col_op(e.i, e.j, e.t);  // M *= E_ij(t)
    return M;
}

SqMatrix apply_word(const SqMatrix& M, const ElemWord& w, Side side) {
    SqMatrix R = M;
    if (side == Side::Right) {
        for (const auto& e : w.factors()) R.col_op(e.i, e.j, e.t);
    } else {
        for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it)
            R.row_op(it->i, it->j, it->t);
    }
    return R;
}

ElemWord word_inverse(const ElemWord& w) {
    ElemWord r;
    for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it)
        r.push(it->i, it->j, -it->t);
    return r;
}

ElemWord word_transpose(const ElemWord& w) {
    ElemWord r;
    for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it)
        r.push(it->j, it->i, it->t);
    return r;
}

ElemWord word_conjugate_by_diagonal(const ElemWord& w, const FieldSpec& F,
                                    const std::vector<FieldElement>& d) {
    for (const auto& u : d)
        if (u.is_zero()) throw ValidationError("diagonal conjugation requires units");
    ElemWord r;
    for (const auto& e : w.factors()) {
        FieldElement s = ff_mul(F, d[e.i], ff_inv(F, d[e.j]));
        r.push(e.i, e.j, scale(e.t, s));
    }
    return r;
}

ElemWord unit_diag_word(const FieldPtr& f, const FieldElement& w, unsigned i, unsigned j,
                        unsigned n) {
    if (w.is_zero()) throw ValidationError("unit_diag_word requires a unit");
    if (i == j || i >= n || j >= n) throw ValidationError("unit_diag_word bad indices");
    const FieldSpec& F = *f;
    ElemWord r;
    FieldElement one = FieldElement::one(F);
    if (w == one) return r;
    // E_ij(1) E_ji(w-1) E_ij(-w^-1) E_ji(-w(w-1)) = diag(w at i, w^-1 at j)
    FieldElement wm1 = ff_sub(F, w, one);
    r.push(i, j, Poly::one(f));
    r.push(j, i, Poly::constant(f, wm1));
    r.push(i, j, Poly::constant(f, ff_neg(F, ff_inv(F, w))));
    r.push(j, i, Poly::constant(f, ff_neg(F, ff_mul(F, w, wm1))));
    return r;
}

size_t elementary_bound(unsigned n) { return (size_t(3) * n * n - n) / 2 + 29; }

bool verify(Certificate& cert) {
    SqMatrix P = word_product(cert.field, cert.n, cert.word);
    cert.length = cert.word.length();
    cert.verified = (P == cert.input) && cert.length <= cert.bound;
    return cert.verified;
}

void MoveTracker::row(unsigned i, unsigned j, const Poly& t) {
    if (t.is_zero()) return;
    M_.row_op(i, j, t);
    left_app_.push_back(ElemMat{i, j, t});
    debug_check_det();
}

void MoveTracker::col(unsigned i, unsigned j, const Poly& t) {
    if (t.is_zero()) return;
    M_.col_op(i, j, t);
    right_app_.push_back(ElemMat{i, j, t});
    debug_check_det();
}

void MoveTracker::debug_check_det() const {
#ifndef NDEBUG
    // every move must preserve the determinant of the working matrix
    if (!(det(M_) == *det0_)) throw InternalError("move changed the determinant");
#endif
}

ElemWord MoveTracker::left() const {
    ElemWord w;
    for (auto it = left_app_.rbegin(); it != left_app_.rend(); ++it) w.push(it->i, it->j, it->t);
    return w;
}

ElemWord MoveTracker::right() const {
    ElemWord w;
    for (const auto& e : right_app_) w.push(e.i, e.j, e.t);
    return w;
}

}  // namespace elemgen
