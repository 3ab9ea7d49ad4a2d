#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "elemgen/poly.hpp"

namespace elemgen {

// Dense n x n matrix over F_q[X].
class SqMatrix {
public:
    SqMatrix(FieldPtr f, unsigned n);  // identity
    static SqMatrix identity(FieldPtr f, unsigned n) { return SqMatrix(std::move(f), n); }

    unsigned n() const { return n_; }
    const FieldSpec& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }

    const Poly& at(unsigned i, unsigned j) const { return e_[size_t(i) * n_ + j]; }
    Poly& at(unsigned i, unsigned j) { return e_[size_t(i) * n_ + j]; }

    bool is_identity() const;
    bool operator==(const SqMatrix& o) const;

    SqMatrix transposed() const;
    // row i += t * row j
    void row_op(unsigned i, unsigned j, const Poly& t);
    // col j += t * col i
    void col_op(unsigned i, unsigned j, const Poly& t);

    int max_entry_degree() const;

private:
    FieldPtr f_;
    unsigned n_;
    std::vector<Poly> e_;
};

SqMatrix mat_mul(const SqMatrix& A, const SqMatrix& B);
// exact determinant: cofactor expansion for n <= 4, fraction-free Bareiss above
Poly det(const SqMatrix& A);

// Elementary matrix I + t * E_ij, i != j (0-based internally; serialized 1-based).
struct ElemMat {
    unsigned i, j;
    Poly t;
};

// Ordered product of elementary matrices, read left to right.
// Identity factors (t = 0) are never stored.
class ElemWord {
public:
    ElemWord() = default;

    void push(unsigned i, unsigned j, Poly t);
    void append(const ElemWord& w);
    size_t length() const { return fs_.size(); }
    bool empty() const { return fs_.empty(); }
    const std::vector<ElemMat>& factors() const { return fs_; }

private:
    std::vector<ElemMat> fs_;
};

enum class Side { Left, Right };

SqMatrix word_product(const FieldPtr& f, unsigned n, const ElemWord& w);
// Left: product(w) * M; Right: M * product(w)
SqMatrix apply_word(const SqMatrix& M, const ElemWord& w, Side side);

ElemWord word_inverse(const ElemWord& w);
ElemWord word_transpose(const ElemWord& w);
// each E_ij(t) -> E_ij(d_i t d_j^-1); product equals D w D^-1, D = diag(d)
ElemWord word_conjugate_by_diagonal(const ElemWord& w, const FieldSpec& F,
                                    const std::vector<FieldElement>& d);

// 4-factor word with product diag(..., w at i, ..., w^-1 at j, ...); empty for w = 1
ElemWord unit_diag_word(const FieldPtr& f, const FieldElement& w, unsigned i, unsigned j,
                        unsigned n);

struct Certificate {
    FieldPtr field;
    unsigned n = 0;
    SqMatrix input;
    ElemWord word;
    size_t length = 0;
    size_t bound = 0;  // nu_n
    bool verified = false;
    std::map<std::string, size_t> breakdown;  // moves per pipeline phase
};

// nu_n = (3n^2 - n)/2 + 29
size_t elementary_bound(unsigned n);

// recompute product(word) == input and length <= bound; updates cert.verified
bool verify(Certificate& cert);

// Applies row/column moves to a working matrix while recording both words:
// product(left()) * M_original * product(right()) == current matrix.
class MoveTracker {
public:
    explicit MoveTracker(SqMatrix M) : M_(std::move(M)) {
#ifndef NDEBUG
        det0_.emplace(det(M_));
#endif
    }

    const SqMatrix& mat() const { return M_; }
    SqMatrix& mat() { return M_; }

    void row(unsigned i, unsigned j, const Poly& t);  // row i += t row j
    void col(unsigned i, unsigned j, const Poly& t);  // col j += t col i

    size_t moves() const { return left_app_.size() + right_app_.size(); }
    size_t left_count() const { return left_app_.size(); }
    size_t right_count() const { return right_app_.size(); }

    ElemWord left() const;   // application order reversed into product order
    ElemWord right() const;  // already in product order

private:
    void debug_check_det() const;

    SqMatrix M_;
    std::vector<ElemMat> left_app_, right_app_;
#ifndef NDEBUG
    std::optional<Poly> det0_;
#endif
};

}  // namespace elemgen
