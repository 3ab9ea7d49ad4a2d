#include "elemgen/reduce.hpp"

namespace elemgen {

size_t stable_range_bound(unsigned n) { return (size_t(3) * n * n - n) / 2 - 5; }

FoldResult coprimify_last_row(const std::vector<Poly>& row_in) {
    size_t k = row_in.size();
    if (k < 3) throw ValidationError("coprimify_last_row needs length >= 3");
    std::vector<Poly> row = row_in;
    auto fp = row[0].field_ptr();

    Poly g = row[0];
    for (size_t j = 1; j < k; ++j) g = gcd(g, row[j]);
    if (g.degree() != 0) throw ValidationError("row gcd must be 1");

    FoldResult res;
    size_t alpha = k;  // first nonzero among the first k-1 entries
    for (size_t j = 0; j + 1 < k; ++j)
        if (!row[j].is_zero()) {
            alpha = j;
            break;
        }
    if (alpha == k) {
        // unit tail (0,...,0,unit): no folds; the stage's unit branch takes over
        res.first = 0;
        res.second = 1;
        return res;
    }
    size_t beta = alpha == 0 ? 1 : 0;
    res.first = unsigned(alpha);
    res.second = unsigned(beta);

    std::vector<size_t> idxs;
    for (size_t j = 0; j < k; ++j)
        if (j != alpha && j != beta && !row[j].is_zero()) idxs.push_back(j);

    const Poly& u = row[alpha];
    for (size_t pos = 0; pos < idxs.size(); ++pos) {
        if (gcd(u, row[beta]).degree() == 0) break;
        Poly uprime = u;
        for (size_t p2 = pos + 1; p2 < idxs.size(); ++p2) uprime = gcd(uprime, row[idxs[p2]]);
        Poly t = coprime_shift(uprime, row[beta], row[idxs[pos]]);
        res.col_moves.push_back(ElemMat{unsigned(idxs[pos]), unsigned(beta), t});
        row[beta] = row[beta] + t * row[idxs[pos]];
    }
    if (res.col_moves.size() > k - 2) throw InternalError("fold budget exceeded");
    if (gcd(u, row[beta]).degree() != 0) throw InternalError("fold did not reach coprimality");
    return res;
}

FramedReduction reduce_to_framed(const SqMatrix& M) {
    unsigned n = M.n();
    if (n < 3)
        throw ValidationError(
            "SL2(F[X]) is not boundedly generated by the elementary matrices; n >= 3 required");
    auto fp = M.field_ptr();
    if (!det(M).is_one()) throw ValidationError("matrix is not in SL_n: det != 1");

    MoveTracker wk(M);
    const FieldSpec& F = M.field();
    Poly one = Poly::one(fp);

    for (unsigned k = n; k >= 3; --k) {
        size_t start = wk.moves();
        unsigned last = k - 1;
        if (!wk.mat().at(last, last).is_one()) {
            bool prefix_zero = true;
            for (unsigned j = 0; j < last; ++j)
                if (!wk.mat().at(last, j).is_zero()) {
                    prefix_zero = false;
                    break;
                }
            if (prefix_zero) {
                // last row is (0,...,0,w) with w a unit
                const Poly& w = wk.mat().at(last, last);
                if (w.degree() != 0) throw InternalError("unit tail is not a unit");
                FieldElement wc = w.coeff(0);
                FieldElement winv = ff_inv(F, wc);
                wk.col(last, 0, Poly::constant(fp, winv));  // C_1 += w^-1 C_k
                wk.col(0, last,
                       Poly::constant(fp, ff_sub(F, FieldElement::one(F), wc)));  // C_k += (1-w) C_1
            } else {
                std::vector<Poly> row;
                for (unsigned j = 0; j < k; ++j) row.push_back(wk.mat().at(last, j));
                FoldResult fr = coprimify_last_row(row);
                for (const auto& mv : fr.col_moves) wk.col(mv.i, mv.j, mv.t);
                const Poly& u = wk.mat().at(last, fr.first);
                const Poly& v = wk.mat().at(last, fr.second);
                PolyXgcd bez = xgcd(u, v);
                if (!bez.g.is_one()) throw InternalError("designated pair not coprime");
                // two moves make the corner 1: C_k += (1-w)(alpha u + beta v) spread over the pair
                Poly lam = one - wk.mat().at(last, last);
                wk.col(fr.first, last, lam * bez.alpha);
                wk.col(fr.second, last, lam * bez.beta);
            }
        }
        if (!wk.mat().at(last, last).is_one()) throw InternalError("corner is not 1");
        for (unsigned j = 0; j < last; ++j)
            if (!wk.mat().at(last, j).is_zero()) wk.col(last, j, -wk.mat().at(last, j));
        for (unsigned i = 0; i < last; ++i)
            if (!wk.mat().at(i, last).is_zero()) wk.row(i, last, -wk.mat().at(i, last));
        size_t used = wk.moves() - start;
        if (used > size_t(3) * k - 2) throw InternalError("stage move budget exceeded");
    }
    if (wk.moves() > stable_range_bound(n)) throw InternalError("stable range budget exceeded");

    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (i >= 2 || j >= 2) {
                bool ok = (i == j) ? wk.mat().at(i, j).is_one() : wk.mat().at(i, j).is_zero();
                if (!ok) throw InternalError("reduction did not reach framed form");
            }

    FramedReduction out{wk.left(), wk.right(), SqMatrix(fp, 2), wk.moves()};
    out.core.at(0, 0) = wk.mat().at(0, 0);
    out.core.at(0, 1) = wk.mat().at(0, 1);
    out.core.at(1, 0) = wk.mat().at(1, 0);
    out.core.at(1, 1) = wk.mat().at(1, 1);
    if (!det(out.core).is_one()) throw InternalError("core determinant != 1");
    return out;
}

}  // namespace elemgen
