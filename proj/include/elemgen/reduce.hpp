#pragma once

#include "elemgen/matrix.hpp"

namespace elemgen {

// product(left) * M * product(right) = framed(core): the 2x2 core sits in the
// top-left corner with I_{n-2} elsewhere.
struct FramedReduction {
    ElemWord left, right;
    SqMatrix core;  // 2x2, det 1
    size_t moves_used = 0;
};

// column moves after which entries (pair.first, pair.second) of the row are
// coprime; at most k-2 folds for a length-k row
struct FoldResult {
    std::vector<ElemMat> col_moves;  // application order
    unsigned first = 0, second = 1;  // designated coprime pair
};
FoldResult coprimify_last_row(const std::vector<Poly>& row);

// stable range reduction, <= (3n^2 - n)/2 - 5 moves; requires n >= 3, det = 1
FramedReduction reduce_to_framed(const SqMatrix& M);

size_t stable_range_bound(unsigned n);  // (3n^2 - n)/2 - 5

}  // namespace elemgen
