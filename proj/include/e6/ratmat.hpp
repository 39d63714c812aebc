#pragma once

#include "e6/numeric.hpp"

#include <vector>

namespace e6 {

// Dense matrix over exact rationals.
struct QMat {
    size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Rat& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

// In-place reduced row echelon form; returns the pivot column list.
std::vector<size_t> rref(QMat& m);

size_t rank(QMat m);

// Kernel basis of m (as row vectors of length m.cols), built from the RREF
// free columns in increasing order: deterministic for a fixed column order.
std::vector<std::vector<Rat>> kernel_basis(QMat m);

// Inverse of a square matrix; throws consistency_error if singular.
QMat inverse(QMat m);

// Solve A x = b for square A.
std::vector<Rat> solve(QMat a, const std::vector<Rat>& b);

// Exact integer determinant (fraction-free Bareiss).
Int det_int(std::vector<std::vector<Int>> m);

}  // namespace e6
