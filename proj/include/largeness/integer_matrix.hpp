#pragma once

#include "largeness/arith.hpp"

#include <vector>

namespace largeness {

/// Dense matrix of exact arbitrary-precision integers.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMatrix identity(int n);
    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);

struct SmithNormalForm {
    IntMatrix d; // diagonal, d1 | d2 | ..., all entries >= 0
    IntMatrix u; // unimodular, u * m * v == d
    IntMatrix v; // unimodular
};

/// Elimination with smallest-nonzero-absolute-value pivoting, rows before
/// columns; exact throughout.
SmithNormalForm smith_normal_form(const IntMatrix& m);

} // namespace largeness
