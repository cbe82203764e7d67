#include "largeness/integer_matrix.hpp"

#include <algorithm>

namespace largeness {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

namespace {

void row_op(IntMatrix& m, IntMatrix& u, int dst, int src, const Int& q) {
    // row dst -= q * row src
    for (int j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
    for (int j = 0; j < u.cols; ++j) u.at(dst, j) -= q * u.at(src, j);
}

void col_op(IntMatrix& m, IntMatrix& v, int dst, int src, const Int& q) {
    for (int i = 0; i < m.rows; ++i) m.at(i, dst) -= q * m.at(i, src);
    for (int i = 0; i < v.rows; ++i) v.at(i, dst) -= q * v.at(i, src);
}

void swap_rows(IntMatrix& m, IntMatrix& u, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
}

void swap_cols(IntMatrix& m, IntMatrix& v, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
}

} // namespace

SmithNormalForm smith_normal_form(const IntMatrix& input) {
    SmithNormalForm s;
    s.d = input;
    s.u = IntMatrix::identity(input.rows);
    s.v = IntMatrix::identity(input.cols);
    IntMatrix& m = s.d;

    int t = 0;
    int lim = std::min(m.rows, m.cols);
    while (t < lim) {
        // locate smallest nonzero |entry| in the trailing submatrix
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                const Int& e = m.at(i, j);
                if (e == 0) continue;
                if (pi < 0 || abs(e) < abs(m.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // trailing block is zero
        swap_rows(m, s.u, t, pi);
        swap_cols(m, s.v, t, pj);

        for (;;) {
            bool again = false;
            // clear the pivot column
            for (int i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);
                row_op(m, s.u, i, t, q);
                if (m.at(i, t) != 0) {
                    // remainder smaller than pivot: promote it
                    swap_rows(m, s.u, t, i);
                    again = true;
                }
            }
            if (again) continue;
            // clear the pivot row
            for (int j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                col_op(m, s.v, j, t, q);
                if (m.at(t, j) != 0) {
                    swap_cols(m, s.v, t, j);
                    again = true;
                }
            }
            if (again) continue;
            // divisibility of the trailing block by the pivot
            bool fixed = true;
            for (int i = t + 1; i < m.rows && fixed; ++i)
                for (int j = t + 1; j < m.cols && fixed; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        // fold row i into row t and re-eliminate
                        for (int c = 0; c < m.cols; ++c) m.at(t, c) += m.at(i, c);
                        for (int c = 0; c < s.u.cols; ++c) s.u.at(t, c) += s.u.at(i, c);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (m.at(t, t) < 0) {
            for (int c = 0; c < m.cols; ++c) m.at(t, c) = -m.at(t, c);
            for (int c = 0; c < s.u.cols; ++c) s.u.at(t, c) = -s.u.at(t, c);
        }
        ++t;
    }
    return s;
}

} // namespace largeness
