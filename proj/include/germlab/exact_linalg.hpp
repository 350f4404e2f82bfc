#pragma once

#include "germlab/eigen_support.hpp"
#include "germlab/errors.hpp"
#include "germlab/rational.hpp"

namespace germlab {

/// Rank over the fraction field of the coefficient domain, by fraction-free
/// (Bareiss) elimination. Pivots are chosen deterministically: columns are
/// scanned left to right and within a column the first remaining row with a
/// nonzero entry wins. After k steps every active entry is a (k+1)-minor of
/// the input, so the division by the previous pivot is exact in the domain.
template <CoefficientRing S>
int exact_rank(Matrix<S> m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    int rank = 0;
    S prev(1);
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot_row = -1;
        for (Eigen::Index i = rank; i < rows; ++i) {
            if (!is_zero(m(i, col))) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));
        const S pivot = m(rank, col);
        for (Eigen::Index i = rank + 1; i < rows; ++i) {
            const S head = m(i, col);
            const bool head_zero = is_zero(head);
            for (Eigen::Index j = col + 1; j < cols; ++j) {
                if (head_zero) {
                    if (is_zero(m(i, j))) continue;
                    m(i, j) = div_exact(m(i, j) * pivot, prev);
                } else {
                    if (is_zero(m(i, j)) && is_zero(m(rank, j))) continue;
                    m(i, j) = div_exact(m(i, j) * pivot - head * m(rank, j), prev);
                }
            }
            m(i, col) = S(0);
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

/// Determinant of a square matrix by the same fraction-free scheme;
/// zero as soon as a pivot column dies.
template <CoefficientRing S>
S bareiss_determinant(Matrix<S> m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw ShapeError("determinant of a non-square matrix");
    if (n == 0) return S(1);
    S prev(1);
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        Eigen::Index pivot_row = -1;
        for (Eigen::Index i = k; i < n; ++i) {
            if (!is_zero(m(i, k))) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) return S(0);
        if (pivot_row != k) {
            m.row(pivot_row).swap(m.row(k));
            sign = -sign;
        }
        const S pivot = m(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            const S head = m(i, k);
            const bool head_zero = is_zero(head);
            for (Eigen::Index j = k + 1; j < n; ++j) {
                if (head_zero) {
                    if (is_zero(m(i, j))) continue;
                    m(i, j) = div_exact(m(i, j) * pivot, prev);
                } else {
                    if (is_zero(m(i, j)) && is_zero(m(k, j))) continue;
                    m(i, j) = div_exact(m(i, j) * pivot - head * m(k, j), prev);
                }
            }
            m(i, k) = S(0);
        }
        prev = pivot;
    }
    S det = m(n - 1, n - 1);
    return sign < 0 ? S(-det) : det;
}

/// Inverse of a rational matrix by Gauss-Jordan elimination.
Matrix<Rational> inverse_rational(Matrix<Rational> m);

} // namespace germlab
