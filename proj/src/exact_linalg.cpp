#include "germlab/exact_linalg.hpp"

namespace germlab {

Matrix<Rational> inverse_rational(Matrix<Rational> m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw ShapeError("inverse of a non-square matrix");
    Matrix<Rational> inv = Matrix<Rational>::Identity(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot_row = -1;
        for (Eigen::Index i = k; i < n; ++i) {
            if (!is_zero(m(i, k))) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) throw NotInvertibleError("matrix is singular");
        if (pivot_row != k) {
            m.row(pivot_row).swap(m.row(k));
            inv.row(pivot_row).swap(inv.row(k));
        }
        const Rational pivot = m(k, k);
        for (Eigen::Index j = 0; j < n; ++j) {
            m(k, j) /= pivot;
            inv(k, j) /= pivot;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == k || is_zero(m(i, k))) continue;
            const Rational factor = m(i, k);
            for (Eigen::Index j = 0; j < n; ++j) {
                m(i, j) -= factor * m(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    return inv;
}

} // namespace germlab
