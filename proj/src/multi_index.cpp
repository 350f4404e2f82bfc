#include "germlab/multi_index.hpp"

#include "germlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace germlab {

MultiIndex MultiIndex::unit(int dimension, int axis) {
    MultiIndex e(dimension);
    e[axis] = 1;
    return e;
}

int MultiIndex::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    if (dimension() != other.dimension()) throw ShapeError("multi-index dimension mismatch");
    MultiIndex r(*this);
    for (int i = 0; i < dimension(); ++i) r[i] += other[i];
    return r;
}

bool MultiIndex::divides(const MultiIndex& other) const {
    if (dimension() != other.dimension()) throw ShapeError("multi-index dimension mismatch");
    for (int i = 0; i < dimension(); ++i)
        if (exps_[static_cast<std::size_t>(i)] > other[i]) return false;
    return true;
}

MultiIndex MultiIndex::complement_in(const MultiIndex& other) const {
    if (!divides(other)) throw ShapeError("multi-index does not divide");
    MultiIndex r(other);
    for (int i = 0; i < dimension(); ++i) r[i] -= exps_[static_cast<std::size_t>(i)];
    return r;
}

std::strong_ordering deglex_compare(const MultiIndex& a, const MultiIndex& b) {
    if (a.dimension() != b.dimension()) throw ShapeError("multi-index dimension mismatch");
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int i = 0; i < a.dimension(); ++i)
        if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

namespace {

void enumerate(int dimension, int axis, int remaining, MultiIndex& scratch,
               std::vector<MultiIndex>& out) {
    if (axis == dimension) {
        out.push_back(scratch);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        scratch[axis] = e;
        enumerate(dimension, axis + 1, remaining - e, scratch, out);
    }
    scratch[axis] = 0;
}

} // namespace

std::vector<MultiIndex> monomial_basis(int dimension, int max_degree) {
    if (dimension <= 0) throw ShapeError("dimension must be positive");
    if (max_degree < 0) throw ShapeError("truncation order must be nonnegative");
    std::vector<MultiIndex> basis;
    MultiIndex scratch(dimension);
    enumerate(dimension, 0, max_degree, scratch, basis);
    std::sort(basis.begin(), basis.end(), DegLexLess{});
    return basis;
}

std::vector<int> triangular_solve_order(const std::vector<MultiIndex>& basis) {
    std::vector<int> order(basis.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const MultiIndex& a = basis[static_cast<std::size_t>(i)];
        const MultiIndex& b = basis[static_cast<std::size_t>(j)];
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return deglex_compare(a, b) == std::strong_ordering::greater;
    });
    return order;
}

} // namespace germlab
