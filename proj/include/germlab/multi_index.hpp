#pragma once

#include <compare>
#include <vector>

namespace germlab {

/// Exponent vector of a monomial in d variables.
class MultiIndex {
  public:
    MultiIndex() = default;
    explicit MultiIndex(int dimension) : exps_(static_cast<std::size_t>(dimension), 0) {}
    explicit MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {}

    /// The i-th coordinate unit exponent e_i.
    static MultiIndex unit(int dimension, int axis);

    int dimension() const { return static_cast<int>(exps_.size()); }
    int degree() const;
    int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return exps_[static_cast<std::size_t>(i)]; }

    MultiIndex operator+(const MultiIndex& other) const;
    /// Componentwise <=, i.e. x^this divides x^other.
    bool divides(const MultiIndex& other) const;
    /// other - this, requires divides(other).
    MultiIndex complement_in(const MultiIndex& other) const;

    bool operator==(const MultiIndex&) const = default;

  private:
    std::vector<int> exps_;
};

/// Total order: ascending degree first; on equal degree the index with the
/// larger exponent at the smallest differing position comes first, so among
/// degree-one monomials x1 < x2 < ... < xd.
std::strong_ordering deglex_compare(const MultiIndex& a, const MultiIndex& b);

struct DegLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return deglex_compare(a, b) == std::strong_ordering::less;
    }
};

/// All multi-indices of degree <= max_degree in deg-lex order;
/// size C(max_degree + dimension, dimension).
std::vector<MultiIndex> monomial_basis(int dimension, int max_degree);

/// Basis positions reordered so that triangular pullback/derivation actions
/// can be resolved front to back: degree ascending, reversed tie-break.
std::vector<int> triangular_solve_order(const std::vector<MultiIndex>& basis);

} // namespace germlab
