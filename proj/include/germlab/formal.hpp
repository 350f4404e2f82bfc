#pragma once

#include "germlab/eigen_support.hpp"
#include "germlab/errors.hpp"
#include "germlab/exact_linalg.hpp"
#include "germlab/jet.hpp"

#include <span>
#include <string>
#include <vector>

namespace germlab {

namespace detail {

template <CoefficientRing S>
Matrix<S> linear_part_of(std::span<const Jet<S>> components, int dimension) {
    Matrix<S> m(dimension, dimension);
    for (int i = 0; i < dimension; ++i)
        for (int j = 0; j < dimension; ++j)
            m(i, j) = components[static_cast<std::size_t>(i)].coefficient(
                MultiIndex::unit(dimension, j));
    return m;
}

template <CoefficientRing S>
void validate_components(std::span<const Jet<S>> components, const char* what) {
    if (components.empty()) throw ShapeError(std::string(what) + " needs components");
    const int d = components[0].dimension();
    const int m = components[0].order();
    if (static_cast<int>(components.size()) != d)
        throw ShapeError(std::string(what) + " needs one component per variable");
    for (const auto& c : components) {
        if (c.dimension() != d || c.order() != m)
            throw ShapeError(std::string(what) + " components have mismatched shapes");
        if (c.has_constant_term())
            throw ShapeError(std::string(what) + " component has a constant term");
    }
}

} // namespace detail

/// A formal self-map fixing the origin: d jets without constant term.
/// The degree-one coefficients are cached as the Jacobian at 0.
template <CoefficientRing S>
class FormalMap {
  public:
    FormalMap() = default;
    explicit FormalMap(std::vector<Jet<S>> components) : components_(std::move(components)) {
        detail::validate_components<S>(components_, "formal map");
        linear_ = detail::linear_part_of<S>(components_, dimension());
    }

    static FormalMap identity(int dimension, int order) {
        std::vector<Jet<S>> comps;
        for (int i = 0; i < dimension; ++i)
            comps.push_back(coordinate_jet<S>(dimension, order, i));
        return FormalMap(std::move(comps));
    }

    int dimension() const { return static_cast<int>(components_.size()); }
    int order() const { return components_[0].order(); }
    const Jet<S>& component(int i) const { return components_[static_cast<std::size_t>(i)]; }
    std::span<const Jet<S>> components() const { return components_; }
    const Matrix<S>& linear_part() const { return linear_; }

    bool operator==(const FormalMap& other) const { return components_ == other.components_; }

  private:
    std::vector<Jet<S>> components_;
    Matrix<S> linear_;
};

/// A formal vector field vanishing at the origin, acting on jets as a
/// derivation.
template <CoefficientRing S>
class FormalVectorField {
  public:
    FormalVectorField() = default;
    explicit FormalVectorField(std::vector<Jet<S>> components)
        : components_(std::move(components)) {
        detail::validate_components<S>(components_, "vector field");
        linear_ = detail::linear_part_of<S>(components_, dimension());
    }

    int dimension() const { return static_cast<int>(components_.size()); }
    int order() const { return components_[0].order(); }
    const Jet<S>& component(int i) const { return components_[static_cast<std::size_t>(i)]; }
    std::span<const Jet<S>> components() const { return components_; }
    const Matrix<S>& linear_part() const { return linear_; }

    bool operator==(const FormalVectorField& other) const {
        return components_ == other.components_;
    }

  private:
    std::vector<Jet<S>> components_;
    Matrix<S> linear_;
};

/// f pulled back through F, i.e. the jet of f(F(x)). Algebra homomorphism.
template <CoefficientRing S>
Jet<S> pullback(const FormalMap<S>& f, const Jet<S>& jet) {
    if (jet.dimension() != f.dimension() || jet.order() != f.order())
        throw ShapeError("pullback shape mismatch");
    return substitute(jet, f.components());
}

/// The jet of F(G(x)); exact to the common order because both maps fix 0.
template <CoefficientRing S>
FormalMap<S> compose(const FormalMap<S>& f, const FormalMap<S>& g) {
    if (f.dimension() != g.dimension() || f.order() != g.order())
        throw ShapeError("composition shape mismatch");
    std::vector<Jet<S>> comps;
    comps.reserve(static_cast<std::size_t>(f.dimension()));
    for (int i = 0; i < f.dimension(); ++i)
        comps.push_back(substitute(f.component(i), g.components()));
    return FormalMap<S>(std::move(comps));
}

template <CoefficientRing S>
bool is_invertible(const FormalMap<S>& f) {
    return !is_zero(bareiss_determinant<S>(f.linear_part()));
}

/// Compositional inverse to the truncation order, computed by the
/// contraction G -> L^{-1} (id - N(G)), where F = Lx + N and N has no
/// linear part. Rational maps only: inverting L needs a field.
FormalMap<Rational> invert(const FormalMap<Rational>& f);

/// Derivation action: sum_j (df/dx_j) v_j, truncated.
template <CoefficientRing S>
Jet<S> derive(const FormalVectorField<S>& v, const Jet<S>& f) {
    if (f.dimension() != v.dimension() || f.order() != v.order())
        throw ShapeError("derivation shape mismatch");
    Jet<S> r(f.dimension(), f.order());
    for (int j = 0; j < v.dimension(); ++j) r = r + derivative(f, j) * v.component(j);
    return r;
}

template <CoefficientRing S>
FormalVectorField<S> lie_bracket(const FormalVectorField<S>& v, const FormalVectorField<S>& w) {
    if (v.dimension() != w.dimension() || v.order() != w.order())
        throw ShapeError("bracket shape mismatch");
    std::vector<Jet<S>> comps;
    for (int i = 0; i < v.dimension(); ++i)
        comps.push_back(derive(v, w.component(i)) - derive(w, v.component(i)));
    return FormalVectorField<S>(std::move(comps));
}

/// (F_* v)(x) = DF(F^{-1}(x)) v(F^{-1}(x)).
FormalVectorField<Rational> pushforward(const FormalMap<Rational>& f,
                                        const FormalVectorField<Rational>& v);

template <CoefficientRing T, CoefficientRing S, typename Fn>
FormalMap<T> map_coefficients(const FormalMap<S>& f, Fn&& fn) {
    std::vector<Jet<T>> comps;
    for (int i = 0; i < f.dimension(); ++i)
        comps.push_back(map_coefficients<T>(f.component(i), fn));
    return FormalMap<T>(std::move(comps));
}

template <CoefficientRing T, CoefficientRing S, typename Fn>
FormalVectorField<T> map_coefficients(const FormalVectorField<S>& v, Fn&& fn) {
    std::vector<Jet<T>> comps;
    for (int i = 0; i < v.dimension(); ++i)
        comps.push_back(map_coefficients<T>(v.component(i), fn));
    return FormalVectorField<T>(std::move(comps));
}

/// True when the Jacobian at 0 is lower-triangular as given; the diagonal is
/// then the eigenvalue tuple used for spectra and triangular solves.
template <CoefficientRing S>
bool has_lower_triangular_linear_part(const Matrix<S>& linear) {
    for (Eigen::Index i = 0; i < linear.rows(); ++i)
        for (Eigen::Index j = i + 1; j < linear.cols(); ++j)
            if (!is_zero(linear(i, j))) return false;
    return true;
}

/// True when the linear part is nilpotent (exact test: L^d = 0).
template <CoefficientRing S>
bool has_nilpotent_linear_part(const Matrix<S>& linear) {
    Matrix<S> p = linear;
    for (Eigen::Index k = 1; k < linear.rows(); ++k) p = p * linear;
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        for (Eigen::Index j = 0; j < p.cols(); ++j)
            if (!is_zero(p(i, j))) return false;
    return true;
}

/// Pairwise commutativity certificate for a generator system, valid up to
/// the common truncation order only.
struct CommutativityReport {
    struct Check {
        int condition; // 1: maps commute, 2: brackets vanish, 3: maps preserve fields
        std::string left;
        std::string right;
        bool ok;
    };
    std::vector<Check> checks;
    bool all_ok = true;
    int order = 0;
};

CommutativityReport check_commutative(std::span<const std::string> map_names,
                                      std::span<const FormalMap<Rational>> maps,
                                      std::span<const std::string> field_names,
                                      std::span<const FormalVectorField<Rational>> fields);

} // namespace germlab
