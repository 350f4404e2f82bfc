#pragma once

#include "germlab/formal.hpp"
#include "germlab/quasipoly.hpp"

#include <span>
#include <string>
#include <vector>

namespace germlab {

/// A named group generator: an invertible self-map iterated over a discrete
/// time variable, or a vector field flowed over a continuous one.
struct GroupGenerator {
    std::string name;
    VarKind kind = VarKind::Discrete;
    FormalMap<Rational> map;
    FormalVectorField<Rational> field;

    static GroupGenerator of(std::string name, FormalMap<Rational> m) {
        GroupGenerator g;
        g.name = std::move(name);
        g.kind = VarKind::Discrete;
        g.map = std::move(m);
        return g;
    }
    static GroupGenerator of(std::string name, FormalVectorField<Rational> v) {
        GroupGenerator g;
        g.name = std::move(name);
        g.kind = VarKind::Continuous;
        g.field = std::move(v);
        return g;
    }

    int dimension() const {
        return kind == VarKind::Discrete ? map.dimension() : field.dimension();
    }
    const Matrix<Rational>& linear_part() const {
        return kind == VarKind::Discrete ? map.linear_part() : field.linear_part();
    }
};

/// Matrix of the pullback F* (resp. the derivation V) on the truncated
/// algebra in the deg-lex monomial basis: entry (row, col) is the
/// coefficient of x^row in the image of x^col. The linear part must be
/// lower-triangular as given; the result is then triangular with respect to
/// the deg-lex diagonal (diagonal mu^alpha resp. <lambda, alpha>) and the
/// structure is verified.
Matrix<Rational> action_matrix(const FormalMap<Rational>& f, int order);
Matrix<Rational> action_matrix(const FormalVectorField<Rational>& v, int order);
Matrix<Rational> action_matrix(const GroupGenerator& g, int order);

/// Diagonal data of one generator: multiplicative eigenvalues for maps,
/// additive for fields.
struct SpectrumLattice {
    struct Component {
        std::string generator;
        VarKind kind;
        std::vector<Rational> generators; // sorted, deduplicated diagonal entries
    };
    std::vector<Component> components;
};

SpectrumLattice spectrum_of_group(std::span<const GroupGenerator> generators);

/// Time variables of a generator tuple: "t" for a single generator,
/// "t1".."tr" otherwise.
QpVarsPtr group_time_variables(std::span<const GroupGenerator> generators);

/// Propagates a coefficient vector through one generator's symbolic power:
/// solves the triangular recurrences (resp. ODEs) along ascending degree.
/// Entries of `start` must not involve the generator's own time variable.
std::vector<Quasipolynomial> symbolic_action(const GroupGenerator& g, int var,
                                             const QpVarsPtr& vars,
                                             std::span<const Quasipolynomial> start,
                                             int order);

/// Coefficients of G(t)* f on the deg-lex basis, as quasipolynomials in the
/// group times. Generators must commute for the result to be meaningful;
/// this routine applies them in the given order.
std::vector<Quasipolynomial> orbit_vector(std::span<const GroupGenerator> generators,
                                          const Jet<Rational>& f, int order,
                                          const QpVarsPtr& vars);

/// The coefficient of x^alpha in (F^t)* f resp. (e^{tv})* f.
Quasipolynomial orbit_coefficient(const GroupGenerator& g, const Jet<Rational>& f,
                                  const MultiIndex& alpha, int order);

/// Full symbolic matrix of the generator's t-th power on the basis.
Matrix<Quasipolynomial> orbit_matrix(const GroupGenerator& g, int order);

} // namespace germlab
