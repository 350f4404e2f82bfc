#include "germlab/action.hpp"

#include <algorithm>
#include <functional>

namespace germlab {

namespace {

Jet<Rational> monomial_jet(int d, int m, const MultiIndex& alpha) {
    Jet<Rational> f(d, m);
    f.set_coefficient(alpha, Rational(1));
    return f;
}

void require_lower_triangular(const Matrix<Rational>& linear, const std::string& what) {
    if (!has_lower_triangular_linear_part(linear))
        throw NonTriangularError(what + " does not have a lower-triangular linear part");
}

Rational diagonal_eigenvalue(const Matrix<Rational>& linear, VarKind kind,
                             const MultiIndex& alpha) {
    // mu^alpha for maps, <lambda, alpha> for fields.
    if (kind == VarKind::Discrete) {
        Rational v(1);
        for (int i = 0; i < alpha.dimension(); ++i)
            if (alpha[i] != 0) v *= rational_pow(linear(i, i), alpha[i]);
        return v;
    }
    Rational v(0);
    for (int i = 0; i < alpha.dimension(); ++i)
        if (alpha[i] != 0) v += Rational(alpha[i]) * linear(i, i);
    return v;
}

Matrix<Rational> build_action(const std::vector<MultiIndex>& basis, int d, int m, VarKind kind,
                              const Matrix<Rational>& linear,
                              const std::function<Jet<Rational>(const Jet<Rational>&)>& act) {
    const int n = static_cast<int>(basis.size());
    std::map<MultiIndex, int, DegLexLess> position;
    for (int i = 0; i < n; ++i) position.emplace(basis[static_cast<std::size_t>(i)], i);

    Matrix<Rational> a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0;
    for (int col = 0; col < n; ++col) {
        const MultiIndex& beta = basis[static_cast<std::size_t>(col)];
        Jet<Rational> image = act(monomial_jet(d, m, beta));
        for (const auto& [gamma, c] : image.terms()) {
            int row = position.at(gamma);
            a(row, col) = c;
            // Triangular structure: fill-ins are of higher degree, or of
            // equal degree and deg-lex below the column monomial.
            if (row != col && gamma.degree() == beta.degree() &&
                deglex_compare(gamma, beta) == std::strong_ordering::greater)
                throw Error("action matrix lost triangularity");
        }
        Rational expected = diagonal_eigenvalue(linear, kind, beta);
        if (a(col, col) != expected) throw Error("action matrix diagonal mismatch");
    }
    return a;
}

} // namespace

Matrix<Rational> action_matrix(const FormalMap<Rational>& f, int order) {
    require_lower_triangular(f.linear_part(), "map");
    auto basis = monomial_basis(f.dimension(), order);
    return build_action(basis, f.dimension(), order, VarKind::Discrete, f.linear_part(),
                        [&](const Jet<Rational>& g) { return pullback(f, g); });
}

Matrix<Rational> action_matrix(const FormalVectorField<Rational>& v, int order) {
    require_lower_triangular(v.linear_part(), "field");
    auto basis = monomial_basis(v.dimension(), order);
    return build_action(basis, v.dimension(), order, VarKind::Continuous, v.linear_part(),
                        [&](const Jet<Rational>& g) { return derive(v, g); });
}

Matrix<Rational> action_matrix(const GroupGenerator& g, int order) {
    return g.kind == VarKind::Discrete ? action_matrix(g.map, order)
                                       : action_matrix(g.field, order);
}

SpectrumLattice spectrum_of_group(std::span<const GroupGenerator> generators) {
    SpectrumLattice lattice;
    for (const GroupGenerator& g : generators) {
        require_lower_triangular(g.linear_part(), "generator " + g.name);
        std::vector<Rational> diag;
        for (int i = 0; i < g.dimension(); ++i) diag.push_back(g.linear_part()(i, i));
        std::sort(diag.begin(), diag.end());
        diag.erase(std::unique(diag.begin(), diag.end()), diag.end());
        lattice.components.push_back({g.name, g.kind, std::move(diag)});
    }
    return lattice;
}

QpVarsPtr group_time_variables(std::span<const GroupGenerator> generators) {
    QpVars vars;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        std::string name = generators.size() == 1 ? "t" : "t" + std::to_string(i + 1);
        vars.push_back({std::move(name), generators[i].kind});
    }
    return make_qp_vars(std::move(vars));
}

std::vector<Quasipolynomial> symbolic_action(const GroupGenerator& g, int var,
                                             const QpVarsPtr& vars,
                                             std::span<const Quasipolynomial> start,
                                             int order) {
    const int d = g.dimension();
    const Matrix<Rational> a = action_matrix(g, order);
    const auto basis = monomial_basis(d, order);
    const int n = static_cast<int>(basis.size());
    if (static_cast<int>(start.size()) != n) throw ShapeError("orbit start vector size");

    if (g.kind == VarKind::Discrete) {
        for (int i = 0; i < d; ++i)
            if (is_zero(g.linear_part()(i, i)))
                throw NotInvertibleError("generator " + g.name +
                                         " is not invertible; its iterates have no "
                                         "quasipolynomial orbit coefficients");
    }

    std::vector<Quasipolynomial> result(static_cast<std::size_t>(n));
    std::vector<char> solved(static_cast<std::size_t>(n), 0);
    for (int idx : triangular_solve_order(basis)) {
        Quasipolynomial forcing = Quasipolynomial::constant(vars, Rational(0));
        for (int col = 0; col < n; ++col) {
            if (col == idx || is_zero(a(idx, col))) continue;
            if (!solved[static_cast<std::size_t>(col)])
                throw Error("triangular solve order violated");
            forcing += Quasipolynomial::constant(vars, a(idx, col)) *
                       result[static_cast<std::size_t>(col)];
        }
        const Rational& diag = a(idx, idx);
        result[static_cast<std::size_t>(idx)] =
            g.kind == VarKind::Discrete
                ? solve_discrete_recurrence(var, diag, forcing,
                                            start[static_cast<std::size_t>(idx)])
                : solve_linear_ode(var, diag, forcing, start[static_cast<std::size_t>(idx)]);
        solved[static_cast<std::size_t>(idx)] = 1;
    }
    return result;
}

std::vector<Quasipolynomial> orbit_vector(std::span<const GroupGenerator> generators,
                                          const Jet<Rational>& f, int order,
                                          const QpVarsPtr& vars) {
    const auto basis = monomial_basis(f.dimension(), order);
    std::vector<Quasipolynomial> y;
    y.reserve(basis.size());
    for (const MultiIndex& alpha : basis)
        y.push_back(Quasipolynomial::constant(vars, f.coefficient(alpha)));
    // G(t)* = (g_r^{t_r})* ... (g_1^{t_1})*: apply generators front to back.
    for (std::size_t k = 0; k < generators.size(); ++k)
        y = symbolic_action(generators[k], static_cast<int>(k), vars, y, order);
    return y;
}

Quasipolynomial orbit_coefficient(const GroupGenerator& g, const Jet<Rational>& f,
                                  const MultiIndex& alpha, int order) {
    QpVarsPtr vars = group_time_variables({&g, 1});
    auto y = orbit_vector({&g, 1}, f, order, vars);
    const auto basis = monomial_basis(f.dimension(), order);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == alpha) return y[i];
    throw ShapeError("target multi-index outside the truncated basis");
}

Matrix<Quasipolynomial> orbit_matrix(const GroupGenerator& g, int order) {
    QpVarsPtr vars = group_time_variables({&g, 1});
    const auto basis = monomial_basis(g.dimension(), order);
    const int n = static_cast<int>(basis.size());
    Matrix<Quasipolynomial> m(n, n);
    for (int col = 0; col < n; ++col) {
        auto y = orbit_vector({&g, 1}, monomial_jet(g.dimension(), order,
                                                    basis[static_cast<std::size_t>(col)]),
                              order, vars);
        for (int row = 0; row < n; ++row) m(row, col) = y[static_cast<std::size_t>(row)];
    }
    return m;
}

} // namespace germlab
