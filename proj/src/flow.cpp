#include "germlab/flow.hpp"

namespace germlab {

namespace {

/// Terminating Lie series sum_k (t^k / k!) V^k x_i for nilpotent V.
FormalMap<Quasipolynomial> flow_by_series(const FormalVectorField<Rational>& v,
                                          const QpVarsPtr& vars) {
    const int d = v.dimension();
    const int m = v.order();
    std::vector<Jet<Quasipolynomial>> comps;
    for (int i = 0; i < d; ++i) {
        Jet<Quasipolynomial> acc(d, m);
        Jet<Rational> cur = coordinate_jet<Rational>(d, m, i);
        Rational factorial(1);
        for (int k = 0; !cur.is_zero(); ++k) {
            if (k > 0) factorial *= k;
            QpPoly tk = QpPoly::monomial(static_cast<int>(vars->size()),
                                         MultiIndex({k}), Rational(1) / factorial);
            Quasipolynomial scale =
                Quasipolynomial::exponential_term(vars, BaseVec::trivial(*vars), tk);
            acc = acc + map_coefficients<Quasipolynomial>(
                            cur, [&](const Rational& c) {
                                return scale * Quasipolynomial::constant(vars, c);
                            });
            cur = derive(v, cur);
        }
        comps.push_back(std::move(acc));
    }
    return FormalMap<Quasipolynomial>(std::move(comps));
}

} // namespace

FormalMap<Quasipolynomial> flow_symbolic(const FormalVectorField<Rational>& v,
                                         const std::string& time_symbol) {
    QpVarsPtr vars = make_qp_vars({{time_symbol, VarKind::Continuous}});
    if (has_nilpotent_linear_part(v.linear_part())) return flow_by_series(v, vars);
    if (!has_lower_triangular_linear_part(v.linear_part()))
        throw NonTriangularError(
            "field linear part is neither nilpotent nor lower-triangular");

    const int d = v.dimension();
    const int m = v.order();
    const auto basis = monomial_basis(d, m);
    GroupGenerator gen = GroupGenerator::of("flow", v);
    std::vector<Jet<Quasipolynomial>> comps;
    for (int i = 0; i < d; ++i) {
        auto y = orbit_vector({&gen, 1}, coordinate_jet<Rational>(d, m, i), m, vars);
        Jet<Quasipolynomial> c(d, m);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!y[k].is_zero()) c.set_coefficient(basis[k], y[k]);
        comps.push_back(std::move(c));
    }
    return FormalMap<Quasipolynomial>(std::move(comps));
}

FormalMap<Laurent> flow_at(const FormalVectorField<Rational>& v, const Rational& time) {
    FormalMap<Quasipolynomial> sym = flow_symbolic(v, "t");
    const Rational point[] = {time};
    return map_coefficients<Laurent>(
        sym, [&](const Quasipolynomial& q) { return qp_eval(q, point); });
}

FormalMap<Rational> flow_at_rational(const FormalVectorField<Rational>& v,
                                     const Rational& time) {
    FormalMap<Laurent> f = flow_at(v, time);
    return map_coefficients<Rational>(f, [](const Laurent& c) { return c.to_rational(); });
}

} // namespace germlab
