#include "germlab/formal.hpp"

namespace germlab {

namespace {

FormalMap<Rational> linear_map(const Matrix<Rational>& l, int order) {
    const int d = static_cast<int>(l.rows());
    std::vector<Jet<Rational>> comps;
    for (int i = 0; i < d; ++i) {
        Jet<Rational> c(d, order);
        for (int j = 0; j < d; ++j) c.set_coefficient(MultiIndex::unit(d, j), l(i, j));
        comps.push_back(std::move(c));
    }
    return FormalMap<Rational>(std::move(comps));
}

} // namespace

FormalMap<Rational> invert(const FormalMap<Rational>& f) {
    if (!is_invertible(f))
        throw NotInvertibleError("map has singular linear part");
    const int d = f.dimension();
    const int m = f.order();
    const FormalMap<Rational> linv = linear_map(inverse_rational(f.linear_part()), m);

    // Nonlinear remainder N = F - Lx (order >= 2 components).
    std::vector<Jet<Rational>> nonlinear;
    for (int i = 0; i < d; ++i) {
        Jet<Rational> n = f.component(i);
        for (int j = 0; j < d; ++j)
            n.set_coefficient(MultiIndex::unit(d, j), Rational(0));
        nonlinear.push_back(std::move(n));
    }

    FormalMap<Rational> g = linv;
    for (int step = 0; step < m; ++step) {
        // G <- L^{-1} (id - N(G)); each pass fixes one more order.
        std::vector<Jet<Rational>> comps;
        for (int i = 0; i < d; ++i)
            comps.push_back(coordinate_jet<Rational>(d, m, i) -
                            substitute<Rational>(nonlinear[static_cast<std::size_t>(i)],
                                                 g.components()));
        FormalMap<Rational> next = compose(linv, FormalMap<Rational>(std::move(comps)));
        if (next == g) break;
        g = std::move(next);
    }
    return g;
}

FormalVectorField<Rational> pushforward(const FormalMap<Rational>& f,
                                        const FormalVectorField<Rational>& v) {
    if (f.dimension() != v.dimension() || f.order() != v.order())
        throw ShapeError("pushforward shape mismatch");
    const int d = f.dimension();
    const FormalMap<Rational> g = invert(f);
    std::vector<Jet<Rational>> vg;
    for (int j = 0; j < d; ++j) vg.push_back(pullback(g, v.component(j)));
    std::vector<Jet<Rational>> comps;
    for (int i = 0; i < d; ++i) {
        Jet<Rational> acc(d, f.order());
        for (int j = 0; j < d; ++j)
            acc = acc + pullback(g, derivative(f.component(i), j)) *
                            vg[static_cast<std::size_t>(j)];
        comps.push_back(std::move(acc));
    }
    return FormalVectorField<Rational>(std::move(comps));
}

CommutativityReport check_commutative(std::span<const std::string> map_names,
                                      std::span<const FormalMap<Rational>> maps,
                                      std::span<const std::string> field_names,
                                      std::span<const FormalVectorField<Rational>> fields) {
    CommutativityReport report;
    if (!maps.empty())
        report.order = maps[0].order();
    else if (!fields.empty())
        report.order = fields[0].order();
    auto record = [&](int condition, const std::string& a, const std::string& b, bool ok) {
        report.checks.push_back({condition, a, b, ok});
        report.all_ok = report.all_ok && ok;
    };
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j)
            record(1, map_names[i], map_names[j],
                   compose(maps[i], maps[j]) == compose(maps[j], maps[i]));
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = i + 1; j < fields.size(); ++j) {
            FormalVectorField<Rational> bracket = lie_bracket(fields[i], fields[j]);
            bool ok = true;
            for (int k = 0; k < bracket.dimension(); ++k)
                ok = ok && bracket.component(k).is_zero();
            record(2, field_names[i], field_names[j], ok);
        }
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = 0; j < fields.size(); ++j)
            record(3, map_names[i], field_names[j], pushforward(maps[i], fields[j]) == fields[j]);
    return report;
}

} // namespace germlab
