#include "germlab/quasipoly.hpp"

#include "germlab/jet.hpp"

#include <algorithm>

namespace germlab {

// ---------------------------------------------------------------- QpPoly --

void QpPoly::add(const MultiIndex& alpha, const Rational& coeff) {
    if (alpha.dimension() != nvars_) throw ShapeError("polynomial term dimension mismatch");
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        if (!is_zero(coeff)) terms_.emplace(alpha, coeff);
    } else {
        it->second += coeff;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

QpPoly QpPoly::operator+(const QpPoly& other) const {
    if (nvars_ != other.nvars_) throw ShapeError("polynomial variable mismatch");
    QpPoly r(*this);
    for (const auto& [a, c] : other.terms_) r.add(a, c);
    return r;
}

QpPoly QpPoly::operator-() const {
    QpPoly r(nvars_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
    return r;
}

QpPoly QpPoly::operator*(const QpPoly& other) const {
    if (nvars_ != other.nvars_) throw ShapeError("polynomial variable mismatch");
    QpPoly r(nvars_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) r.add(a + b, ca * cb);
    return r;
}

QpPoly operator*(const Rational& s, const QpPoly& p) {
    QpPoly r(p.nvars_);
    if (is_zero(s)) return r;
    for (const auto& [a, c] : p.terms_) r.terms_.emplace(a, s * c);
    return r;
}

int QpPoly::degree_in(int var) const {
    int deg = 0;
    for (const auto& [a, c] : terms_) deg = std::max(deg, a[var]);
    return deg;
}

std::vector<QpPoly> QpPoly::coefficients_in(int var) const {
    std::vector<QpPoly> out(static_cast<std::size_t>(degree_in(var)) + 1, QpPoly(nvars_));
    for (const auto& [a, c] : terms_) {
        MultiIndex rest(a);
        int k = rest[var];
        rest[var] = 0;
        out[static_cast<std::size_t>(k)].add(rest, c);
    }
    return out;
}

QpPoly QpPoly::shifted(int var) const {
    QpPoly r(nvars_);
    for (const auto& [a, c] : terms_) {
        int e = a[var];
        for (int k = 0; k <= e; ++k) {
            MultiIndex b(a);
            b[var] = k;
            r.add(b, c * binomial(e, k));
        }
    }
    return r;
}

QpPoly QpPoly::derivative(int var) const {
    QpPoly r(nvars_);
    for (const auto& [a, c] : terms_) {
        int e = a[var];
        if (e == 0) continue;
        MultiIndex b(a);
        b[var] = e - 1;
        r.add(b, Rational(e) * c);
    }
    return r;
}

QpPoly QpPoly::times_power(int var, int k) const {
    QpPoly r(nvars_);
    for (const auto& [a, c] : terms_) {
        MultiIndex b(a);
        b[var] += k;
        r.add(b, c);
    }
    return r;
}

QpPoly QpPoly::at_zero(int var) const {
    QpPoly r(nvars_);
    for (const auto& [a, c] : terms_)
        if (a[var] == 0) r.add(a, c);
    return r;
}

Rational QpPoly::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw ShapeError("evaluation point dimension mismatch");
    Rational total(0);
    for (const auto& [a, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < nvars_; ++i)
            if (a[i] != 0) v *= rational_pow(point[static_cast<std::size_t>(i)], a[i]);
        total += v;
    }
    return total;
}

// --------------------------------------------------------------- BaseVec --

BaseVec BaseVec::trivial(const QpVars& vars) {
    BaseVec b;
    for (const QpVar& v : vars)
        b.data_.push_back(v.kind == VarKind::Discrete ? Rational(1) : Rational(0));
    return b;
}

bool BaseVec::is_trivial(const QpVars& vars, int i) const {
    const Rational& v = data_[static_cast<std::size_t>(i)];
    return vars[static_cast<std::size_t>(i)].kind == VarKind::Discrete ? v == 1 : is_zero(v);
}

BaseVec BaseVec::combined(const BaseVec& other, const QpVars& vars) const {
    BaseVec r(*this);
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i].kind == VarKind::Discrete)
            r.data_[i] *= other.data_[i];
        else
            r.data_[i] += other.data_[i];
    return r;
}

BaseVec BaseVec::quotient(const BaseVec& other, const QpVars& vars) const {
    BaseVec r(*this);
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i].kind == VarKind::Discrete)
            r.data_[i] /= other.data_[i];
        else
            r.data_[i] -= other.data_[i];
    return r;
}

// ------------------------------------------------------- Quasipolynomial --

Quasipolynomial::Quasipolynomial(const Rational& v) {
    if (!is_zero(v)) terms_.emplace(BaseVec(), QpPoly(0, v));
}

Quasipolynomial::Quasipolynomial(QpVarsPtr vars, const Rational& constant)
    : vars_(std::move(vars)) {
    if (!is_zero(constant))
        terms_.emplace(BaseVec::trivial(*vars_),
                       QpPoly(static_cast<int>(vars_->size()), constant));
}

Quasipolynomial Quasipolynomial::exponential_term(QpVarsPtr vars, BaseVec base, QpPoly poly) {
    for (std::size_t i = 0; i < vars->size(); ++i)
        if ((*vars)[i].kind == VarKind::Discrete && is_zero(base[static_cast<int>(i)]))
            throw Error("discrete base must be nonzero");
    Quasipolynomial q;
    q.vars_ = std::move(vars);
    if (!poly.is_zero()) q.terms_.emplace(std::move(base), std::move(poly));
    return q;
}

Quasipolynomial Quasipolynomial::variable(QpVarsPtr vars, int var) {
    const int n = static_cast<int>(vars->size());
    QpPoly p = QpPoly::monomial(n, MultiIndex::unit(n, var), Rational(1));
    BaseVec trivial = BaseVec::trivial(*vars);
    return exponential_term(std::move(vars), std::move(trivial), std::move(p));
}

bool Quasipolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& [base, poly] = *terms_.begin();
    if (vars_) {
        for (int i = 0; i < static_cast<int>(vars_->size()); ++i)
            if (!base.is_trivial(*vars_, i)) return false;
    }
    return poly.terms().size() == 1 && poly.terms().begin()->first.degree() == 0;
}

Rational Quasipolynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw Error("quasipolynomial is not constant");
    return terms_.begin()->second.terms().begin()->second;
}

void Quasipolynomial::add_term(const BaseVec& base, const QpPoly& poly) {
    if (poly.is_zero()) return;
    auto it = terms_.find(base);
    if (it == terms_.end()) {
        terms_.emplace(base, poly);
    } else {
        QpPoly sum = it->second + poly;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(sum);
    }
}

Quasipolynomial align_context(const Quasipolynomial& q, const QpVarsPtr& vars) {
    if (q.vars_ && vars && *q.vars_ == *vars) return q;
    if (!q.vars_ || q.vars_->empty()) {
        // context-free constant
        Rational v = q.terms_.empty() ? Rational(0) : q.terms_.begin()->second.coefficient(
                                                          MultiIndex(0));
        if (!vars || vars->empty()) return q;
        return Quasipolynomial(vars, v);
    }
    throw ShapeError("quasipolynomial variable mismatch");
}

namespace {

const QpVarsPtr& wider_context(const Quasipolynomial& a, const Quasipolynomial& b) {
    if (a.variables() && !a.variables()->empty()) return a.variables();
    return b.variables();
}

} // namespace

Quasipolynomial Quasipolynomial::operator+(const Quasipolynomial& other) const {
    const QpVarsPtr& ctx = wider_context(*this, other);
    Quasipolynomial a = align_context(*this, ctx);
    Quasipolynomial b = align_context(other, ctx);
    for (const auto& [base, poly] : b.terms_) a.add_term(base, poly);
    return a;
}

Quasipolynomial Quasipolynomial::operator-() const {
    Quasipolynomial r;
    r.vars_ = vars_;
    for (const auto& [base, poly] : terms_) r.terms_.emplace(base, -poly);
    return r;
}

Quasipolynomial Quasipolynomial::operator*(const Quasipolynomial& other) const {
    const QpVarsPtr& ctx = wider_context(*this, other);
    Quasipolynomial a = align_context(*this, ctx);
    Quasipolynomial b = align_context(other, ctx);
    Quasipolynomial r;
    r.vars_ = a.vars_;
    const QpVars empty_vars;
    const QpVars& vars = a.vars_ ? *a.vars_ : empty_vars;
    for (const auto& [ba, pa] : a.terms_)
        for (const auto& [bb, pb] : b.terms_) r.add_term(ba.combined(bb, vars), pa * pb);
    return r;
}

bool Quasipolynomial::operator==(const Quasipolynomial& other) const {
    const QpVarsPtr& ctx = wider_context(*this, other);
    Quasipolynomial a = align_context(*this, ctx);
    Quasipolynomial b;
    try {
        b = align_context(other, ctx);
    } catch (const ShapeError&) {
        return false;
    }
    return a.terms_ == b.terms_;
}

// ------------------------------------------------------------ evaluation --

Laurent qp_eval(const Quasipolynomial& q, std::span<const Rational> assignment) {
    if (q.is_zero()) return Laurent();
    const QpVars empty_vars;
    const QpVars& vars = q.variables() ? *q.variables() : empty_vars;
    if (assignment.size() != vars.size()) throw ShapeError("assignment size mismatch");
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i].kind == VarKind::Discrete && assignment[i].get_den() != 1)
            throw Error("discrete variable \"" + vars[i].name + "\" needs an integer value");
    Laurent total;
    for (const auto& [base, poly] : q.terms()) {
        Rational factor(1);
        Rational unit_exponent(0);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i].kind == VarKind::Discrete) {
                if (!base.is_trivial(vars, static_cast<int>(i)))
                    factor *= rational_pow(base[static_cast<int>(i)],
                                           assignment[i].get_num().get_si());
            } else {
                unit_exponent += base[static_cast<int>(i)] * assignment[i];
            }
        }
        factor *= poly.evaluate(assignment);
        total += Laurent(factor) * Laurent::unit(unit_exponent);
    }
    return total;
}

Rational qp_eval_rational(const Quasipolynomial& q, std::span<const Rational> assignment) {
    return qp_eval(q, assignment).to_rational();
}

Quasipolynomial qp_shift(const Quasipolynomial& q, int var) {
    if (!q.variables() || (*q.variables())[static_cast<std::size_t>(var)].kind !=
                              VarKind::Discrete)
        throw Error("shift needs a discrete variable");
    Quasipolynomial r = Quasipolynomial::constant(q.variables(), Rational(0));
    for (const auto& [base, poly] : q.terms())
        r += Quasipolynomial::exponential_term(q.variables(), base,
                                               base[var] * poly.shifted(var));
    return r;
}

Quasipolynomial qp_derivative(const Quasipolynomial& q, int var) {
    if (!q.variables() || (*q.variables())[static_cast<std::size_t>(var)].kind !=
                              VarKind::Continuous)
        throw Error("derivative needs a continuous variable");
    Quasipolynomial r = Quasipolynomial::constant(q.variables(), Rational(0));
    for (const auto& [base, poly] : q.terms())
        r += Quasipolynomial::exponential_term(q.variables(), base,
                                               base[var] * poly + poly.derivative(var));
    return r;
}

Quasipolynomial qp_at_zero(const Quasipolynomial& q, int var) {
    if (!q.variables()) return q;
    const QpVars& vars = *q.variables();
    Quasipolynomial r = Quasipolynomial::constant(q.variables(), Rational(0));
    for (const auto& [base, poly] : q.terms()) {
        BaseVec b = base;
        b.set(var, vars[static_cast<std::size_t>(var)].kind == VarKind::Discrete ? Rational(1)
                                                                                 : Rational(0));
        r += Quasipolynomial::exponential_term(q.variables(), b, poly.at_zero(var));
    }
    return r;
}

// ---------------------------------------------------------------- solvers --

namespace {

void require_independent_of(const Quasipolynomial& q, int var, const char* what) {
    if (!q.variables()) return;
    const QpVars& vars = *q.variables();
    for (const auto& [base, poly] : q.terms()) {
        if (!base.is_trivial(vars, var) || poly.degree_in(var) > 0)
            throw Error(std::string(what) + " must not involve the solved variable");
    }
}

} // namespace

Quasipolynomial solve_discrete_recurrence(int var, const Rational& mu,
                                          const Quasipolynomial& forcing,
                                          const Quasipolynomial& init) {
    if (is_zero(mu)) throw Error("recurrence coefficient must be nonzero");
    QpVarsPtr ctx = forcing.variables();
    if (!ctx || ctx->empty()) ctx = init.variables();
    if (!ctx || ctx->empty()) throw ShapeError("recurrence needs a variable context");
    if ((*ctx)[static_cast<std::size_t>(var)].kind != VarKind::Discrete)
        throw Error("recurrence variable must be discrete");
    const int n = static_cast<int>(ctx->size());
    Quasipolynomial f = align_context(forcing, ctx);
    Quasipolynomial start = align_context(init, ctx);
    require_independent_of(start, var, "initial value");

    Quasipolynomial particular = Quasipolynomial::constant(ctx, Rational(0));
    for (const auto& [base, poly] : f.terms()) {
        const Rational nu = base[var];
        std::vector<QpPoly> p = poly.coefficients_in(var);
        const int deg = static_cast<int>(p.size()) - 1;
        QpPoly h(n);
        if (nu != mu) {
            // nu h(t+1) - mu h(t) = p(t), deg h = deg p; solve descending.
            std::vector<QpPoly> hk(static_cast<std::size_t>(deg) + 1, QpPoly(n));
            for (int k = deg; k >= 0; --k) {
                QpPoly rhs = p[static_cast<std::size_t>(k)];
                for (int j = k + 1; j <= deg; ++j)
                    rhs = rhs - (nu * binomial(j, k)) * hk[static_cast<std::size_t>(j)];
                hk[static_cast<std::size_t>(k)] = (Rational(1) / (nu - mu)) * rhs;
            }
            for (int k = 0; k <= deg; ++k)
                h = h + hk[static_cast<std::size_t>(k)].times_power(var, k);
        } else {
            // Resonance: mu (h(t+1) - h(t)) = p(t) with h of degree deg+1
            // and no constant term.
            std::vector<QpPoly> hk(static_cast<std::size_t>(deg) + 2, QpPoly(n));
            for (int j = deg; j >= 0; --j) {
                QpPoly rhs = (Rational(1) / mu) * p[static_cast<std::size_t>(j)];
                for (int k = j + 2; k <= deg + 1; ++k)
                    rhs = rhs - binomial(k, j) * hk[static_cast<std::size_t>(k)];
                hk[static_cast<std::size_t>(j + 1)] =
                    (Rational(1) / Rational(j + 1)) * rhs;
            }
            for (int k = 1; k <= deg + 1; ++k)
                h = h + hk[static_cast<std::size_t>(k)].times_power(var, k);
        }
        particular += Quasipolynomial::exponential_term(ctx, base, h);
    }

    Quasipolynomial residual = start - qp_at_zero(particular, var);
    Quasipolynomial homogeneous = Quasipolynomial::constant(ctx, Rational(0));
    for (const auto& [base, poly] : residual.terms()) {
        BaseVec b = base;
        b.set(var, mu);
        homogeneous += Quasipolynomial::exponential_term(ctx, b, poly);
    }
    return particular + homogeneous;
}

Quasipolynomial solve_linear_ode(int var, const Rational& lambda,
                                 const Quasipolynomial& forcing,
                                 const Quasipolynomial& init) {
    QpVarsPtr ctx = forcing.variables();
    if (!ctx || ctx->empty()) ctx = init.variables();
    if (!ctx || ctx->empty()) throw ShapeError("ode needs a variable context");
    if ((*ctx)[static_cast<std::size_t>(var)].kind != VarKind::Continuous)
        throw Error("ode variable must be continuous");
    const int n = static_cast<int>(ctx->size());
    Quasipolynomial f = align_context(forcing, ctx);
    Quasipolynomial start = align_context(init, ctx);
    require_independent_of(start, var, "initial value");

    Quasipolynomial particular = Quasipolynomial::constant(ctx, Rational(0));
    for (const auto& [base, poly] : f.terms()) {
        const Rational nu = base[var];
        std::vector<QpPoly> p = poly.coefficients_in(var);
        const int deg = static_cast<int>(p.size()) - 1;
        QpPoly h(n);
        if (nu != lambda) {
            // (nu - lambda) h + h' = p, deg h = deg p; solve descending.
            std::vector<QpPoly> hk(static_cast<std::size_t>(deg) + 1, QpPoly(n));
            for (int k = deg; k >= 0; --k) {
                QpPoly rhs = p[static_cast<std::size_t>(k)];
                if (k < deg)
                    rhs = rhs - Rational(k + 1) * hk[static_cast<std::size_t>(k + 1)];
                hk[static_cast<std::size_t>(k)] = (Rational(1) / (nu - lambda)) * rhs;
            }
            for (int k = 0; k <= deg; ++k)
                h = h + hk[static_cast<std::size_t>(k)].times_power(var, k);
        } else {
            // Resonance: h' = p, integrate with zero constant term.
            for (int k = 0; k <= deg; ++k)
                h = h + ((Rational(1) / Rational(k + 1)) * p[static_cast<std::size_t>(k)])
                            .times_power(var, k + 1);
        }
        particular += Quasipolynomial::exponential_term(ctx, base, h);
    }

    Quasipolynomial residual = start - qp_at_zero(particular, var);
    Quasipolynomial homogeneous = Quasipolynomial::constant(ctx, Rational(0));
    for (const auto& [base, poly] : residual.terms()) {
        BaseVec b = base;
        b.set(var, lambda);
        homogeneous += Quasipolynomial::exponential_term(ctx, b, poly);
    }
    return particular + homogeneous;
}

// ----------------------------------------------------------- exact division

namespace {

// Division order on base vectors: discrete components by (|mu|, sign),
// continuous by value; compatible with the group law on positive data.
int division_cmp(const BaseVec& a, const BaseVec& b, const QpVars& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const Rational& x = a[static_cast<int>(i)];
        const Rational& y = b[static_cast<int>(i)];
        if (vars[i].kind == VarKind::Discrete) {
            int c = cmp(abs(x), abs(y));
            if (c != 0) return c;
            c = sgn(x) - sgn(y);
            if (c != 0) return c;
        } else {
            int c = cmp(x, y);
            if (c != 0) return c;
        }
    }
    return 0;
}

struct LeadingTerm {
    const BaseVec* base;
    const MultiIndex* monomial;
    const Rational* coeff;
};

LeadingTerm leading_term(const Quasipolynomial& q, const QpVars& vars) {
    const BaseVec* best_base = nullptr;
    for (const auto& [base, poly] : q.terms())
        if (!best_base || division_cmp(base, *best_base, vars) > 0) best_base = &base;
    const QpPoly& poly = q.terms().at(*best_base);
    const auto& lead = *poly.terms().rbegin();
    return {best_base, &lead.first, &lead.second};
}

BaseVec trailing_base(const Quasipolynomial& q, const QpVars& vars) {
    const BaseVec* best = nullptr;
    for (const auto& [base, poly] : q.terms())
        if (!best || division_cmp(base, *best, vars) < 0) best = &base;
    return *best;
}

} // namespace

Quasipolynomial div_exact(const Quasipolynomial& a, const Quasipolynomial& b) {
    if (b.is_zero()) throw Error("division by zero quasipolynomial");
    if (a.is_zero()) return Quasipolynomial(Rational(0));
    const QpVarsPtr& ctx = wider_context(a, b);
    Quasipolynomial rem = align_context(a, ctx);
    Quasipolynomial den = align_context(b, ctx);
    const QpVars empty_vars;
    const QpVars& vars = ctx ? *ctx : empty_vars;
    const int n = static_cast<int>(vars.size());

    // Quotient base vectors cannot descend past trail(a)/trail(b).
    const BaseVec floor = trailing_base(rem, vars).quotient(trailing_base(den, vars), vars);
    LeadingTerm lead_b = leading_term(den, vars);

    Quasipolynomial quotient = ctx ? Quasipolynomial::constant(ctx, Rational(0))
                                   : Quasipolynomial(Rational(0));
    while (!rem.is_zero()) {
        LeadingTerm lead_r = leading_term(rem, vars);
        BaseVec qbase = lead_r.base->quotient(*lead_b.base, vars);
        if (division_cmp(qbase, floor, vars) < 0)
            throw Error("non-exact division of quasipolynomials");
        if (!lead_b.monomial->divides(*lead_r.monomial))
            throw Error("non-exact division of quasipolynomials");
        MultiIndex qmono = lead_b.monomial->complement_in(*lead_r.monomial);
        Quasipolynomial t = Quasipolynomial::exponential_term(
            ctx, qbase, QpPoly::monomial(n, qmono, *lead_r.coeff / *lead_b.coeff));
        quotient += t;
        rem -= t * den;
    }
    return quotient;
}

// -------------------------------------------------------------- rendering --

std::string to_string(const QpPoly& p, const QpVars& vars) {
    if (p.is_zero()) return "0";
    std::vector<std::string> names;
    for (const QpVar& v : vars) names.push_back(v.name);
    std::string out;
    for (const auto& [alpha, c] : p.terms()) {
        bool negative = sgn(c) < 0;
        Rational mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono = detail::monomial_to_string(alpha, names);
        if (mono.empty())
            out += to_string(mag);
        else if (is_one(mag))
            out += mono;
        else
            out += to_string(mag) + "*" + mono;
    }
    return out;
}

std::string to_string(const Quasipolynomial& q) {
    if (q.is_zero()) return "0";
    const QpVars empty_vars;
    const QpVars& vars = q.variables() ? *q.variables() : empty_vars;
    std::string out;
    for (const auto& [base, poly] : q.terms()) {
        std::string term;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (base.is_trivial(vars, static_cast<int>(i))) continue;
            if (!term.empty()) term += " * ";
            const Rational& v = base[static_cast<int>(i)];
            if (vars[i].kind == VarKind::Discrete) {
                std::string b = to_string(v);
                if (sgn(v) < 0 || v.get_den() != 1) b = "(" + b + ")";
                term += b + "^" + vars[i].name;
            } else {
                term += "exp(" + to_string(v) + " " + vars[i].name + ")";
            }
        }
        if (!term.empty()) term += " * ";
        term += "(" + to_string(poly, vars) + ")";
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

} // namespace germlab
