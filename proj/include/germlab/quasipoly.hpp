#pragma once

#include "germlab/eigen_support.hpp"
#include "germlab/errors.hpp"
#include "germlab/laurent.hpp"
#include "germlab/multi_index.hpp"
#include "germlab/rational.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace germlab {

/// Discrete variables range over the integers (map iterates), continuous
/// ones over time (flows).
enum class VarKind { Discrete, Continuous };

struct QpVar {
    std::string name;
    VarKind kind;
    bool operator==(const QpVar&) const = default;
};

using QpVars = std::vector<QpVar>;
using QpVarsPtr = std::shared_ptr<const QpVars>;

inline QpVarsPtr make_qp_vars(QpVars vars) {
    return std::make_shared<const QpVars>(std::move(vars));
}

/// Sparse multivariate polynomial over Q in the time variables.
class QpPoly {
  public:
    using Terms = std::map<MultiIndex, Rational, DegLexLess>;

    QpPoly() = default;
    explicit QpPoly(int nvars) : nvars_(nvars) {}
    QpPoly(int nvars, const Rational& constant) : nvars_(nvars) {
        add(MultiIndex(nvars), constant);
    }
    static QpPoly monomial(int nvars, const MultiIndex& alpha, const Rational& coeff) {
        QpPoly p(nvars);
        p.add(alpha, coeff);
        return p;
    }

    int variable_count() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const MultiIndex& alpha, const Rational& coeff);

    QpPoly operator+(const QpPoly& other) const;
    QpPoly operator-() const;
    QpPoly operator-(const QpPoly& other) const { return *this + (-other); }
    QpPoly operator*(const QpPoly& other) const;
    friend QpPoly operator*(const Rational& s, const QpPoly& p);

    bool operator==(const QpPoly& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }

    int degree_in(int var) const;
    /// Decomposition by powers of one variable: result[k] has no `var` left.
    std::vector<QpPoly> coefficients_in(int var) const;
    /// The substitution t_var -> t_var + 1.
    QpPoly shifted(int var) const;
    QpPoly derivative(int var) const;
    /// Multiplication by t_var^k.
    QpPoly times_power(int var, int k) const;
    /// Partial substitution t_var = 0.
    QpPoly at_zero(int var) const;
    Rational evaluate(std::span<const Rational> point) const;

  private:
    int nvars_ = 0;
    Terms terms_;
};

/// One exponential datum per variable: a multiplicative base for discrete
/// variables (contributing base^t) and an additive exponent for continuous
/// ones (contributing e^{lambda t}). The trivial datum is 1 resp. 0.
class BaseVec {
  public:
    BaseVec() = default;
    static BaseVec trivial(const QpVars& vars);

    int size() const { return static_cast<int>(data_.size()); }
    const Rational& operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }
    void set(int i, const Rational& v) { data_[static_cast<std::size_t>(i)] = v; }

    bool is_trivial(const QpVars& vars, int i) const;
    /// Componentwise product/sum matching each variable's kind.
    BaseVec combined(const BaseVec& other, const QpVars& vars) const;
    /// Componentwise quotient/difference.
    BaseVec quotient(const BaseVec& other, const QpVars& vars) const;

    bool operator==(const BaseVec&) const = default;

  private:
    std::vector<Rational> data_;
};

struct BaseVecLess {
    bool operator()(const BaseVec& a, const BaseVec& b) const {
        for (int i = 0; i < a.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

/// Finite sum of exponential-times-polynomial terms with exact rational
/// data, canonical by base vector: distinct exponentials of distinct
/// rational data are linearly independent over the polynomial ring, so the
/// zero test is the empty term map.
class Quasipolynomial {
  public:
    using Terms = std::map<BaseVec, QpPoly, BaseVecLess>;

    Quasipolynomial() = default;
    Quasipolynomial(int v) : Quasipolynomial(Rational(v)) {}
    Quasipolynomial(long v) : Quasipolynomial(Rational(v)) {}
    explicit Quasipolynomial(const Rational& v);
    Quasipolynomial(QpVarsPtr vars, const Rational& constant);

    static Quasipolynomial constant(QpVarsPtr vars, const Rational& v) {
        return Quasipolynomial(std::move(vars), v);
    }
    /// base^t resp. e^{lambda t} times a polynomial.
    static Quasipolynomial exponential_term(QpVarsPtr vars, BaseVec base, QpPoly poly);
    /// The plain variable t_var as a quasipolynomial.
    static Quasipolynomial variable(QpVarsPtr vars, int var);

    const QpVarsPtr& variables() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when the value is a plain rational constant.
    bool is_constant() const;
    Rational constant_value() const;

    Quasipolynomial operator+(const Quasipolynomial& other) const;
    Quasipolynomial operator-() const;
    Quasipolynomial operator-(const Quasipolynomial& other) const { return *this + (-other); }
    Quasipolynomial operator*(const Quasipolynomial& other) const;
    Quasipolynomial& operator+=(const Quasipolynomial& other) { return *this = *this + other; }
    Quasipolynomial& operator-=(const Quasipolynomial& other) { return *this = *this - other; }
    Quasipolynomial& operator*=(const Quasipolynomial& other) { return *this = *this * other; }

    bool operator==(const Quasipolynomial& other) const;

  private:
    void add_term(const BaseVec& base, const QpPoly& poly);
    friend Quasipolynomial align_context(const Quasipolynomial& q, const QpVarsPtr& vars);

    QpVarsPtr vars_; // null for context-free rational constants
    Terms terms_;    // canonical: no zero polynomials
};

inline bool is_zero(const Quasipolynomial& q) { return q.is_zero(); }

/// Rebuilds a context-free constant inside `vars`; rejects genuine variable
/// mismatches.
Quasipolynomial align_context(const Quasipolynomial& q, const QpVarsPtr& vars);

/// Exact value at a point: integers for discrete variables (negative powers
/// are fine, bases are nonzero), exact rationals for continuous ones. The
/// result lives in the unit extension; it is plain rational whenever every
/// continuous exponent collapses.
Laurent qp_eval(const Quasipolynomial& q, std::span<const Rational> assignment);
Rational qp_eval_rational(const Quasipolynomial& q, std::span<const Rational> assignment);

/// The substitution t_var -> t_var + 1 (discrete variables).
Quasipolynomial qp_shift(const Quasipolynomial& q, int var);
/// d/dt_var (continuous variables).
Quasipolynomial qp_derivative(const Quasipolynomial& q, int var);
/// Partial substitution t_var = 0.
Quasipolynomial qp_at_zero(const Quasipolynomial& q, int var);

/// The unique q with q(0) = init and q(t+1) = mu q(t) + forcing(t) along the
/// discrete variable `var`; init and each forcing coefficient may involve
/// the other variables but not t_var. A forcing base equal to mu (resonance)
/// bumps the polynomial degree by one.
Quasipolynomial solve_discrete_recurrence(int var, const Rational& mu,
                                          const Quasipolynomial& forcing,
                                          const Quasipolynomial& init);

/// The unique q with q(0) = init and dq/dt = lambda q + forcing along the
/// continuous variable `var`; resonance as above.
Quasipolynomial solve_linear_ode(int var, const Rational& lambda,
                                 const Quasipolynomial& forcing, const Quasipolynomial& init);

/// Exact division; throws when the divisor does not exactly divide. Needed
/// by fraction-free elimination over the quasipolynomial domain.
Quasipolynomial div_exact(const Quasipolynomial& a, const Quasipolynomial& b);

/// Rendering: `base^t * (poly)` and `exp(lambda t) * (poly)` factors joined
/// by " * ", terms joined by " + ".
std::string to_string(const Quasipolynomial& q);
std::string to_string(const QpPoly& p, const QpVars& vars);

} // namespace germlab

namespace Eigen {

template <>
struct NumTraits<germlab::Quasipolynomial>
    : germlab::detail::ExactNumTraits<germlab::Quasipolynomial> {};

template <>
struct NumTraits<germlab::Laurent> : germlab::detail::ExactNumTraits<germlab::Laurent> {};

} // namespace Eigen
