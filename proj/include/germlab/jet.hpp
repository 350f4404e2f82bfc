#pragma once

#include "germlab/errors.hpp"
#include "germlab/multi_index.hpp"
#include "germlab/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace germlab {

/// Truncated multivariate series: a sparse, canonical map from multi-indices
/// of degree <= order to nonzero scalars. Immutable in spirit; every
/// operation returns a fresh value.
template <CoefficientRing S>
class Jet {
  public:
    using Terms = std::map<MultiIndex, S, DegLexLess>;

    Jet() = default;
    Jet(int dimension, int order) : dimension_(dimension), order_(order) {
        if (dimension <= 0) throw ShapeError("jet dimension must be positive");
        if (order < 0) throw ShapeError("jet order must be nonnegative");
    }

    int dimension() const { return dimension_; }
    int order() const { return order_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    S coefficient(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? S(0) : it->second;
    }

    /// Stores or erases; rejects exponents outside the truncation box.
    void set_coefficient(const MultiIndex& alpha, S value) {
        if (alpha.dimension() != dimension_) throw ShapeError("jet term dimension mismatch");
        if (alpha.degree() > order_) throw ShapeError("jet term exceeds truncation order");
        if (is_zero(value))
            terms_.erase(alpha);
        else
            terms_.insert_or_assign(alpha, std::move(value));
    }

    void add_term(const MultiIndex& alpha, const S& value) {
        if (alpha.degree() > order_) return; // truncated
        if (alpha.dimension() != dimension_) throw ShapeError("jet term dimension mismatch");
        auto it = terms_.find(alpha);
        if (it == terms_.end()) {
            if (!is_zero(value)) terms_.emplace(alpha, value);
        } else {
            it->second = it->second + value;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    bool has_constant_term() const {
        return !terms_.empty() && terms_.begin()->first.degree() == 0;
    }

    /// Smallest degree of a nonzero term; order + 1 when the jet is zero.
    int vanishing_order() const {
        return terms_.empty() ? order_ + 1 : terms_.begin()->first.degree();
    }

    bool operator==(const Jet& other) const {
        if (dimension_ != other.dimension_ || order_ != other.order_) return false;
        if (terms_.size() != other.terms_.size()) return false;
        auto it = other.terms_.begin();
        for (const auto& [alpha, c] : terms_) {
            if (!(it->first == alpha) || !is_zero_scalar(it->second - c)) return false;
            ++it;
        }
        return true;
    }

    Jet operator+(const Jet& other) const {
        require_same_shape(other);
        Jet r(*this);
        for (const auto& [alpha, c] : other.terms_) r.add_term(alpha, c);
        return r;
    }

    Jet operator-() const {
        Jet r(dimension_, order_);
        for (const auto& [alpha, c] : terms_) r.terms_.emplace(alpha, -c);
        return r;
    }

    Jet operator-(const Jet& other) const { return *this + (-other); }

    Jet operator*(const Jet& other) const {
        require_same_shape(other);
        Jet r(dimension_, order_);
        for (const auto& [a, ca] : terms_) {
            if (a.degree() > order_) continue;
            for (const auto& [b, cb] : other.terms_) {
                if (a.degree() + b.degree() > order_) break; // terms are degree-sorted
                r.add_term(a + b, ca * cb);
            }
        }
        return r;
    }

    friend Jet operator*(const S& scalar, const Jet& f) {
        Jet r(f.dimension_, f.order_);
        if (is_zero(scalar)) return r;
        for (const auto& [alpha, c] : f.terms_) {
            S v = scalar * c;
            if (!is_zero(v)) r.terms_.emplace(alpha, std::move(v));
        }
        return r;
    }

  private:
    static bool is_zero_scalar(const S& v) { return is_zero(v); }

    void require_same_shape(const Jet& other) const {
        if (dimension_ != other.dimension_ || order_ != other.order_)
            throw ShapeError("jet shape mismatch");
    }

    int dimension_ = 0;
    int order_ = 0;
    Terms terms_;
};

/// Same terms viewed at a different truncation order. Raising the order is
/// only exact when the jet is known to be a complete polynomial (user input);
/// lowering drops the tail.
template <CoefficientRing S>
Jet<S> with_order(const Jet<S>& f, int order) {
    Jet<S> r(f.dimension(), order);
    for (const auto& [alpha, c] : f.terms()) {
        if (alpha.degree() > order) break;
        r.set_coefficient(alpha, c);
    }
    return r;
}

template <CoefficientRing S>
Jet<S> derivative(const Jet<S>& f, int axis) {
    Jet<S> r(f.dimension(), f.order());
    for (const auto& [alpha, c] : f.terms()) {
        int e = alpha[axis];
        if (e == 0) continue;
        MultiIndex beta(alpha);
        beta[axis] = e - 1;
        r.add_term(beta, S(e) * c);
    }
    return r;
}

/// Constant / coordinate building blocks.
template <CoefficientRing S>
Jet<S> constant_jet(int dimension, int order, const S& value) {
    Jet<S> r(dimension, order);
    r.set_coefficient(MultiIndex(dimension), value);
    return r;
}

template <CoefficientRing S>
Jet<S> coordinate_jet(int dimension, int order, int axis) {
    Jet<S> r(dimension, order);
    r.set_coefficient(MultiIndex::unit(dimension, axis), S(1));
    return r;
}

/// f with each argument substituted for the corresponding variable; all
/// arguments must vanish at the origin so that the truncation is exact.
template <CoefficientRing S>
Jet<S> substitute(const Jet<S>& f, std::span<const Jet<S>> args) {
    if (static_cast<int>(args.size()) != f.dimension())
        throw ShapeError("substitution needs one argument per variable");
    const int m = f.order();
    int target_dim = args.empty() ? f.dimension() : args[0].dimension();
    for (const Jet<S>& g : args) {
        if (g.order() != m || g.dimension() != target_dim)
            throw ShapeError("substitution argument shape mismatch");
        if (g.has_constant_term())
            throw ShapeError("substitution argument has a constant term");
    }
    // args[j]^k vanishes to order k, so exponents beyond m contribute nothing.
    std::vector<std::vector<Jet<S>>> powers(args.size());
    auto power = [&](std::size_t j, int k) -> const Jet<S>& {
        auto& pw = powers[j];
        if (pw.empty()) pw.push_back(constant_jet(target_dim, m, S(1)));
        while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * args[j]);
        return pw[static_cast<std::size_t>(k)];
    };
    Jet<S> r(target_dim, m);
    for (const auto& [alpha, c] : f.terms()) {
        if (alpha.degree() > m) break;
        Jet<S> term = constant_jet(target_dim, m, c);
        for (int j = 0; j < f.dimension(); ++j) {
            int e = alpha[j];
            if (e == 0) continue;
            if (e > m) {
                term = Jet<S>(target_dim, m);
                break;
            }
            term = term * power(static_cast<std::size_t>(j), e);
            if (term.is_zero()) break;
        }
        r = r + term;
    }
    return r;
}

template <CoefficientRing T, CoefficientRing S, typename Fn>
Jet<T> map_coefficients(const Jet<S>& f, Fn&& fn) {
    Jet<T> r(f.dimension(), f.order());
    for (const auto& [alpha, c] : f.terms()) r.set_coefficient(alpha, fn(c));
    return r;
}

namespace detail {

inline bool needs_parentheses(const std::string& s) {
    if (s.find(' ') != std::string::npos) return true;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') return true;
    return false;
}

inline std::string monomial_to_string(const MultiIndex& alpha,
                                      std::span<const std::string> names) {
    std::string out;
    for (int i = 0; i < alpha.dimension(); ++i) {
        if (alpha[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[static_cast<std::size_t>(i)];
        if (alpha[i] > 1) out += "^" + std::to_string(alpha[i]);
    }
    return out;
}

} // namespace detail

/// Canonical rendering: terms ascending in deg-lex, coefficient 1 elided.
/// parse_polynomial reads the result back verbatim.
inline std::string to_string(const Jet<Rational>& f, std::span<const std::string> names) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [alpha, c] : f.terms()) {
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

/// Rendering over extension scalars; coefficients are printed by `fn` and
/// parenthesized when composite.
template <CoefficientRing S, typename Fn>
std::string jet_to_string(const Jet<S>& f, std::span<const std::string> names, Fn&& fn) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [alpha, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        std::string coeff = fn(c);
        if (detail::needs_parentheses(coeff)) coeff = "(" + coeff + ")";
        std::string mono = detail::monomial_to_string(alpha, names);
        out += mono.empty() ? coeff : coeff + "*" + mono;
    }
    return out;
}

} // namespace germlab
