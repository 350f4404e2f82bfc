#pragma once

#include "germlab/errors.hpp"
#include "germlab/rational.hpp"

#include <map>
#include <string>

namespace germlab {

/// The rationals with the values e^q, q in Q, adjoined as exact invertible
/// units: finite sums sum c_q * exp(q) stored by exponent. Exponentials of
/// distinct rational arguments are linearly independent over Q
/// (Lindemann-Weierstrass), so the sparse form is canonical and the zero
/// test is exact. This is where flows evaluated at a fixed rational time
/// live when the generator has nonzero eigenvalues.
class Laurent {
  public:
    Laurent() = default;
    Laurent(int v) : Laurent(Rational(v)) {}
    Laurent(long v) : Laurent(Rational(v)) {}
    Laurent(const Rational& v) { add(Rational(0), v); }

    /// exp(exponent) as a unit.
    static Laurent unit(const Rational& exponent) {
        Laurent r;
        r.add(exponent, Rational(1));
        return r;
    }

    const std::map<Rational, Rational>& terms() const { return terms_; }

    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero(terms_.begin()->first));
    }

    Rational to_rational() const {
        if (terms_.empty()) return 0;
        if (!is_rational()) throw Error("value involves transcendental units");
        return terms_.begin()->second;
    }

    Laurent operator+(const Laurent& other) const {
        Laurent r(*this);
        for (const auto& [e, c] : other.terms_) r.add(e, c);
        return r;
    }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    Laurent operator-(const Laurent& other) const { return *this + (-other); }
    Laurent operator*(const Laurent& other) const {
        Laurent r;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : other.terms_) r.add(e1 + e2, c1 * c2);
        return r;
    }
    Laurent& operator+=(const Laurent& other) { return *this = *this + other; }
    Laurent& operator-=(const Laurent& other) { return *this = *this - other; }
    Laurent& operator*=(const Laurent& other) { return *this = *this * other; }

    bool operator==(const Laurent& other) const { return terms_ == other.terms_; }

  private:
    void add(const Rational& exponent, const Rational& coeff) {
        auto it = terms_.find(exponent);
        if (it == terms_.end()) {
            if (!germlab::is_zero(coeff)) terms_.emplace(exponent, coeff);
        } else {
            it->second += coeff;
            if (germlab::is_zero(it->second)) terms_.erase(it);
        }
    }

    std::map<Rational, Rational> terms_;
};

inline bool is_zero(const Laurent& a) { return a.terms().empty(); }

/// Exact division by leading-exponent elimination. The exponent group is
/// ordered, so a quotient, when it exists, is found term by term; descent
/// past the trailing exponent bound certifies non-divisibility.
Laurent div_exact(const Laurent& a, const Laurent& b);

std::string to_string(const Laurent& a);

} // namespace germlab
