#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

namespace germlab {

/// Exact rational scalar of arbitrary precision.
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline bool is_one(const Rational& a) { return a == 1; }

/// Division in a field is always exact (divisor must be nonzero).
inline Rational div_exact(const Rational& a, const Rational& b) { return a / b; }

/// Parses "p", "-p" or "p/q" with q > 0 after normalization.
Rational rational_from_string(std::string_view text);

std::string to_string(const Rational& a);

/// base^e with integer e of either sign; base must be nonzero when e < 0.
Rational rational_pow(const Rational& base, long e);

/// n-choose-k as an exact integer value, n >= k >= 0 small.
Rational binomial(long n, long k);

/// Exact coefficient domains: commutative integral-domain arithmetic with a
/// decision-exact zero test and exact division when the divisor divides.
template <typename S>
concept CoefficientRing = requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { div_exact(a, b) } -> std::convertible_to<S>;
    S(0);
    S(1);
};

} // namespace germlab
