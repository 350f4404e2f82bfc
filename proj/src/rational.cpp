#include "germlab/rational.hpp"

#include "germlab/errors.hpp"

#include <cctype>

namespace germlab {

Rational rational_from_string(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& why) -> ParseError { return ParseError(why, i); };

    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    auto read_digits = [&]() -> std::string {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw fail("expected digits in rational literal");
        return std::string(text.substr(start, i - start));
    };
    mpz_class num(read_digits());
    mpz_class den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = mpz_class(read_digits());
        if (den == 0) throw fail("zero denominator in rational literal");
    }
    if (i != text.size()) throw fail("trailing characters in rational literal");
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& a) { return a.get_str(); }

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return 1;
    if (is_zero(base)) {
        if (e < 0) throw Error("zero base raised to a negative power");
        return 0;
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (k != 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

} // namespace germlab
