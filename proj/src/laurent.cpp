#include "germlab/laurent.hpp"

namespace germlab {

Laurent div_exact(const Laurent& a, const Laurent& b) {
    if (is_zero(b)) throw Error("division by zero in the unit extension");
    if (is_zero(a)) return Laurent();
    // Leading and trailing exponents multiply in an ordered group, so any
    // quotient term exponent lies in [min(a)-min(b), max(a)-max(b)].
    const Rational quot_floor = a.terms().begin()->first - b.terms().begin()->first;
    const auto& lead_b = *b.terms().rbegin();
    Laurent remainder = a;
    Laurent quotient;
    while (!is_zero(remainder)) {
        const auto& lead_r = *remainder.terms().rbegin();
        Rational exponent = lead_r.first - lead_b.first;
        if (exponent < quot_floor) throw Error("non-exact division in the unit extension");
        Laurent t = Laurent(lead_r.second / lead_b.second) * Laurent::unit(exponent);
        quotient += t;
        remainder -= t * b;
    }
    return quotient;
}

std::string to_string(const Laurent& a) {
    if (is_zero(a)) return "0";
    std::string out;
    for (const auto& [e, c] : a.terms()) {
        bool negative = sgn(c) < 0;
        Rational mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (is_zero(e)) {
            out += to_string(mag);
        } else {
            std::string u = "exp(" + to_string(e) + ")";
            out += is_one(mag) ? u : to_string(mag) + "*" + u;
        }
    }
    return out;
}

} // namespace germlab
