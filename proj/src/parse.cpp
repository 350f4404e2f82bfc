#include "germlab/parse.hpp"

#include "germlab/errors.hpp"

#include <cctype>

namespace germlab {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos == text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }
    bool peek_ident() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    mpz_class read_uint() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an unsigned integer", pos);
        return mpz_class(std::string(text.substr(start, pos - start)));
    }
    std::string read_identifier() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected an identifier", pos);
        return std::string(text.substr(start, pos - start));
    }
};

} // namespace

Jet<Rational> parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                               int order) {
    const int d = static_cast<int>(variables.size());
    if (d == 0) throw ShapeError("no variables declared");
    Jet<Rational> result(d, order);

    Lexer lex{text};
    if (lex.done()) throw ParseError("empty polynomial", lex.pos);

    auto variable_axis = [&](const std::string& name, std::size_t at) -> int {
        for (int i = 0; i < d; ++i)
            if (variables[static_cast<std::size_t>(i)] == name) return i;
        throw ParseError("unknown variable \"" + name + "\"", at);
    };

    bool first = true;
    while (!lex.done()) {
        int sign = 1;
        if (lex.accept('+')) {
            sign = 1;
        } else if (lex.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", lex.pos);
        }
        first = false;

        std::size_t term_start = lex.pos;
        Rational coeff(sign);
        MultiIndex exponents(d);
        bool any = false;

        if (lex.peek_digit()) {
            mpz_class num = lex.read_uint();
            mpz_class den(1);
            if (lex.accept('/')) {
                std::size_t at = lex.pos;
                den = lex.read_uint();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            Rational q(num, den);
            q.canonicalize();
            coeff *= q;
            any = true;
        }
        while (true) {
            bool star = lex.accept('*');
            if (!lex.peek_ident()) {
                if (star) throw ParseError("expected a variable after '*'", lex.pos);
                break;
            }
            std::size_t at = lex.pos;
            std::string name = lex.read_identifier();
            int axis = variable_axis(name, at);
            long e = 1;
            if (lex.accept('^')) {
                std::size_t exp_at = lex.pos;
                mpz_class raw = lex.read_uint();
                if (!raw.fits_slong_p()) throw ParseError("exponent too large", exp_at);
                e = raw.get_si();
            }
            exponents[axis] += static_cast<int>(e);
            any = true;
        }
        if (!any) throw ParseError("expected a term", lex.pos);
        if (exponents.degree() > order)
            throw ParseError("term of degree " + std::to_string(exponents.degree()) +
                                 " exceeds truncation order " + std::to_string(order),
                             term_start);
        result.add_term(exponents, coeff);
    }
    return result;
}

} // namespace germlab
