#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "singulex/polynomial.hpp"

namespace singulex {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_tail(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Recursive-descent parser for:
//   poly   := ws ['-'] term (ws ('+'|'-') ws term)* ws
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := ident ('^' nat)? | '(' poly ')' ('^' nat)?
//   coeff  := nat ('/' posint)?
//   ident  := letter (letter|digit)*
class Parser {
public:
    Parser(const std::string& text, std::vector<std::string> vars)
        : text_(text), vars_(std::move(vars)) {}

    SparsePolynomial run() {
        SparsePolynomial p = parse_poly();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    SparsePolynomial parse_poly() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            skip_ws();
            negate = true;
        }
        SparsePolynomial acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            skip_ws();
            SparsePolynomial t = parse_term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    SparsePolynomial parse_term() {
        SparsePolynomial acc(vars_);
        if (std::isdigit(static_cast<unsigned char>(peek())))
            acc = SparsePolynomial::constant(vars_, parse_coeff());
        else
            acc = parse_factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * parse_factor();
        }
        return acc;
    }

    SparsePolynomial parse_factor() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            SparsePolynomial inner = parse_poly();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return maybe_pow(std::move(inner));
        }
        if (!ident_start(c)) fail("expected identifier, '(' or number");
        const std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size() && ident_tail(text_[pos_])) ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
            throw ParseError(start, "unknown variable '" + name + "'");
        return maybe_pow(SparsePolynomial::variable(vars_, name));
    }

    SparsePolynomial maybe_pow(SparsePolynomial base) {
        if (peek() != '^') return base;
        ++pos_;
        return base.pow(static_cast<unsigned>(parse_nat()));
    }

    Rational parse_coeff() {
        Integer num = parse_nat();
        if (peek() == '/') {
            ++pos_;
            Integer den = parse_nat();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Integer parse_nat() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
        Integer n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            n = n * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return n;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    const std::string& text_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

std::vector<std::string> infer_context(const std::string& text) {
    std::vector<std::string> vars;
    std::size_t i = 0;
    while (i < text.size()) {
        if (ident_start(text[i])) {
            const std::size_t start = i;
            while (i < text.size() && ident_tail(text[i])) ++i;
            const std::string name = text.substr(start, i - start);
            if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
        } else {
            ++i;
        }
    }
    return vars;
}

} // namespace

SparsePolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).run();
}

SparsePolynomial parse_polynomial(const std::string& text) {
    return Parser(text, infer_context(text)).run();
}

Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw Error("BAD_RATIONAL", "cannot parse rational '" + text + "'");
    }
}

Integer rational_floor(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    Integer q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

ExponentValue parse_exponent_value(const std::string& text) {
    if (text == "inf") return ExponentValue::infinity();
    return ExponentValue(parse_rational(text));
}

} // namespace singulex
