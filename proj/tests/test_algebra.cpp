#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singulex/polynomial.hpp"

using namespace singulex;

namespace {
const std::vector<std::string> XY{"x", "y"};
}

TEST_CASE("parser reads monomial sums") {
    const SparsePolynomial p = parse_polynomial("x1^2 + x2^3", {"x1", "x2"});
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient({2, 0}) == Rational(1));
    CHECK(p.coefficient({0, 3}) == Rational(1));
}

TEST_CASE("parser reads zero") {
    CHECK(parse_polynomial("0", XY).is_zero());
}

TEST_CASE("parser cancels exactly") {
    CHECK(parse_polynomial("2/3*x*y - x*y + 1/3*x*y", XY).is_zero());
}

TEST_CASE("parser handles parentheses, signs and rational coefficients") {
    const SparsePolynomial p = parse_polynomial("-(x - 1/2*y)^2", XY);
    CHECK(p == parse_polynomial("-x^2 + x*y - 1/4*y^2", XY));
}

TEST_CASE("parser reports the byte offset of an error") {
    try {
        parse_polynomial("x + @", XY);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("parser rejects unknown variables under an explicit context") {
    CHECK_THROWS_AS(parse_polynomial("x + z", XY), ParseError);
    // Inferred context accepts the same input.
    CHECK(parse_polynomial("x + z").arity() == 2);
}

TEST_CASE("canonical printer round-trips") {
    const char* inputs[] = {"x^2*y - 3*x + 1/2", "0", "-x", "x*y + y^2 - 7/3*x^2"};
    for (const char* text : inputs) {
        const SparsePolynomial p = parse_polynomial(text, XY);
        CHECK(parse_polynomial(p.str(), XY) == p);
    }
}

TEST_CASE("substitution applies the chart rule") {
    const std::vector<std::string> ys{"y1", "y2", "y3"};
    Substitution s(ys);
    const SparsePolynomial y3 = SparsePolynomial::variable(ys, "y3");
    s.set("x1", SparsePolynomial::variable(ys, "y1") * y3);
    s.set("x2", SparsePolynomial::variable(ys, "y2") * y3);
    const SparsePolynomial p = parse_polynomial("x1^2 + x2^2", {"x1", "x2"});
    CHECK(p.substitute(s) == parse_polynomial("y1^2*y3^2 + y2^2*y3^2", ys));
}

TEST_CASE("substitution identity and evaluation to constants") {
    Substitution sid(XY);
    sid.set("x", SparsePolynomial::variable(XY, "x"));
    const SparsePolynomial x = parse_polynomial("x", XY);
    CHECK(x.substitute(sid) == x);

    Substitution sconst(XY);
    sconst.set("x", Rational(1));
    sconst.set("y", Rational(-1));
    CHECK(parse_polynomial("x + y", XY).substitute(sconst).is_zero());
}

TEST_CASE("partial derivatives") {
    const SparsePolynomial p = parse_polynomial("x^2 + y^3", XY);
    CHECK(p.derivative("x") == parse_polynomial("2*x", XY));
    CHECK(p.derivative("y") == parse_polynomial("3*y^2", XY));
    CHECK(parse_polynomial("5", XY).derivative("x").is_zero());
    CHECK_THROWS_AS(p.derivative("z"), Error);
}

TEST_CASE("graded parts bucket by degree and re-sum") {
    const std::vector<std::string> xs{"x1", "x2", "x3"};
    const SparsePolynomial p = parse_polynomial("x1^2 + x2^2 + x3*x1^3", xs);
    const auto parts = graded_parts(p, {"x1", "x2"}, 2);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == parse_polynomial("x1^2 + x2^2", xs));
    CHECK(parts[1] == parse_polynomial("x3*x1^3", xs));
    CHECK(parts[0] + parts[1] == p);

    CHECK(graded_parts(parse_polynomial("x1^2", xs), {"x1"}, 2).size() == 1);
    CHECK_THROWS_AS(graded_parts(parse_polynomial("x1", xs), {"x1"}, 2), Error);
}

TEST_CASE("factor_out_power extracts the exact exceptional power") {
    const std::vector<std::string> ys{"y1", "y2", "y3", "s"};
    const auto f = factor_out_power(
        parse_polynomial("y1^2*y3^2 + y2^2*y3^2 + s*y3^2", ys), "y3");
    CHECK(f.multiplicity == 2);
    CHECK(f.quotient == parse_polynomial("y1^2 + y2^2 + s", ys));

    const auto g = factor_out_power(parse_polynomial("x + 1", XY), "x");
    CHECK(g.multiplicity == 0);
    const auto h = factor_out_power(parse_polynomial("x^3", XY), "x");
    CHECK(h.multiplicity == 3);
    CHECK(h.quotient == parse_polynomial("1", XY));
    CHECK_THROWS_AS(factor_out_power(SparsePolynomial(XY), "x"), Error);
}

TEST_CASE("evaluation is exact") {
    CHECK(parse_polynomial("x^2*y", XY).evaluate(std::vector<Rational>{Rational(0), Rational(3)}) == 0);
    CHECK(parse_polynomial("x^2 + y^3", XY).evaluate(std::vector<Rational>{Rational(1), Rational(1)}) == 2);
    CHECK(parse_polynomial("1/2*x", XY).evaluate(std::vector<Rational>{Rational(3), Rational(0)}) == Rational(3, 2));
    CHECK_THROWS_AS(parse_polynomial("x", XY).evaluate(std::map<std::string, Rational>{}),
                    Error);
}

TEST_CASE("lowest degree part, with and without translation") {
    const auto a = lowest_degree_part(parse_polynomial("x^2 + y^2 + y^3", XY),
                                      {Rational(0), Rational(0)});
    CHECK(a.order == 2);
    CHECK(a.form == parse_polynomial("x^2 + y^2", XY));

    // (x-1)^2 expanded, centered at x=1.
    const auto b = lowest_degree_part(parse_polynomial("x^2 - 2*x + 1", {"x"}), {Rational(1)});
    CHECK(b.order == 2);
    CHECK(b.form == parse_polynomial("x^2", {"x"}));

    const std::vector<std::string> xs{"x2", "x3"};
    const auto c = lowest_degree_part(parse_polynomial("x2^2 + x3^2 + x2^4 + x3^4", xs),
                                      {Rational(0), Rational(0)});
    CHECK(c.order == 2);
    CHECK(c.form == parse_polynomial("x2^2 + x3^2", xs));
}

TEST_CASE("context mismatches are rejected") {
    const SparsePolynomial p = parse_polynomial("x", {"x"});
    const SparsePolynomial q = parse_polynomial("x", XY);
    CHECK_THROWS_AS(p + q, Error);
    Substitution s(XY);
    CHECK_THROWS_AS(s.set("x", parse_polynomial("x", {"x"})), Error);
}

TEST_CASE("term cap guardrail rejects oversized products") {
    const std::size_t old = term_cap();
    set_term_cap(8);
    const SparsePolynomial p = parse_polynomial("(x + y + 1)^2", XY);
    CHECK_THROWS_AS(p * p, Error);
    set_term_cap(old);
    CHECK_NOTHROW(p * p);
}
