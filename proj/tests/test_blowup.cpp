#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singulex/blowup.hpp"

using namespace singulex;

namespace {

std::vector<std::string> with_param(std::vector<std::string> vars) {
    vars.push_back("s");
    return vars;
}

} // namespace

TEST_CASE("principal chart transform of the double-point model") {
    const auto ctx = with_param({"x1", "x2", "x3"});
    const SparsePolynomial p = parse_polynomial("x1^2 + x2^2 + s*x3^2", ctx);
    const BlowupChart chart({"x1", "x2", "x3"}, {"y1", "y2", "y3"});
    const TransformResult tr = blowup_transform(p, chart, "y3");

    const auto yctx = with_param({"y1", "y2", "y3"});
    CHECK(tr.total == parse_polynomial("(y1^2 + y2^2 + s)*y3^2", yctx));
    CHECK(tr.exceptional_multiplicity == 2);
    CHECK(tr.proper == parse_polynomial("y1^2 + y2^2 + s", yctx));
    // Factorization exactness.
    CHECK(tr.proper * SparsePolynomial::variable(yctx, "y3").pow(2) == tr.total);
}

TEST_CASE("principal chart transform of the mixed-power model") {
    const auto ctx = with_param({"x1", "x2", "x3", "x4"});
    const SparsePolynomial p = parse_polynomial("x1^3 + x2^3 + x3^2 + s*x4^2", ctx);
    const BlowupChart chart({"x1", "x2", "x3", "x4"}, {"y1", "y2", "y3", "y4"});
    const TransformResult tr = blowup_transform(p, chart, "y4");
    CHECK(tr.exceptional_multiplicity == 2);
    CHECK(tr.proper ==
          parse_polynomial("y1^3*y4 + y2^3*y4 + y3^2 + s", with_param({"y1", "y2", "y3", "y4"})));
}

TEST_CASE("transforming the exceptional variable itself") {
    const SparsePolynomial p = parse_polynomial("x2", {"x1", "x2"});
    const BlowupChart chart({"x1", "x2"}, {"y1", "y2"});
    const TransformResult tr = blowup_transform(p, chart, "y2");
    CHECK(tr.exceptional_multiplicity == 1);
    CHECK(tr.proper == parse_polynomial("1", {"y1", "y2"}));
}

TEST_CASE("zero polynomial and context mismatch are rejected") {
    const BlowupChart chart({"x1", "x2"}, {"y1", "y2"});
    CHECK_THROWS_AS(blowup_transform(SparsePolynomial({"x1", "x2"}), chart, "y2"), Error);
    CHECK_THROWS_AS(blowup_transform(parse_polynomial("z", {"z"}), chart, "y2"), Error);
}

TEST_CASE("smoothing chart verification issues GRAPH_OVER_S") {
    const SparsePolynomial p =
        parse_polynomial("x1^2 + x2^2 + s*x3^2", with_param({"x1", "x2", "x3"}));
    const ChartVerification v = verify_smoothing_chart(p, 2);
    CHECK(v.ok);
    CHECK(v.certificate.kind == SmoothnessCertificate::Kind::GraphOverS);
    CHECK(v.certificate.witness == "s");
    // Slice at s = 0 has an ordinary double point at the chart origin.
    CHECK(v.slice_lowest.order == 2);
    // Certificate soundness: the parameter partial of the proper transform
    // is the constant 1.
    CHECK(v.transform.proper.derivative("s") ==
          SparsePolynomial::constant(v.transform.proper.vars(), 1));
}

TEST_CASE("smoothing chart verification accepts higher graded parts") {
    const SparsePolynomial p =
        parse_polynomial("x1^3 + x2^3 + x3^2 + s*x4^2", with_param({"x1", "x2", "x3", "x4"}));
    const ChartVerification v = verify_smoothing_chart(p, 2);
    CHECK(v.ok);
}

TEST_CASE("smoothing chart verification rejects a parameter term of the wrong power") {
    // g = x3^3 with m = 2: the parameter coefficient keeps a factor of the
    // exceptional variable, so the graph certificate must be refused.
    const SparsePolynomial p = parse_polynomial("x1^2 + s*x3^3", with_param({"x1", "x3"}));
    const ChartVerification v = verify_smoothing_chart(p, 2);
    CHECK_FALSE(v.ok);
    CHECK(v.certificate.kind == SmoothnessCertificate::Kind::Unknown);
    CHECK(v.failure.find("Phi + s") != std::string::npos);
}

TEST_CASE("smoothing chart verification rejects malformed local models") {
    // Degree below the base in the transverse variables.
    CHECK_THROWS_AS(verify_smoothing_chart(
                        parse_polynomial("x1 + s*x3^2", with_param({"x1", "x2", "x3"})), 2),
                    Error);
    // Parameter appearing quadratically.
    CHECK_THROWS_AS(verify_smoothing_chart(
                        parse_polynomial("x1^2 + s^2*x3^2", with_param({"x1", "x2", "x3"})), 2),
                    Error);
}

TEST_CASE("iterated blow-up resolves the r = 2 model in two steps") {
    const SparsePolynomial p =
        parse_polynomial("x1^2 + x2^2 + s*x3^4", with_param({"x1", "x2", "x3"}));
    const BlowupChart step1({"x1", "x2", "x3"}, {"y1", "y2", "y3"});
    const BlowupChart step2({"y1", "y2", "y3"}, {"z1", "z2", "z3"});
    const auto chain = iterated_blowup(p, {{step1, "y3"}, {step2, "z3"}});
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].exceptional_multiplicity == 2);
    CHECK(chain[0].proper ==
          parse_polynomial("y1^2 + y2^2 + s*y3^2", with_param({"y1", "y2", "y3"})));
    CHECK(chain[1].exceptional_multiplicity == 2);
    CHECK(chain[1].proper == parse_polynomial("z1^2 + z2^2 + s", with_param({"z1", "z2", "z3"})));
    CHECK(chain[1].proper.derivative("s") ==
          SparsePolynomial::constant(chain[1].proper.vars(), 1));
}

TEST_CASE("a one-step chain equals a single transform") {
    const SparsePolynomial p =
        parse_polynomial("x1^2 + x2^2 + s*x3^2", with_param({"x1", "x2", "x3"}));
    const BlowupChart chart({"x1", "x2", "x3"}, {"y1", "y2", "y3"});
    const auto chain = iterated_blowup(p, {{chart, "y3"}});
    REQUIRE(chain.size() == 1);
    const TransformResult single = blowup_transform(p, chart, "y3");
    CHECK(chain[0].proper == single.proper);
    CHECK(chain[0].exceptional_multiplicity == single.exceptional_multiplicity);
}

TEST_CASE("failing steps report their index") {
    const SparsePolynomial p = parse_polynomial("x1^2", {"x1", "x2"});
    const BlowupChart good({"x1", "x2"}, {"y1", "y2"});
    const BlowupChart bad({"a1", "a2"}, {"b1", "b2"});
    try {
        iterated_blowup(p, {{good, "y2"}, {bad, "b2"}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("step 2") != std::string::npos);
    }
}
