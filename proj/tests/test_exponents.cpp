#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singulex/exponents.hpp"

using namespace singulex;

TEST_CASE("diagonal minimal exponent is the sum of reciprocals") {
    CHECK(bp_minimal_exponent(BrieskornPhamDescriptor({4, 4, 4, 4})) ==
          ExponentValue(Rational(1)));
    CHECK(bp_minimal_exponent(BrieskornPhamDescriptor({3})) == ExponentValue(Rational(1, 3)));
    CHECK(bp_minimal_exponent(BrieskornPhamDescriptor({2, 3})) == ExponentValue(Rational(5, 6)));
    CHECK_THROWS_AS(BrieskornPhamDescriptor({1, 2}), Error);
    CHECK_THROWS_AS(BrieskornPhamDescriptor({}), Error);
}

TEST_CASE("additivity under descriptor concatenation") {
    const BrieskornPhamDescriptor d1({2, 5}), d2({3, 7, 4});
    BrieskornPhamDescriptor cat({2, 5, 3, 7, 4});
    CHECK(bp_minimal_exponent(cat).value() ==
          bp_minimal_exponent(d1).value() + bp_minimal_exponent(d2).value());
}

TEST_CASE("slice exponent (n-1)/m") {
    CHECK(slice_exponent_ordinary_mple(4, 2).value() == Rational(3, 2));
    CHECK(slice_exponent_ordinary_mple(7, 2).value() == Rational(3));
    CHECK(slice_exponent_ordinary_mple(3, 3).value() == Rational(2, 3));
    CHECK_THROWS_AS(slice_exponent_ordinary_mple(1, 2), Error);
}

TEST_CASE("product rule takes the minimum, with inf absorbing") {
    CHECK(min_product_rule(ExponentValue(Rational(1)), ExponentValue(Rational(1, 2))) ==
          ExponentValue(Rational(1, 2)));
    CHECK(min_product_rule(ExponentValue::infinity(), ExponentValue(Rational(5, 6))) ==
          ExponentValue(Rational(5, 6)));
    CHECK(min_product_rule(ExponentValue(Rational(2, 3)), ExponentValue(Rational(2, 3))) ==
          ExponentValue(Rational(2, 3)));
    CHECK(min_product_rule(ExponentValue::infinity(), ExponentValue::infinity()).is_infinite());
}

TEST_CASE("blow-up decrease criterion, both forms") {
    CHECK(blowup_decreases_exponent(6, 4, 2));
    CHECK_FALSE(blowup_decreases_exponent(5, 3, 2)); // equality is not strict
    CHECK(blowup_decreases_exponent(4, 5, 2));
    CHECK_THROWS_AS(blowup_decreases_exponent(3, 4, 2), Error);
    CHECK_THROWS_AS(blowup_decreases_exponent(6, 2, 2), Error);

    // The two forms agree over the whole parameter box.
    for (unsigned n = 4; n <= 12; ++n)
        for (unsigned a = 3; a <= 20; ++a)
            for (unsigned b = 2; b < a; ++b)
                CHECK_NOTHROW(blowup_decreases_exponent(n, a, b));
}

TEST_CASE("residue decomposition") {
    const BrieskornPhamDescriptor d({3});
    CHECK(decompose_residue({5}, d).pairs[0] == std::pair<unsigned, unsigned>{1, 2});
    CHECK(decompose_residue({0}, d).pairs[0] == std::pair<unsigned, unsigned>{0, 0});
    const BrieskornPhamDescriptor d23({2, 3});
    const auto dec = decompose_residue({0, 3}, d23);
    CHECK(dec.pairs[0] == std::pair<unsigned, unsigned>{0, 0});
    CHECK(dec.pairs[1] == std::pair<unsigned, unsigned>{1, 1});
    CHECK_THROWS_AS(decompose_residue({1}, d23), Error);
}

TEST_CASE("monomial valuations") {
    const BrieskornPhamDescriptor d23({2, 3});
    CHECK(alpha_vtilde({0, 3}, d23).value() == Rational(13, 6));
    CHECK(alpha_vtilde({0, 0}, d23) == bp_minimal_exponent(d23));
    CHECK(alpha_vtilde({1, 0}, BrieskornPhamDescriptor({2, 2})).value() == Rational(2));

    CHECK(alpha_br({0, 3}, d23).value() == Rational(11, 6));
    CHECK(alpha_br({0, 0}, d23).value() == Rational(5, 6));
    CHECK_THROWS_WITH_AS(alpha_br({1, 0}, d23), doctest::Contains("Brieskorn"), Error);
}

TEST_CASE("valuation gap identity and bound") {
    const BrieskornPhamDescriptor d23({2, 3});
    const GapReport g = vfilt_gap({0, 3}, d23);
    CHECK(g.gap == Rational(1, 3));
    CHECK(g.alpha_vtilde == g.alpha_br + g.gap);
    CHECK(g.upper_bound == g.alpha_br);
    CHECK(g.alpha_br <= g.alpha_vtilde);

    CHECK(vfilt_gap({0, 0}, d23).gap == 0);
    CHECK(vfilt_gap({0, 1}, d23).gap == 0); // b_2 = 1, c_2 = 0
}

TEST_CASE("classification thresholds") {
    const ClassificationReport a = classify(ExponentValue(Rational(3, 2)), 0);
    CHECK(a.is_k_du_bois);
    CHECK(a.is_k_rational);
    const ClassificationReport b = classify(ExponentValue(Rational(5, 6)), 0);
    CHECK_FALSE(b.is_k_du_bois);
    CHECK_FALSE(b.is_k_rational);
    const ClassificationReport c = classify(ExponentValue(Rational(2)), 1);
    CHECK(c.is_k_du_bois);
    CHECK_FALSE(c.is_k_rational);
    const ClassificationReport inf = classify(ExponentValue::infinity(), 10);
    CHECK(inf.is_k_du_bois);
    CHECK(inf.is_k_rational);
}

TEST_CASE("classifier monotonicity in k, rational implies du Bois") {
    for (const ExponentValue alpha :
         {ExponentValue(Rational(5, 6)), ExponentValue(Rational(3, 2)), ExponentValue(Rational(3)),
          ExponentValue::infinity()}) {
        bool prev_db = true, prev_rat = true;
        for (unsigned k = 0; k <= 5; ++k) {
            const ClassificationReport r = classify(alpha, k);
            CHECK((!r.is_k_rational || r.is_k_du_bois));
            CHECK((!r.is_k_du_bois || prev_db));
            CHECK((!r.is_k_rational || prev_rat));
            prev_db = r.is_k_du_bois;
            prev_rat = r.is_k_rational;
        }
    }
}

TEST_CASE("detection gate thresholds are exact rational comparisons") {
    const ApplicabilityReport a = hm_applicable(7, 2, 2);
    CHECK(a.du_bois_ok);
    CHECK_FALSE(a.rational_ok);
    const ApplicabilityReport b = hm_applicable(7, 2, 1);
    CHECK(b.du_bois_ok);
    CHECK(b.rational_ok);
    const ApplicabilityReport c = hm_applicable(4, 3, 0);
    CHECK(c.du_bois_ok);
    CHECK_FALSE(c.rational_ok);
}
