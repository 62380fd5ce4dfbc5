#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singulex/milnor.hpp"

using namespace singulex;

TEST_CASE("spectra of small diagonal singularities") {
    const SpectrumMultiset s22 = bp_spectrum(BrieskornPhamDescriptor({2, 2}));
    REQUIRE(s22.entries.size() == 1);
    CHECK(s22.entries.at(Rational(1)) == 1);

    const SpectrumMultiset s23 = bp_spectrum(BrieskornPhamDescriptor({2, 3}));
    REQUIRE(s23.entries.size() == 2);
    CHECK(s23.entries.at(Rational(5, 6)) == 1);
    CHECK(s23.entries.at(Rational(7, 6)) == 1);

    const SpectrumMultiset s33 = bp_spectrum(BrieskornPhamDescriptor({3, 3}));
    REQUIRE(s33.entries.size() == 3);
    CHECK(s33.entries.at(Rational(2, 3)) == 1);
    CHECK(s33.entries.at(Rational(1)) == 2);
    CHECK(s33.entries.at(Rational(4, 3)) == 1);
}

TEST_CASE("Milnor numbers") {
    CHECK(milnor_number(BrieskornPhamDescriptor({2, 3})) == 2);
    CHECK(milnor_number(BrieskornPhamDescriptor({2, 2})) == 1);
    CHECK(milnor_number(BrieskornPhamDescriptor({4, 4, 4})) == 27);
    CHECK(Integer(bp_spectrum(BrieskornPhamDescriptor({4, 4, 4})).total_multiplicity()) ==
          milnor_number(BrieskornPhamDescriptor({4, 4, 4})));
}

TEST_CASE("reduced root sets") {
    const auto r23 = reduced_bs_root_set(BrieskornPhamDescriptor({2, 3}));
    CHECK(r23 == std::set<Rational>{Rational(-5, 6), Rational(-7, 6)});
    CHECK(reduced_bs_root_set(BrieskornPhamDescriptor({2, 2})) ==
          std::set<Rational>{Rational(-1)});
    CHECK(reduced_bs_root_set(BrieskornPhamDescriptor({3})) ==
          std::set<Rational>{Rational(-1, 3), Rational(-2, 3)});
}

TEST_CASE("spectrum symmetry under a -> n - a") {
    for (unsigned m1 = 2; m1 <= 5; ++m1)
        for (unsigned m2 = 2; m2 <= 5; ++m2) {
            const SpectrumMultiset spec = bp_spectrum(BrieskornPhamDescriptor({m1, m2}));
            for (const auto& [alpha, mult] : spec.entries)
                CHECK(spec.entries.at(Rational(2) - alpha) == mult);
        }
}

TEST_CASE("Jacobian ideal membership for diagonal polynomials") {
    const BrieskornPhamDescriptor d23({2, 3});
    const std::vector<std::string> xy{"x1", "x2"};
    CHECK(jacobian_membership(parse_polynomial("x1*x2", xy), d23));
    CHECK_FALSE(jacobian_membership(parse_polynomial("x2", xy), d23));
    CHECK(jacobian_membership(SparsePolynomial(xy), d23)); // zero polynomial
    CHECK_THROWS_AS(jacobian_membership(parse_polynomial("x1", {"x1"}), d23), Error);
}

TEST_CASE("generator list of the Jacobian ideal is reduced") {
    const MonomialIdeal ideal = MonomialIdeal::jacobian(BrieskornPhamDescriptor({2, 3, 4}));
    REQUIRE(ideal.generators.size() == 3);
    for (std::size_t i = 0; i < ideal.generators.size(); ++i)
        for (std::size_t j = 0; j < ideal.generators.size(); ++j) {
            if (i == j) continue;
            bool divides = true;
            for (std::size_t k = 0; k < 3; ++k)
                if (ideal.generators[j][k] < ideal.generators[i][k]) divides = false;
            CHECK_FALSE(divides);
        }
}

TEST_CASE("valuation-threshold inclusion, hand-checked cases") {
    // (2,2): the monomial x has valuation 2 > 2 - 1 and lies in (x, y).
    const InclusionReport r22 = check_vfilt_ideal_inclusion(BrieskornPhamDescriptor({2, 2}), 4);
    CHECK(r22.pass);
    CHECK(r22.checked > 0);

    // Single cube: x sits exactly on the threshold (2/3), so no claim is
    // made for it; x^2 clears the threshold and lies in (x^2).
    const BrieskornPhamDescriptor d3({3});
    CHECK(alpha_vtilde({1}, d3).value() == Rational(1) - bp_minimal_exponent(d3).value());
    CHECK(alpha_vtilde({2}, d3).value() > Rational(1) - bp_minimal_exponent(d3).value());
    const InclusionReport r3 = check_vfilt_ideal_inclusion(d3, 6);
    CHECK(r3.pass);
}

TEST_CASE("f-power membership, hand-checked minimal powers") {
    // (2,3), g = x2: bound 2 - 5/6 - 7/6 = 0, so k = 1, and f*x2 lies in
    // (x1, x2^2).
    const PowerMembershipReport a = check_power_membership(BrieskornPhamDescriptor({2, 3}), {0, 1});
    CHECK(a.pass);
    CHECK(a.k == 1);

    // (2,2), g = x1*x2: valuation 3 makes the bound negative, so k = 0.
    const PowerMembershipReport b = check_power_membership(BrieskornPhamDescriptor({2, 2}), {1, 1});
    CHECK(b.pass);
    CHECK(b.k == 0);

    // Single square, g = 1: bound 1 - 1/2 - 1/2 = 0, so k = 1.
    const PowerMembershipReport c = check_power_membership(BrieskornPhamDescriptor({2}), {0});
    CHECK(c.pass);
    CHECK(c.k == 1);
}

TEST_CASE("spectrum size guardrail") {
    const std::size_t old = term_cap();
    set_term_cap(10);
    CHECK_THROWS_AS(bp_spectrum(BrieskornPhamDescriptor({5, 5, 5})), Error);
    set_term_cap(old);
}
