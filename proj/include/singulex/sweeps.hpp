#pragma once

#include <cstdint>
#include <string>

namespace singulex::sweeps {

struct SweepResult {
    std::string name;
    bool pass = false;
    unsigned long long cases = 0; // combinations actually checked
    std::string detail;           // first failure, or a short summary
};

// Valuation gap identity alpha_vtilde == alpha_br + sum c_i/m_i over all
// monomials a_i <= max_a, exponents in [m_lo, m_hi], arity <= max_n that
// satisfy the alpha_br precondition. Exhaustive; exact arithmetic
// throughout (scaled-integer running sums for the full cross product,
// direct rational calls for low arity and a seeded sample).
SweepResult valuation_identity(unsigned max_a = 12, unsigned m_lo = 2, unsigned m_hi = 7,
                               unsigned max_n = 4, std::uint64_t sample_seed = 2026);

// Blow-up of sum_{i<=n-2} x_i^a + x_{n-1}^b + s*x_n^b for a <= max_a,
// 1 < b < a, 4 <= n <= max_n: proper transform must equal
// (sum y_i^a)*y_n^{a-b} + y_{n-1}^b + s with exceptional multiplicity b.
SweepResult blowup_cross_family(unsigned max_a = 6, unsigned min_n = 4, unsigned max_n = 6);

// Blow-up of graded local models sum_j f_{j+m} + s*x_n^m with up to two
// seeded nonzero higher parts, m <= max_m, n <= max_n: multiplicity m and
// proper transform sum_j f_{j+m}(y)*y_n^j + s, term for term.
SweepResult blowup_graded_family(unsigned max_m = 5, unsigned max_n = 6,
                                 std::uint64_t seed = 7);

// Spectrum consistency for all descriptors with m_i <= max_m, n <= max_n:
// total multiplicity, symmetry, minimum value, maximal reduced root.
SweepResult spectrum_consistency(unsigned max_m = 6, unsigned max_n = 4);

// Jacobian-ideal inclusion sweeps: the valuation-threshold inclusion for
// m_i <= max_m, n <= max_n up to degree_bound, and the f-power membership
// for a_i <= max_power_a.
SweepResult ideal_inclusions(unsigned max_m = 5, unsigned max_n = 3,
                             unsigned degree_bound = 12, unsigned max_power_a = 6);

// Pointwise singular-locus equivalence for the three designated (f, g)
// deformation families on `count` seeded rational points each.
SweepResult deformation_equivalence(unsigned long count = 1000, std::uint64_t seed = 42);

// Detection gate for n = 7, m = 2: du Bois applicability exactly for
// k in {0,1,2} and rational applicability exactly for k in {0,1}.
SweepResult detection_gate();

// Cross-power family charts: n <= max_n, m in {2,3}, d = 2m, a <= n; every
// chart j <= a is an ordinary m-ple point at the chart origin.
SweepResult family_charts(unsigned max_n = 5);

// Oracle equivalence: residue decomposition vs exhaustive search, spectrum
// vs independent pairwise convolution, ideal membership vs brute-force
// divisibility.
SweepResult oracle_equivalence(unsigned max_a = 30, unsigned max_m = 10);

// Ring laws, substitution homomorphism, Leibniz rule and print/parse
// round-trips on `count` seeded random polynomials.
SweepResult algebra_properties(unsigned long count = 10000, std::uint64_t seed = 1);

} // namespace singulex::sweeps
