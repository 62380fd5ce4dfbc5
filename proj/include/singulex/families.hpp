#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singulex/polynomial.hpp"

namespace singulex {

struct SingularPointVerdict {
    std::vector<Rational> point;
    bool on_hypersurface = false;
    bool singular = false; // on_hypersurface and all partials vanish
    std::vector<std::string> vanishing_partials;
};

SingularPointVerdict is_singular_point(const SparsePolynomial& p,
                                       const std::vector<Rational>& point);

// One-parameter deformation F = f + s*g; the parameter appears in neither
// f nor g.
struct DeformationFamily {
    SparsePolynomial f;
    SparsePolynomial g;
    std::string parameter;

    DeformationFamily(SparsePolynomial f_, SparsePolynomial g_, std::string parameter_);

    // F = f + s*g in the extended context vars(f) + [parameter].
    SparsePolynomial total() const;
};

struct DeformationCheckReport {
    unsigned long samples = 0;
    unsigned long singular_hits = 0; // points where both sides are true
    std::vector<std::vector<Rational>> discrepancies;
    std::uint64_t seed = 0;

    bool pass() const { return discrepancies.empty(); }
};

// For each sample point y, checks that (y, 0) is a singular point of
// {f + s*g = 0} exactly when g(y) = 0 and y is a singularity of {f = 0}.
// The two sides are computed independently (partials of the total family
// including the parameter direction vs. direct evaluation on f and g).
DeformationCheckReport check_deformation_locus(const DeformationFamily& family,
                                               const std::vector<std::vector<Rational>>& samples);

// Same check over `count` seeded pseudo-random rational points with
// numerators and denominators bounded by max_height.
DeformationCheckReport check_deformation_locus(const DeformationFamily& family,
                                               unsigned long count, std::uint64_t seed,
                                               unsigned max_height = 100);

std::vector<std::vector<Rational>> random_rational_points(std::size_t arity,
                                                          unsigned long count,
                                                          std::uint64_t seed,
                                                          unsigned max_height = 100);

// Degree-d homogeneous family
//   sum_{k<=a} sum_{i!=k} x_i^m x_k^{d-m} + sum_{k>a} x_k^d
// over x_1..x_n, with d a multiple of m, d >= 2m, 1 <= a <= n, n >= 3.
struct CrossPowerFamilySpec {
    unsigned n = 0;
    unsigned m = 0;
    unsigned d = 0;
    unsigned a = 0;
};

SparsePolynomial build_cross_power_family(const CrossPowerFamilySpec& spec);

struct ChartRestriction {
    SparsePolynomial restricted; // context = remaining n-1 variables
    bool origin_on_hypersurface = false;
    LowestPart lowest;       // at the chart origin
    bool diagonal = false;   // lowest form is sum c_i v_i^m over all variables, c_i != 0
};

// Substitutes x_j = 1 (j is 1-based) and reports the lowest-degree data at
// the chart origin.
ChartRestriction chart_restrict(const SparsePolynomial& p, unsigned j);

enum class OrdinaryVerdict { Ordinary, NotOrdinary, Unknown };

// Ordinary iff the lowest-degree part at the center has degree m and is a
// diagonal form in all variables with nonzero coefficients, or m = 2 and
// the quadratic form has full rank over the rationals. NotOrdinary when the
// lowest degree differs from m or a rank-m=2 test fails; Unknown otherwise.
OrdinaryVerdict ordinary_point_certificate(const SparsePolynomial& p,
                                           const std::vector<Rational>& center, unsigned m);

// True when `form` is homogeneous of degree m and equals sum_i c_i v_i^m
// over every context variable with all c_i nonzero.
bool is_full_diagonal_form(const SparsePolynomial& form, unsigned m);

// Rank of the symmetric matrix of a quadratic form over the rationals.
std::size_t quadratic_form_rank(const SparsePolynomial& form);

} // namespace singulex
