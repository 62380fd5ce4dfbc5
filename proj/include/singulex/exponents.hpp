#pragma once

#include <utility>
#include <vector>

#include "singulex/polynomial.hpp"
#include "singulex/rational.hpp"

namespace singulex {

// Exponent list (m_1,...,m_n) encoding the diagonal polynomial
// f = sum_i x_i^{m_i} with every m_i >= 2.
struct BrieskornPhamDescriptor {
    std::vector<unsigned> exponents;

    explicit BrieskornPhamDescriptor(std::vector<unsigned> m) : exponents(std::move(m)) {
        if (exponents.empty())
            throw Error("BAD_DESCRIPTOR", "descriptor needs at least one exponent");
        for (unsigned mi : exponents)
            if (mi < 2) throw Error("BAD_DESCRIPTOR", "every exponent must be >= 2");
    }

    std::size_t arity() const { return exponents.size(); }
};

// Minimal exponent of sum_i x_i^{m_i}: sum_i 1/m_i.
ExponentValue bp_minimal_exponent(const BrieskornPhamDescriptor& d);

// Minimal exponent of a transversal slice at an ordinary m-ple point of a
// hypersurface in an n-dimensional ambient: (n-1)/m.
ExponentValue slice_exponent_ordinary_mple(unsigned n, unsigned m);

// min combinator for minimal exponents of a product h1*h2; valid when one
// factor is weighted homogeneous (Thom-Sebastiani type situations only).
ExponentValue min_product_rule(const ExponentValue& a, const ExponentValue& b);

// Whether a point-center blow-up of sum_{i<=n-2} x_i^a + x_{n-1}^b strictly
// decreases the minimal exponent: (n-2)/a > 1/(a-b). Computed in both
// equivalent forms ((n-2)/a > 1/(a-b) and a/b > (n-2)/(n-3)) and
// cross-asserted. Requires a > b > 1 and n >= 4.
bool blowup_decreases_exponent(unsigned n, unsigned a, unsigned b);

// Per-coordinate pairs (b_i, c_i) with a_i = b_i + c_i*(m_i - 1) and
// b_i in [0, m_i - 2]; the decomposition is unique.
struct ResidueDecomposition {
    std::vector<std::pair<unsigned, unsigned>> pairs; // (b_i, c_i)
};

ResidueDecomposition decompose_residue(const ExponentVec& a, const BrieskornPhamDescriptor& d);

// Microlocal V-filtration valuation of the monomial x^a:
// sum_i ((b_i + 1)/m_i + c_i).
ExponentValue alpha_vtilde(const ExponentVec& a, const BrieskornPhamDescriptor& d);

// Brieskorn-lattice valuation of [x^a dx]: sum_i (a_i + 1)/m_i.
// Requires a_i + 1 not divisible by m_i for every i (otherwise the class
// may vanish in the lattice); throws NONVANISHING_VIOLATED.
ExponentValue alpha_br(const ExponentVec& a, const BrieskornPhamDescriptor& d);

struct GapReport {
    Rational alpha_vtilde;
    Rational alpha_br;
    Rational gap; // sum_i c_i/m_i; alpha_vtilde == alpha_br + gap exactly
    // alpha_br is also an upper bound for the maximal reduced b-function
    // root of the pair (f, x^a), which is not computed here.
    Rational upper_bound;
};

GapReport vfilt_gap(const ExponentVec& a, const BrieskornPhamDescriptor& d);

struct ClassificationReport {
    unsigned k = 0;
    ExponentValue minimal_exponent;
    bool is_k_du_bois = false;  // minimal_exponent >= k+1
    bool is_k_rational = false; // minimal_exponent >  k+1
};

ClassificationReport classify(const ExponentValue& alpha, unsigned k);

struct ApplicabilityReport {
    bool du_bois_ok = false;  // k <= (n-1)/m - 1
    bool rational_ok = false; // k <  (n-1)/m - 1
};

// Whether the characteristic-class detection criterion applies to k-du Bois
// (resp. k-rational) singularities for an ordinary m-ple locus in ambient
// dimension n; exact rational comparisons, no integer truncation.
ApplicabilityReport hm_applicable(unsigned n, unsigned m, unsigned k);

} // namespace singulex
