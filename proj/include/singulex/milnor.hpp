#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "singulex/exponents.hpp"
#include "singulex/polynomial.hpp"

namespace singulex {

// Multiset of rational spectral numbers with multiplicities. For a
// descriptor (m_1,...,m_n): total multiplicity = prod(m_i - 1), entries
// symmetric under a <-> n - a, minimum = sum 1/m_i.
struct SpectrumMultiset {
    std::map<Rational, unsigned> entries;

    unsigned total_multiplicity() const {
        unsigned t = 0;
        for (const auto& [v, m] : entries) t += m;
        return t;
    }
};

// Enumerates { sum_i (a_i+1)/m_i : 0 <= a_i <= m_i-2 } with multiplicity.
SpectrumMultiset bp_spectrum(const BrieskornPhamDescriptor& d);

// prod(m_i - 1), the rank of the monomial basis behind bp_spectrum.
Integer milnor_number(const BrieskornPhamDescriptor& d);

// Distinct values -sum_i k_i/m_i with k_i in [1, m_i-1]; the maximum equals
// -bp_minimal_exponent(d) (asserted).
std::set<Rational> reduced_bs_root_set(const BrieskornPhamDescriptor& d);

// Monomial ideal given by a reduced generator list; here used for the
// Jacobian ideal (x_1^{m_1-1}, ..., x_n^{m_n-1}) of a diagonal polynomial.
struct MonomialIdeal {
    std::vector<ExponentVec> generators;

    static MonomialIdeal jacobian(const BrieskornPhamDescriptor& d);

    bool contains_monomial(const ExponentVec& e) const;
};

// True iff every term of g is divisible by some generator of the Jacobian
// ideal of the descriptor's diagonal polynomial.
bool jacobian_membership(const SparsePolynomial& g, const BrieskornPhamDescriptor& d);

// sum_i x_i^{m_i} over variables x1..xn.
SparsePolynomial bp_polynomial(const BrieskornPhamDescriptor& d);

struct InclusionReport {
    bool pass = true;
    unsigned long checked = 0; // monomials above the valuation threshold
    std::optional<ExponentVec> counterexample;
};

// Sweeps all monomials of total degree <= degree_bound; every monomial with
// alpha_vtilde strictly above n - sum 1/m_i must lie in the Jacobian ideal.
InclusionReport check_vfilt_ideal_inclusion(const BrieskornPhamDescriptor& d,
                                            unsigned degree_bound);

struct PowerMembershipReport {
    bool pass = false;
    unsigned k = 0; // minimal k with k > n - sum 1/m_i - alpha_vtilde(a)
    Rational bound; // the strict lower bound itself
};

// Computes the minimal integer k strictly above n - sum 1/m_i -
// alpha_vtilde(x^a), expands f^k * x^a symbolically and checks Jacobian
// ideal membership term by term.
PowerMembershipReport check_power_membership(const BrieskornPhamDescriptor& d,
                                             const ExponentVec& a);

} // namespace singulex
