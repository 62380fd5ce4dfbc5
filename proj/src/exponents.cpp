#include "singulex/exponents.hpp"

namespace singulex {

ExponentValue bp_minimal_exponent(const BrieskornPhamDescriptor& d) {
    Rational sum = 0;
    for (unsigned mi : d.exponents) sum += Rational(1, mi);
    return ExponentValue(sum);
}

ExponentValue slice_exponent_ordinary_mple(unsigned n, unsigned m) {
    if (n < 2 || m < 2)
        throw Error("BAD_PARAMETER", "slice exponent requires n >= 2 and m >= 2");
    return ExponentValue(Rational(n - 1, m));
}

ExponentValue min_product_rule(const ExponentValue& a, const ExponentValue& b) {
    return min(a, b);
}

bool blowup_decreases_exponent(unsigned n, unsigned a, unsigned b) {
    if (n < 4) throw Error("BAD_PARAMETER", "requires n >= 4");
    if (!(a > b && b > 1)) throw Error("BAD_PARAMETER", "requires a > b > 1");
    const bool direct = Rational(n - 2, a) > Rational(1, a - b);
    const bool ratio = Rational(a, b) > Rational(n - 2, n - 3);
    if (direct != ratio)
        throw Error("INTERNAL_INCONSISTENCY", "equivalent decrease criteria disagree");
    return direct;
}

ResidueDecomposition decompose_residue(const ExponentVec& a, const BrieskornPhamDescriptor& d) {
    if (a.size() != d.arity())
        throw Error("ARITY_MISMATCH", "exponent vector arity does not match descriptor");
    ResidueDecomposition out;
    out.pairs.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const unsigned step = d.exponents[i] - 1;
        out.pairs.emplace_back(a[i] % step, a[i] / step);
    }
    return out;
}

ExponentValue alpha_vtilde(const ExponentVec& a, const BrieskornPhamDescriptor& d) {
    const ResidueDecomposition dec = decompose_residue(a, d);
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto [bi, ci] = dec.pairs[i];
        sum += Rational(bi + 1, d.exponents[i]) + ci;
    }
    return ExponentValue(sum);
}

ExponentValue alpha_br(const ExponentVec& a, const BrieskornPhamDescriptor& d) {
    if (a.size() != d.arity())
        throw Error("ARITY_MISMATCH", "exponent vector arity does not match descriptor");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] + 1) % d.exponents[i] == 0)
            throw Error("NONVANISHING_VIOLATED",
                        "a_" + std::to_string(i + 1) + " + 1 is a multiple of m_" +
                            std::to_string(i + 1) +
                            "; the monomial class may vanish in the Brieskorn lattice");
        sum += Rational(a[i] + 1, d.exponents[i]);
    }
    return ExponentValue(sum);
}

GapReport vfilt_gap(const ExponentVec& a, const BrieskornPhamDescriptor& d) {
    const Rational br = alpha_br(a, d).value();
    const Rational vt = alpha_vtilde(a, d).value();
    const ResidueDecomposition dec = decompose_residue(a, d);
    Rational gap = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        gap += Rational(dec.pairs[i].second, d.exponents[i]);
    if (vt != br + gap)
        throw Error("INTERNAL_INCONSISTENCY", "valuation gap identity failed");
    return GapReport{vt, br, gap, br};
}

ClassificationReport classify(const ExponentValue& alpha, unsigned k) {
    ClassificationReport r{k, alpha, false, false};
    const ExponentValue threshold{Rational(k + 1)};
    r.is_k_du_bois = alpha >= threshold;
    r.is_k_rational = alpha > threshold;
    return r;
}

ApplicabilityReport hm_applicable(unsigned n, unsigned m, unsigned k) {
    if (n < 2 || m < 2)
        throw Error("BAD_PARAMETER", "requires n >= 2 and m >= 2");
    const Rational threshold = Rational(n - 1, m) - 1;
    return ApplicabilityReport{Rational(k) <= threshold, Rational(k) < threshold};
}

} // namespace singulex
