#include "singulex/milnor.hpp"

namespace singulex {

namespace {

void check_size_guardrail(const BrieskornPhamDescriptor& d) {
    Integer size = 1;
    for (unsigned mi : d.exponents) size *= (mi - 1);
    if (size > Integer(term_cap()))
        throw Error("SIZE_GUARDRAIL",
                    "monomial basis has " + size.str() + " elements, above the cap of " +
                        std::to_string(term_cap()));
}

// Calls fn(a) for every a with 0 <= a_i <= hi_i.
template <typename Fn>
void enumerate_boxes(const std::vector<unsigned>& hi, Fn&& fn) {
    ExponentVec a(hi.size(), 0);
    for (;;) {
        fn(a);
        std::size_t i = 0;
        while (i < a.size() && a[i] == hi[i]) a[i++] = 0;
        if (i == a.size()) return;
        ++a[i];
    }
}

std::vector<std::string> default_vars(std::size_t n) {
    std::vector<std::string> vars;
    vars.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    return vars;
}

} // namespace

SpectrumMultiset bp_spectrum(const BrieskornPhamDescriptor& d) {
    check_size_guardrail(d);
    std::vector<unsigned> hi;
    hi.reserve(d.arity());
    for (unsigned mi : d.exponents) hi.push_back(mi - 2);
    SpectrumMultiset spec;
    enumerate_boxes(hi, [&](const ExponentVec& a) {
        Rational v = 0;
        for (std::size_t i = 0; i < a.size(); ++i) v += Rational(a[i] + 1, d.exponents[i]);
        ++spec.entries[v];
    });
    return spec;
}

Integer milnor_number(const BrieskornPhamDescriptor& d) {
    Integer mu = 1;
    for (unsigned mi : d.exponents) mu *= (mi - 1);
    return mu;
}

std::set<Rational> reduced_bs_root_set(const BrieskornPhamDescriptor& d) {
    std::set<Rational> roots;
    for (const auto& [v, mult] : bp_spectrum(d).entries) roots.insert(-v);
    if (*roots.rbegin() != -bp_minimal_exponent(d).value())
        throw Error("INTERNAL_INCONSISTENCY",
                    "maximal root does not match the minimal exponent");
    return roots;
}

MonomialIdeal MonomialIdeal::jacobian(const BrieskornPhamDescriptor& d) {
    MonomialIdeal ideal;
    for (std::size_t i = 0; i < d.arity(); ++i) {
        ExponentVec g(d.arity(), 0);
        g[i] = d.exponents[i] - 1;
        ideal.generators.push_back(std::move(g));
    }
    return ideal;
}

bool MonomialIdeal::contains_monomial(const ExponentVec& e) const {
    for (const auto& g : generators) {
        bool divides = true;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < g[i]) {
                divides = false;
                break;
            }
        if (divides) return true;
    }
    return false;
}

bool jacobian_membership(const SparsePolynomial& g, const BrieskornPhamDescriptor& d) {
    if (g.arity() != d.arity())
        throw Error("CONTEXT_MISMATCH", "polynomial arity does not match descriptor");
    const MonomialIdeal ideal = MonomialIdeal::jacobian(d);
    for (const auto& [e, c] : g.terms())
        if (!ideal.contains_monomial(e)) return false;
    return true;
}

SparsePolynomial bp_polynomial(const BrieskornPhamDescriptor& d) {
    SparsePolynomial f(default_vars(d.arity()));
    for (std::size_t i = 0; i < d.arity(); ++i) {
        ExponentVec e(d.arity(), 0);
        e[i] = d.exponents[i];
        f.add_term(e, 1);
    }
    return f;
}

InclusionReport check_vfilt_ideal_inclusion(const BrieskornPhamDescriptor& d,
                                            unsigned degree_bound) {
    const Rational threshold = Rational(d.arity()) - bp_minimal_exponent(d).value();
    const MonomialIdeal ideal = MonomialIdeal::jacobian(d);
    InclusionReport report;
    std::vector<unsigned> hi(d.arity(), degree_bound);
    enumerate_boxes(hi, [&](const ExponentVec& a) {
        if (total_degree(a) > degree_bound) return;
        if (!(alpha_vtilde(a, d).value() > threshold)) return;
        ++report.checked;
        if (report.pass && !ideal.contains_monomial(a)) {
            report.pass = false;
            report.counterexample = a;
        }
    });
    return report;
}

PowerMembershipReport check_power_membership(const BrieskornPhamDescriptor& d,
                                             const ExponentVec& a) {
    const Rational bound = Rational(d.arity()) - bp_minimal_exponent(d).value() -
                           alpha_vtilde(a, d).value();
    unsigned k = 0;
    if (bound >= 0) {
        // minimal integer strictly above the bound
        k = static_cast<unsigned>(rational_floor(bound)) + 1;
    }
    const SparsePolynomial f = bp_polynomial(d);
    const SparsePolynomial product =
        f.pow(k) * SparsePolynomial::monomial(f.vars(), a, 1);
    return PowerMembershipReport{jacobian_membership(product, d), k, bound};
}

} // namespace singulex
