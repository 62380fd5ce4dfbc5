#include "singulex/families.hpp"

#include <algorithm>
#include <random>

namespace singulex {

SingularPointVerdict is_singular_point(const SparsePolynomial& p,
                                       const std::vector<Rational>& point) {
    SingularPointVerdict v;
    v.point = point;
    v.on_hypersurface = p.evaluate(point) == 0;
    bool all_vanish = true;
    for (const auto& var : p.vars()) {
        if (p.derivative(var).evaluate(point) == 0)
            v.vanishing_partials.push_back(var);
        else
            all_vanish = false;
    }
    v.singular = v.on_hypersurface && all_vanish;
    return v;
}

DeformationFamily::DeformationFamily(SparsePolynomial f_, SparsePolynomial g_,
                                     std::string parameter_)
    : f(std::move(f_)), g(std::move(g_)), parameter(std::move(parameter_)) {
    if (f.vars() != g.vars())
        throw Error("CONTEXT_MISMATCH", "f and g must share a variable context");
    if (f.has_var(parameter))
        throw Error("BAD_PARAMETER", "parameter '" + parameter + "' is a context variable");
}

SparsePolynomial DeformationFamily::total() const {
    std::vector<std::string> ext = f.vars();
    ext.push_back(parameter);
    Substitution embed(ext);
    const SparsePolynomial fe = f.substitute(embed);
    const SparsePolynomial ge = g.substitute(embed);
    return fe + ge * SparsePolynomial::variable(ext, parameter);
}

DeformationCheckReport check_deformation_locus(
    const DeformationFamily& family, const std::vector<std::vector<Rational>>& samples) {
    DeformationCheckReport report;
    const SparsePolynomial F = family.total();
    for (const auto& y : samples) {
        ++report.samples;
        std::vector<Rational> extended = y;
        extended.emplace_back(0);
        const bool left = is_singular_point(F, extended).singular;
        const bool right =
            family.g.evaluate(y) == 0 && is_singular_point(family.f, y).singular;
        if (left != right)
            report.discrepancies.push_back(y);
        else if (left)
            ++report.singular_hits;
    }
    return report;
}

std::vector<std::vector<Rational>> random_rational_points(std::size_t arity,
                                                          unsigned long count,
                                                          std::uint64_t seed,
                                                          unsigned max_height) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-static_cast<long>(max_height), max_height);
    std::uniform_int_distribution<long> den(1, max_height);
    std::vector<std::vector<Rational>> points;
    points.reserve(count);
    for (unsigned long k = 0; k < count; ++k) {
        std::vector<Rational> p;
        p.reserve(arity);
        for (std::size_t i = 0; i < arity; ++i) p.emplace_back(num(rng), den(rng));
        points.push_back(std::move(p));
    }
    return points;
}

DeformationCheckReport check_deformation_locus(const DeformationFamily& family,
                                               unsigned long count, std::uint64_t seed,
                                               unsigned max_height) {
    DeformationCheckReport report = check_deformation_locus(
        family, random_rational_points(family.f.arity(), count, seed, max_height));
    report.seed = seed;
    return report;
}

SparsePolynomial build_cross_power_family(const CrossPowerFamilySpec& spec) {
    if (spec.n < 3) throw Error("BAD_FAMILY_SPEC", "requires n >= 3");
    if (spec.a < 1 || spec.a > spec.n) throw Error("BAD_FAMILY_SPEC", "requires 1 <= a <= n");
    if (spec.m < 2 || spec.d % spec.m != 0 || spec.d < 2 * spec.m)
        throw Error("BAD_FAMILY_SPEC", "requires m >= 2 and d a multiple of m with d >= 2m");

    std::vector<std::string> vars;
    for (unsigned i = 1; i <= spec.n; ++i) vars.push_back("x" + std::to_string(i));
    SparsePolynomial f(vars);
    for (unsigned k = 1; k <= spec.a; ++k)
        for (unsigned i = 1; i <= spec.n; ++i) {
            if (i == k) continue;
            ExponentVec e(spec.n, 0);
            e[i - 1] += spec.m;
            e[k - 1] += spec.d - spec.m;
            f.add_term(e, 1);
        }
    for (unsigned k = spec.a + 1; k <= spec.n; ++k) {
        ExponentVec e(spec.n, 0);
        e[k - 1] = spec.d;
        f.add_term(e, 1);
    }
    return f;
}

ChartRestriction chart_restrict(const SparsePolynomial& p, unsigned j) {
    if (j < 1 || j > p.arity()) throw Error("BAD_PARAMETER", "chart index out of range");
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < p.arity(); ++i)
        if (i != j - 1) rest.push_back(p.vars()[i]);
    if (rest.empty()) throw Error("BAD_PARAMETER", "cannot restrict a univariate context");

    Substitution subst(rest);
    subst.set(p.vars()[j - 1], Rational(1));
    ChartRestriction out{p.substitute(subst), false,
                         LowestPart{0, SparsePolynomial(rest)}, false};
    if (!out.restricted.is_zero()) {
        out.lowest = lowest_degree_part(out.restricted,
                                        std::vector<Rational>(rest.size(), 0));
        out.origin_on_hypersurface = out.lowest.order > 0;
        out.diagonal = is_full_diagonal_form(out.lowest.form, out.lowest.order);
    } else {
        out.origin_on_hypersurface = true;
    }
    return out;
}

bool is_full_diagonal_form(const SparsePolynomial& form, unsigned m) {
    if (form.is_zero() || m == 0) return false;
    std::vector<bool> seen(form.arity(), false);
    for (const auto& [e, c] : form.terms()) {
        std::size_t support = 0, idx = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) {
                ++support;
                idx = i;
            }
        if (support != 1 || e[idx] != m) return false;
        seen[idx] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::size_t quadratic_form_rank(const SparsePolynomial& form) {
    const std::size_t n = form.arity();
    // Symmetric matrix of the form: Q_ii = coeff(v_i^2), Q_ij = coeff(v_i v_j)/2.
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [e, c] : form.terms()) {
        if (total_degree(e) != 2)
            throw Error("BAD_PARAMETER", "quadratic rank of a non-quadratic form");
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) support.push_back(i);
        if (support[0] == support[1]) {
            q[support[0]][support[0]] = c;
        } else {
            q[support[0]][support[1]] = c / 2;
            q[support[1]][support[0]] = c / 2;
        }
    }
    // Gaussian elimination over the rationals.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && q[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(q[pivot], q[rank]);
        for (std::size_t r = rank + 1; r < n; ++r) {
            if (q[r][col] == 0) continue;
            const Rational factor = q[r][col] / q[rank][col];
            for (std::size_t cc = col; cc < n; ++cc) q[r][cc] -= factor * q[rank][cc];
        }
        ++rank;
    }
    return rank;
}

OrdinaryVerdict ordinary_point_certificate(const SparsePolynomial& p,
                                           const std::vector<Rational>& center, unsigned m) {
    const LowestPart low = lowest_degree_part(p, center);
    if (low.order != m) return OrdinaryVerdict::NotOrdinary;
    if (is_full_diagonal_form(low.form, m)) return OrdinaryVerdict::Ordinary;
    if (m == 2)
        return quadratic_form_rank(low.form) == p.arity() ? OrdinaryVerdict::Ordinary
                                                          : OrdinaryVerdict::NotOrdinary;
    return OrdinaryVerdict::Unknown;
}

} // namespace singulex
