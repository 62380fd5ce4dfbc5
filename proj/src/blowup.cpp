#include "singulex/blowup.hpp"

#include <algorithm>

namespace singulex {

BlowupChart::BlowupChart(std::vector<std::string> src, std::vector<std::string> dst)
    : source_vars(std::move(src)), target_vars(std::move(dst)) {
    if (source_vars.size() != target_vars.size() || source_vars.empty())
        throw Error("BAD_CHART", "chart must map n source variables to n target variables");
}

std::vector<std::string> BlowupChart::target_context(
    const std::vector<std::string>& poly_vars) const {
    std::vector<std::string> ctx = target_vars;
    for (const auto& v : poly_vars)
        if (std::find(source_vars.begin(), source_vars.end(), v) == source_vars.end())
            ctx.push_back(v);
    return ctx;
}

Substitution BlowupChart::substitution(const std::vector<std::string>& poly_vars) const {
    for (const auto& v : source_vars)
        if (std::find(poly_vars.begin(), poly_vars.end(), v) == poly_vars.end())
            throw Error("CONTEXT_MISMATCH",
                        "chart source variable '" + v + "' not in the polynomial context");
    const std::vector<std::string> ctx = target_context(poly_vars);
    const std::size_t n = source_vars.size();
    Substitution s(ctx);
    const SparsePolynomial yn = SparsePolynomial::variable(ctx, target_vars[n - 1]);
    for (std::size_t i = 0; i + 1 < n; ++i)
        s.set(source_vars[i], SparsePolynomial::variable(ctx, target_vars[i]) * yn);
    s.set(source_vars[n - 1], yn);
    return s;
}

TransformResult blowup_transform(const SparsePolynomial& p, const BlowupChart& chart,
                                 const std::string& exceptional) {
    if (p.is_zero()) throw Error("ZERO_POLYNOMIAL", "cannot transform the zero polynomial");
    SparsePolynomial total = p.substitute(chart.substitution(p.vars()));
    PowerFactorization fact = factor_out_power(total, exceptional);
    return TransformResult{std::move(total), fact.multiplicity, std::move(fact.quotient)};
}

namespace {

// proper has the form Phi + s exactly: its partial in s is the constant 1.
bool graph_over_parameter(const SparsePolynomial& p, const std::string& parameter) {
    return p.derivative(parameter) == SparsePolynomial::constant(p.vars(), 1);
}

} // namespace

ChartVerification verify_smoothing_chart(const SparsePolynomial& p, unsigned m,
                                         const std::string& parameter) {
    if (p.arity() < 3)
        throw Error("BAD_PARAMETER", "need at least two geometric variables and a parameter");
    const std::string s_var = parameter.empty() ? p.vars().back() : parameter;
    const std::size_t s_idx = p.var_index(s_var);

    // Geometric variables, in context order with the parameter removed.
    std::vector<std::string> geo;
    for (const auto& v : p.vars())
        if (v != s_var) geo.push_back(v);
    const std::string& xn = geo.back();

    // Split p = base + s * (x_n power); the s-part must be a single term
    // s * x_n^e with coefficient 1.
    SparsePolynomial base(p.vars());
    ExponentVec s_term;
    for (const auto& [e, c] : p.terms()) {
        if (e[s_idx] == 0) {
            base.add_term(e, c);
            continue;
        }
        if (!s_term.empty() || e[s_idx] != 1 || c != 1)
            throw Error("SHAPE_VIOLATION", "parameter part is not a single term s*xn^e");
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != s_idx && e[i] != 0 && p.vars()[i] != xn)
                throw Error("SHAPE_VIOLATION",
                            "parameter term involves a variable other than " + xn);
        s_term = e;
    }
    if (s_term.empty())
        throw Error("SHAPE_VIOLATION", "no parameter term found");

    // The base must split into graded parts of degree >= m in geo[0..n-2].
    const std::vector<std::string> transverse(geo.begin(), geo.end() - 1);
    graded_parts(base, transverse, m); // throws on a degree-below-base term

    std::vector<std::string> tgt;
    for (std::size_t i = 1; i <= geo.size(); ++i) tgt.push_back("y" + std::to_string(i));
    const BlowupChart chart(geo, tgt);
    TransformResult tr = blowup_transform(p, chart, chart.exceptional_var());

    ChartVerification out{false,
                          SmoothnessCertificate{SmoothnessCertificate::Kind::Unknown, ""},
                          tr,
                          LowestPart{0, SparsePolynomial(tr.proper.vars())},
                          ""};

    Substitution s0(tr.proper.vars());
    s0.set(s_var, Rational(0));
    const SparsePolynomial slice = tr.proper.substitute(s0);
    if (!slice.is_zero())
        out.slice_lowest = lowest_degree_part(slice, std::vector<Rational>(slice.arity(), 0));

    if (tr.exceptional_multiplicity != m) {
        out.failure = "exceptional multiplicity " +
                      std::to_string(tr.exceptional_multiplicity) + " != " + std::to_string(m);
        return out;
    }
    if (!graph_over_parameter(tr.proper, s_var)) {
        out.failure = "proper transform is not of the form Phi + " + s_var;
        return out;
    }
    out.ok = true;
    out.certificate = SmoothnessCertificate{SmoothnessCertificate::Kind::GraphOverS, s_var};
    return out;
}

std::vector<TransformResult> iterated_blowup(const SparsePolynomial& p,
                                             const std::vector<ChartStep>& steps) {
    std::vector<TransformResult> chain;
    const SparsePolynomial* current = &p;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        try {
            chain.push_back(blowup_transform(*current, steps[i].chart, steps[i].exceptional));
        } catch (const Error& e) {
            throw Error(e.code(), "step " + std::to_string(i + 1) + ": " + e.what());
        }
        current = &chain.back().proper;
    }
    return chain;
}

} // namespace singulex
