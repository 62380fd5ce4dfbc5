#pragma once

#include <string>
#include <vector>

#include "singulex/polynomial.hpp"

namespace singulex {

// Principal chart of the point-center blow-up: x_i -> y_i * y_n for i < n,
// x_n -> y_n. Variables of the source context outside source_vars (the
// deformation parameter) pass through unchanged.
struct BlowupChart {
    std::vector<std::string> source_vars;
    std::vector<std::string> target_vars;

    BlowupChart(std::vector<std::string> src, std::vector<std::string> dst);

    const std::string& exceptional_var() const { return target_vars.back(); }

    // Target context for a polynomial over `poly_vars`: target_vars followed
    // by the pass-through variables in their original order.
    std::vector<std::string> target_context(const std::vector<std::string>& poly_vars) const;

    Substitution substitution(const std::vector<std::string>& poly_vars) const;
};

struct TransformResult {
    SparsePolynomial total;
    unsigned exceptional_multiplicity = 0;
    SparsePolynomial proper;
};

// total = chart pullback of p; (multiplicity, proper) = the exact power of
// the exceptional variable factored out of it.
TransformResult blowup_transform(const SparsePolynomial& p, const BlowupChart& chart,
                                 const std::string& exceptional);

struct SmoothnessCertificate {
    enum class Kind { GraphOverS, Unknown };
    Kind kind = Kind::Unknown;
    std::string witness; // the parameter variable for GraphOverS
};

struct ChartVerification {
    bool ok = false;
    SmoothnessCertificate certificate;
    TransformResult transform;
    // Lowest-degree data of the proper transform restricted to parameter 0,
    // at the chart origin (the m-ple point check).
    LowestPart slice_lowest;
    std::string failure; // empty when ok
};

// Checks the local smoothing model p = sum_j f_{j+m}(x_1..x_{n-1}; x_n)
// + s * x_n^e: applies the principal chart on (x_1..x_n), and certifies
// GraphOverS when the exceptional multiplicity is exactly m and the proper
// transform has the form Phi(y) + s.
// The parameter variable defaults to the last context variable and x_n to
// the one before it.
ChartVerification verify_smoothing_chart(const SparsePolynomial& p, unsigned m,
                                         const std::string& parameter = "");

struct ChartStep {
    BlowupChart chart;
    std::string exceptional;
};

// Applies blowup_transform sequentially to the running proper transform;
// returns the full chain. A failing step reports its index.
std::vector<TransformResult> iterated_blowup(const SparsePolynomial& p,
                                             const std::vector<ChartStep>& steps);

} // namespace singulex
