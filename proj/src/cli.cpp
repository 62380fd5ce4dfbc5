#include "singulex/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <sstream>

#include "singulex/blowup.hpp"
#include "singulex/exponents.hpp"
#include "singulex/families.hpp"
#include "singulex/milnor.hpp"
#include "singulex/polynomial.hpp"
#include "singulex/sweeps.hpp"

namespace singulex {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<unsigned> parse_uint_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw Error("BAD_LIST", "empty entry in list '" + text + "'");
        out.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (out.empty()) throw Error("BAD_LIST", "empty list");
    return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

ExponentVec to_exponents(const std::vector<unsigned>& v) {
    return ExponentVec(v.begin(), v.end());
}

SparsePolynomial parse_poly_arg(const std::string& text, const std::string& vars_csv) {
    if (vars_csv.empty()) return parse_polynomial(text);
    return parse_polynomial(text, parse_name_list(vars_csv));
}

// Text mode prints the same values as flattened "key = value" lines.
void emit(const ordered_json& j, bool as_json, std::ostream& out) {
    if (as_json) {
        out << j.dump() << "\n";
        return;
    }
    std::function<void(const ordered_json&, const std::string&)> walk =
        [&](const ordered_json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (const auto& [k, v] : node.items())
                    walk(v, prefix.empty() ? k : prefix + "." + k);
            } else if (node.is_array()) {
                for (std::size_t i = 0; i < node.size(); ++i)
                    walk(node[i], prefix + "[" + std::to_string(i) + "]");
            } else {
                out << prefix << " = "
                    << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
            }
        };
    walk(j, "");
}

ordered_json sweep_json(const sweeps::SweepResult& r) {
    return ordered_json{
        {"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}};
}

ordered_json spectrum_json(const SpectrumMultiset& spec) {
    ordered_json arr = ordered_json::array();
    for (const auto& [value, mult] : spec.entries)
        arr.push_back(ordered_json{{"value", to_string(value)}, {"mult", mult}});
    return arr;
}

ordered_json transform_json(const TransformResult& tr) {
    return ordered_json{{"total", tr.total.str()},
                        {"mult", tr.exceptional_multiplicity},
                        {"proper", tr.proper.str()}};
}

// Replays the built-in worked examples as a self-test; returns the number
// of failures.
int run_worked_examples(std::ostream& out) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        out << (ok ? "ok" : "FAIL") << ": " << name << "\n";
        if (!ok) ++failures;
    };

    {
        const std::vector<std::string> ys{"y1", "y2", "y3"};
        Substitution s(ys);
        const SparsePolynomial y3 = SparsePolynomial::variable(ys, "y3");
        s.set("x1", SparsePolynomial::variable(ys, "y1") * y3);
        s.set("x2", SparsePolynomial::variable(ys, "y2") * y3);
        const SparsePolynomial p = parse_polynomial("x1^2 + x2^2", {"x1", "x2"});
        check("point-chart substitution",
              p.substitute(s) == parse_polynomial("y1^2*y3^2 + y2^2*y3^2", ys));
    }
    {
        const SparsePolynomial p =
            parse_polynomial("y1^2*y3^2 + y2^2*y3^2 + s*y3^2", {"y1", "y2", "y3", "s"});
        const PowerFactorization f = factor_out_power(p, "y3");
        check("exceptional power factorization",
              f.multiplicity == 2 &&
                  f.quotient == parse_polynomial("y1^2 + y2^2 + s", p.vars()));
    }
    check("diagonal minimal exponent, four fourth powers",
          bp_minimal_exponent(BrieskornPhamDescriptor({4, 4, 4, 4})) == ExponentValue(Rational(1)));
    check("diagonal minimal exponent, single cube",
          bp_minimal_exponent(BrieskornPhamDescriptor({3})) == ExponentValue(Rational(1, 3)));
    check("slice exponent (n-1)/m",
          slice_exponent_ordinary_mple(4, 2) == ExponentValue(Rational(3, 2)) &&
              slice_exponent_ordinary_mple(7, 2) == ExponentValue(Rational(3)) &&
              slice_exponent_ordinary_mple(3, 3) == ExponentValue(Rational(2, 3)));
    check("product rule takes the minimum",
          min_product_rule(ExponentValue(Rational(1)), ExponentValue(Rational(1, 2))) ==
              ExponentValue(Rational(1, 2)));
    {
        const SparsePolynomial p =
            parse_polynomial("x1^2 + x2^2 + s*x3^2", {"x1", "x2", "x3", "s"});
        const ChartVerification v = verify_smoothing_chart(p, 2);
        check("smoothing chart, ordinary double model",
              v.ok && v.transform.proper ==
                          parse_polynomial("y1^2 + y2^2 + s", {"y1", "y2", "y3", "s"}));
    }
    {
        const SparsePolynomial p =
            parse_polynomial("x1^3 + x2^3 + x3^2 + s*x4^2", {"x1", "x2", "x3", "x4", "s"});
        const ChartVerification v = verify_smoothing_chart(p, 2);
        check("smoothing chart, mixed-power model",
              v.ok && v.transform.proper == parse_polynomial("y1^3*y4 + y2^3*y4 + y3^2 + s",
                                                             {"y1", "y2", "y3", "y4", "s"}));
    }
    {
        const ApplicabilityReport r2 = hm_applicable(7, 2, 2);
        const ApplicabilityReport r1 = hm_applicable(7, 2, 1);
        check("detection gate n=7 m=2",
              r2.du_bois_ok && !r2.rational_ok && r1.du_bois_ok && r1.rational_ok);
    }
    {
        const ClassificationReport c = classify(ExponentValue(Rational(3, 2)), 0);
        check("classification at alpha=3/2", c.is_k_du_bois && c.is_k_rational);
    }
    {
        const SparsePolynomial f = build_cross_power_family({3, 2, 4, 1});
        const SparsePolynomial expected =
            parse_polynomial("x2^2*x1^2 + x3^2*x1^2 + x2^4 + x3^4", f.vars());
        const ChartRestriction cr = chart_restrict(f, 1);
        check("cross-power family and its chart",
              f == expected && cr.lowest.order == 2 && cr.diagonal);
    }
    {
        const GapReport g = vfilt_gap({0, 3}, BrieskornPhamDescriptor({2, 3}));
        check("valuation gap for x2^3 over (2,3)",
              g.alpha_vtilde == Rational(13, 6) && g.alpha_br == Rational(11, 6) &&
                  g.gap == Rational(1, 3));
    }
    out << (failures == 0 ? "all worked examples passed\n"
                          : std::to_string(failures) + " worked examples failed\n");
    return failures;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    if (const char* cap = std::getenv("SINGULEX_TERM_CAP"))
        set_term_cap(static_cast<std::size_t>(std::strtoull(cap, nullptr, 10)));

    CLI::App app{"Exact invariants of hypersurface singularities"};
    app.require_subcommand(0, 1);

    bool worked_examples = false;
    app.add_flag("--paper-examples", worked_examples,
                 "replay the built-in worked examples as a self-test");

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string m_csv, a_csv, alpha_str, poly_str, vars_csv, g_str, f_str, suite, param = "s";
    unsigned n = 0, m = 0, k = 0, d = 0, a = 0, steps = 0, chart_j = 0;
    unsigned inclusion_bound = 0;
    std::string power_a_csv;
    unsigned long count = 1000;
    std::uint64_t seed = 42;

    CLI::App* c_minexp = app.add_subcommand("minexp", "minimal exponent of a diagonal polynomial");
    c_minexp->add_option("--m", m_csv, "exponent list m1,...,mn")->required();

    CLI::App* c_classify = app.add_subcommand("classify", "du Bois / rational classification");
    c_classify->add_option("--alpha", alpha_str, "minimal exponent, p/q or inf")->required();
    c_classify->add_option("--k", k, "order k")->required();

    CLI::App* c_appl = app.add_subcommand("applicable", "detection gate for ordinary m-ple loci");
    c_appl->add_option("--n", n)->required();
    c_appl->add_option("--m", m)->required();
    c_appl->add_option("--k", k)->required();

    CLI::App* c_vfilt = app.add_subcommand("vfilt", "monomial valuations and their gap");
    c_vfilt->add_option("--m", m_csv, "exponent list")->required();
    c_vfilt->add_option("--a", a_csv, "monomial exponents")->required();

    CLI::App* c_spec = app.add_subcommand("spectrum", "spectrum of a diagonal polynomial");
    c_spec->add_option("--m", m_csv, "exponent list")->required();
    bool roots = false;
    c_spec->add_flag("--roots", roots, "print the reduced root set instead");

    CLI::App* c_ideal = app.add_subcommand("ideal", "Jacobian-ideal checks");
    c_ideal->add_option("--m", m_csv, "exponent list")->required();
    c_ideal->add_option("--g", g_str, "polynomial to test for membership");
    c_ideal->add_option("--vars", vars_csv, "explicit variable context for --g");
    c_ideal->add_option("--inclusion-bound", inclusion_bound,
                        "sweep the valuation-threshold inclusion up to this degree");
    c_ideal->add_option("--power-a", power_a_csv, "monomial for the f-power membership check");

    CLI::App* c_blow = app.add_subcommand("blowup", "point-center blow-up charts");
    c_blow->add_option("--poly", poly_str, "polynomial, e.g. f + s*g")->required();
    c_blow->add_option("--vars", vars_csv, "variable context (parameter last)");
    c_blow->add_option("--m", m, "expected multiplicity for the chart verification");
    c_blow->add_option("--steps", steps, "apply this many principal charts in sequence");
    c_blow->add_option("--param", param, "deformation parameter variable")
        ->capture_default_str();

    CLI::App* c_fam = app.add_subcommand("family", "cross-power family constructor");
    c_fam->add_option("--n", n)->required();
    c_fam->add_option("--m", m)->required();
    c_fam->add_option("--d", d)->required();
    c_fam->add_option("--a", a)->required();
    c_fam->add_option("--chart", chart_j, "restrict to the chart x_j = 1");

    CLI::App* c_def = app.add_subcommand("deform", "singular-locus equivalence sampling");
    c_def->add_option("--f", f_str)->required();
    c_def->add_option("--g", g_str)->required();
    c_def->add_option("--vars", vars_csv, "shared variable context");
    c_def->add_option("--param", param)->capture_default_str();
    c_def->add_option("--count", count)->capture_default_str();
    c_def->add_option("--seed", seed)->capture_default_str();

    CLI::App* c_sweep = app.add_subcommand("sweep", "deterministic verification sweeps");
    c_sweep->add_option("--suite", suite, "sweep name, or 'all'")->required();
    c_sweep->add_option("--count", count)->capture_default_str();
    c_sweep->add_option("--seed", seed)->capture_default_str();

    // App-level flags such as --format may appear after a subcommand.
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    const bool as_json = format == "json";
    try {
        if (worked_examples) return run_worked_examples(out) == 0 ? 0 : 1;

        if (c_minexp->parsed()) {
            const BrieskornPhamDescriptor desc(parse_uint_list(m_csv));
            emit(ordered_json{{"alpha", bp_minimal_exponent(desc).str()}}, as_json, out);
        } else if (c_classify->parsed()) {
            const ClassificationReport r = classify(parse_exponent_value(alpha_str), k);
            emit(ordered_json{{"k", r.k},
                              {"alpha", r.minimal_exponent.str()},
                              {"du_bois", r.is_k_du_bois},
                              {"rational", r.is_k_rational}},
                 as_json, out);
        } else if (c_appl->parsed()) {
            const ApplicabilityReport r = hm_applicable(n, m, k);
            emit(ordered_json{{"du_bois", r.du_bois_ok}, {"rational", r.rational_ok}}, as_json,
                 out);
        } else if (c_vfilt->parsed()) {
            const BrieskornPhamDescriptor desc(parse_uint_list(m_csv));
            const GapReport g = vfilt_gap(to_exponents(parse_uint_list(a_csv)), desc);
            emit(ordered_json{{"alpha_vtilde", to_string(g.alpha_vtilde)},
                              {"alpha_br", to_string(g.alpha_br)},
                              {"gap", to_string(g.gap)}},
                 as_json, out);
        } else if (c_spec->parsed()) {
            const BrieskornPhamDescriptor desc(parse_uint_list(m_csv));
            if (roots) {
                ordered_json arr = ordered_json::array();
                for (const auto& r : reduced_bs_root_set(desc)) arr.push_back(to_string(r));
                emit(ordered_json{{"roots", arr}}, as_json, out);
            } else {
                emit(spectrum_json(bp_spectrum(desc)), as_json, out);
            }
        } else if (c_ideal->parsed()) {
            const BrieskornPhamDescriptor desc(parse_uint_list(m_csv));
            ordered_json result = ordered_json::object();
            if (!g_str.empty()) {
                std::vector<std::string> ctx =
                    vars_csv.empty() ? bp_polynomial(desc).vars() : parse_name_list(vars_csv);
                result["member"] = jacobian_membership(parse_polynomial(g_str, ctx), desc);
            }
            if (c_ideal->count("--inclusion-bound") > 0) {
                const InclusionReport r = check_vfilt_ideal_inclusion(desc, inclusion_bound);
                result["inclusion"] = ordered_json{{"pass", r.pass}, {"checked", r.checked}};
            }
            if (!power_a_csv.empty()) {
                const PowerMembershipReport r =
                    check_power_membership(desc, to_exponents(parse_uint_list(power_a_csv)));
                result["power"] = ordered_json{
                    {"pass", r.pass}, {"k", r.k}, {"bound", to_string(r.bound)}};
            }
            if (result.empty())
                throw Error("USAGE", "ideal requires --g, --inclusion-bound or --power-a");
            emit(result, as_json, out);
        } else if (c_blow->parsed()) {
            SparsePolynomial p = parse_poly_arg(poly_str, vars_csv);
            if (steps > 0) {
                static const std::string prefixes = "yzwvut";
                if (steps > prefixes.size())
                    throw Error("BAD_PARAMETER", "at most 6 chained charts are supported");
                std::vector<std::string> geo;
                for (const auto& v : p.vars())
                    if (v != param) geo.push_back(v);
                std::vector<ChartStep> chain;
                for (unsigned i = 0; i < steps; ++i) {
                    std::vector<std::string> tgt;
                    for (std::size_t j = 1; j <= geo.size(); ++j)
                        tgt.push_back(prefixes[i] + std::to_string(j));
                    BlowupChart chartstep(geo, tgt);
                    chain.push_back(ChartStep{chartstep, chartstep.exceptional_var()});
                    geo = tgt;
                }
                ordered_json arr = ordered_json::array();
                for (const auto& tr : iterated_blowup(p, chain))
                    arr.push_back(transform_json(tr));
                emit(arr, as_json, out);
            } else {
                if (m == 0) throw Error("USAGE", "blowup requires --m or --steps");
                const ChartVerification v = verify_smoothing_chart(p, m, param);
                emit(ordered_json{{"ok", v.ok},
                                  {"certificate",
                                   v.certificate.kind == SmoothnessCertificate::Kind::GraphOverS
                                       ? "GRAPH_OVER_S"
                                       : "UNKNOWN"},
                                  {"mult", v.transform.exceptional_multiplicity},
                                  {"total", v.transform.total.str()},
                                  {"proper", v.transform.proper.str()},
                                  {"slice_lowest_order", v.slice_lowest.order},
                                  {"slice_lowest_form", v.slice_lowest.form.str()},
                                  {"failure", v.failure}},
                     as_json, out);
            }
        } else if (c_fam->parsed()) {
            const SparsePolynomial f = build_cross_power_family({n, m, d, a});
            ordered_json result{{"poly", f.str()},
                                {"degree", f.degree()},
                                {"terms", f.term_count()},
                                {"conjectured_minimal_exponent", to_string(Rational(n, d))},
                                {"conjecture_note",
                                 "the n/d value is a labeled conjecture, not verified here"}};
            if (chart_j > 0) {
                const ChartRestriction cr = chart_restrict(f, chart_j);
                const OrdinaryVerdict verdict = ordinary_point_certificate(
                    cr.restricted, std::vector<Rational>(cr.restricted.arity(), 0), m);
                result["chart"] = ordered_json{
                    {"restricted", cr.restricted.str()},
                    {"lowest_order", cr.lowest.order},
                    {"lowest_form", cr.lowest.form.str()},
                    {"diagonal", cr.diagonal},
                    {"ordinary", verdict == OrdinaryVerdict::Ordinary      ? "ORDINARY"
                                 : verdict == OrdinaryVerdict::NotOrdinary ? "NOT_ORDINARY"
                                                                           : "UNKNOWN"}};
            }
            emit(result, as_json, out);
        } else if (c_def->parsed()) {
            std::vector<std::string> ctx;
            if (!vars_csv.empty()) {
                ctx = parse_name_list(vars_csv);
            } else {
                ctx = parse_polynomial(f_str).vars();
                for (const auto& v : parse_polynomial(g_str).vars())
                    if (std::find(ctx.begin(), ctx.end(), v) == ctx.end()) ctx.push_back(v);
            }
            const DeformationFamily family(parse_polynomial(f_str, ctx),
                                           parse_polynomial(g_str, ctx), param);
            const DeformationCheckReport r = check_deformation_locus(family, count, seed);
            emit(ordered_json{{"samples", r.samples},
                              {"discrepancies", r.discrepancies.size()},
                              {"singular_hits", r.singular_hits},
                              {"seed", r.seed},
                              {"pass", r.pass()}},
                 as_json, out);
        } else if (c_sweep->parsed()) {
            std::vector<sweeps::SweepResult> results;
            auto run_suite = [&](const std::string& name) {
                if (name == "valuation-identity") return sweeps::valuation_identity();
                if (name == "blowup-cross-family") return sweeps::blowup_cross_family();
                if (name == "blowup-graded-family") return sweeps::blowup_graded_family();
                if (name == "spectrum-consistency") return sweeps::spectrum_consistency();
                if (name == "ideal-inclusions") return sweeps::ideal_inclusions();
                if (name == "deformation-equivalence")
                    return sweeps::deformation_equivalence(count, seed);
                if (name == "detection-gate") return sweeps::detection_gate();
                if (name == "family-charts") return sweeps::family_charts();
                if (name == "oracle-equivalence") return sweeps::oracle_equivalence();
                if (name == "algebra-properties")
                    return sweeps::algebra_properties(count, seed);
                throw Error("UNKNOWN_SUITE", "no sweep suite named '" + name + "'");
            };
            static const std::vector<std::string> all = {
                "valuation-identity",  "blowup-cross-family", "blowup-graded-family",
                "spectrum-consistency", "ideal-inclusions",    "deformation-equivalence",
                "detection-gate",       "family-charts",       "oracle-equivalence",
                "algebra-properties"};
            bool pass = true;
            ordered_json arr = ordered_json::array();
            for (const auto& name : suite == "all" ? all : std::vector<std::string>{suite}) {
                const sweeps::SweepResult r = run_suite(name);
                pass = pass && r.pass;
                arr.push_back(sweep_json(r));
            }
            emit(arr.size() == 1 ? arr[0] : arr, as_json, out);
            return pass ? 0 : 1;
        } else {
            err << app.help();
            return 2;
        }
    } catch (const Error& e) {
        if (as_json)
            err << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        else
            err << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace singulex
