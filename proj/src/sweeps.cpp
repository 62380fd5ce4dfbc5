#include "singulex/sweeps.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "singulex/blowup.hpp"
#include "singulex/exponents.hpp"
#include "singulex/families.hpp"
#include "singulex/milnor.hpp"
#include "singulex/polynomial.hpp"

namespace singulex::sweeps {

namespace {

// Calls fn(v) for every v with 0 <= v_i < radix.
template <typename Fn>
void odometer(std::size_t digits, std::size_t radix, Fn&& fn) {
    std::vector<std::size_t> v(digits, 0);
    for (;;) {
        fn(v);
        std::size_t i = 0;
        while (i < digits && v[i] + 1 == radix) v[i++] = 0;
        if (i == digits) return;
        ++v[i];
    }
}

std::vector<std::string> var_names(const std::string& stem, unsigned n) {
    std::vector<std::string> vars;
    for (unsigned i = 1; i <= n; ++i) vars.push_back(stem + std::to_string(i));
    return vars;
}

SparsePolynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                             unsigned max_degree, unsigned max_terms) {
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> expo(0, max_degree);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    SparsePolynomial p(vars);
    const unsigned t = nterms(rng);
    for (unsigned k = 0; k < t; ++k) {
        ExponentVec e(vars.size(), 0);
        unsigned budget = max_degree;
        for (std::size_t i = 0; i < e.size(); ++i) {
            const unsigned x = expo(rng) % (budget + 1);
            e[i] = x;
            budget -= x;
        }
        p.add_term(e, Rational(num(rng), den(rng)));
    }
    return p;
}

} // namespace

SweepResult valuation_identity(unsigned max_a, unsigned m_lo, unsigned m_hi, unsigned max_n,
                               std::uint64_t sample_seed) {
    SweepResult res{"valuation-identity", true, 0, ""};

    // Per-coordinate states (m, a), with values taken from the real
    // single-coordinate implementation and rescaled to a common denominator.
    std::int64_t denom = 1;
    for (unsigned m = m_lo; m <= m_hi; ++m) denom = std::lcm<std::int64_t>(denom, m);
    struct State {
        unsigned m, a;
        bool valid;                    // alpha_br precondition
        std::int64_t vt, br, gap;      // numerators over `denom`
    };
    std::vector<State> states;
    auto scaled = [&](const Rational& r) {
        const Rational s = r * denom;
        if (boost::multiprecision::denominator(s) != 1)
            throw Error("INTERNAL_INCONSISTENCY", "value does not divide the common denominator");
        return static_cast<std::int64_t>(boost::multiprecision::numerator(s));
    };
    for (unsigned m = m_lo; m <= m_hi; ++m) {
        const BrieskornPhamDescriptor d1({m});
        for (unsigned a = 0; a <= max_a; ++a) {
            State st{m, a, (a + 1) % m != 0, 0, 0, 0};
            st.vt = scaled(alpha_vtilde({a}, d1).value());
            if (st.valid) {
                const GapReport g = vfilt_gap({a}, d1);
                st.br = scaled(g.alpha_br);
                st.gap = scaled(g.gap);
            }
            states.push_back(st);
        }
    }

    // Exhaustive pass over the full cross product with incremental
    // running sums; exact by construction of the common denominator.
    for (unsigned n = 1; n <= max_n && res.pass; ++n) {
        std::vector<std::size_t> idx(n, 0);
        std::int64_t vt = static_cast<std::int64_t>(n) * states[0].vt;
        std::int64_t br = n * states[0].br, gap = n * states[0].gap;
        unsigned invalid = states[0].valid ? 0 : n;
        for (;;) {
            if (invalid == 0) {
                ++res.cases;
                if (vt != br + gap) {
                    res.pass = false;
                    res.detail = "identity failed at n=" + std::to_string(n);
                    break;
                }
            }
            std::size_t i = 0;
            while (i < n) {
                const State& old = states[idx[i]];
                vt -= old.vt;
                br -= old.br;
                gap -= old.gap;
                if (!old.valid) --invalid;
                if (idx[i] + 1 == states.size()) {
                    idx[i] = 0;
                } else {
                    ++idx[i];
                }
                const State& now = states[idx[i]];
                vt += now.vt;
                br += now.br;
                gap += now.gap;
                if (!now.valid) ++invalid;
                if (idx[i] != 0) break;
                ++i;
            }
            if (i == n) break;
        }
    }

    // Direct multi-coordinate verification through vfilt_gap: exhaustive
    // for n <= 2, seeded samples for larger n.
    std::mt19937_64 rng(sample_seed);
    std::uniform_int_distribution<unsigned> pick_m(m_lo, m_hi);
    std::uniform_int_distribution<unsigned> pick_a(0, max_a);
    auto direct = [&](const std::vector<unsigned>& ms, const ExponentVec& a) {
        const BrieskornPhamDescriptor d(ms);
        bool valid = true;
        for (std::size_t i = 0; i < a.size(); ++i)
            if ((a[i] + 1) % ms[i] == 0) valid = false;
        if (!valid) return;
        const GapReport g = vfilt_gap(a, d); // throws if the identity fails
        if (g.alpha_vtilde != g.alpha_br + g.gap) {
            res.pass = false;
            res.detail = "direct identity failed";
        }
    };
    const unsigned span_m = m_hi - m_lo + 1, span_a = max_a + 1;
    for (unsigned n = 1; n <= std::min(2u, max_n) && res.pass; ++n)
        odometer(2 * n, std::max(span_m, span_a), [&](const std::vector<std::size_t>& v) {
            std::vector<unsigned> ms(n);
            ExponentVec a(n);
            for (unsigned i = 0; i < n; ++i) {
                if (v[2 * i] >= span_m || v[2 * i + 1] >= span_a) return;
                ms[i] = m_lo + static_cast<unsigned>(v[2 * i]);
                a[i] = static_cast<unsigned>(v[2 * i + 1]);
            }
            direct(ms, a);
        });
    for (unsigned n = 3; n <= max_n && res.pass; ++n)
        for (unsigned long k = 0; k < 20000; ++k) {
            std::vector<unsigned> ms(n);
            ExponentVec a(n);
            for (unsigned i = 0; i < n; ++i) {
                ms[i] = pick_m(rng);
                a[i] = pick_a(rng);
            }
            direct(ms, a);
        }
    return res;
}

SweepResult blowup_cross_family(unsigned max_a, unsigned min_n, unsigned max_n) {
    SweepResult res{"blowup-cross-family", true, 0, ""};
    for (unsigned n = min_n; n <= max_n; ++n)
        for (unsigned a = 3; a <= max_a; ++a)
            for (unsigned b = 2; b < a; ++b) {
                std::vector<std::string> xs = var_names("x", n);
                std::vector<std::string> ctx = xs;
                ctx.push_back("s");
                SparsePolynomial p(ctx);
                for (unsigned i = 1; i + 2 <= n; ++i) {
                    ExponentVec e(ctx.size(), 0);
                    e[i - 1] = a;
                    p.add_term(e, 1);
                }
                ExponentVec eb(ctx.size(), 0);
                eb[n - 2] = b;
                p.add_term(eb, 1);
                ExponentVec es(ctx.size(), 0);
                es[n - 1] = b;
                es[n] = 1;
                p.add_term(es, 1); // s * x_n^b

                const BlowupChart chart(xs, var_names("y", n));
                const TransformResult tr = blowup_transform(p, chart, chart.exceptional_var());

                std::vector<std::string> tctx = var_names("y", n);
                tctx.push_back("s");
                SparsePolynomial expected(tctx);
                for (unsigned i = 1; i + 2 <= n; ++i) {
                    ExponentVec e(tctx.size(), 0);
                    e[i - 1] = a;
                    e[n - 1] = a - b;
                    expected.add_term(e, 1);
                }
                ExponentVec e2(tctx.size(), 0);
                e2[n - 2] = b;
                expected.add_term(e2, 1);
                ExponentVec e3(tctx.size(), 0);
                e3[n] = 1;
                expected.add_term(e3, 1);

                ++res.cases;
                if (tr.exceptional_multiplicity != b || !(tr.proper == expected)) {
                    res.pass = false;
                    res.detail = "mismatch at n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                 " b=" + std::to_string(b);
                    return res;
                }
            }
    return res;
}

SweepResult blowup_graded_family(unsigned max_m, unsigned max_n, std::uint64_t seed) {
    SweepResult res{"blowup-graded-family", true, 0, ""};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick_gap(1, 3);
    std::uniform_int_distribution<unsigned> pick_e(0, 2);
    std::uniform_int_distribution<long> pick_c(1, 5);

    for (unsigned n = 2; n <= max_n; ++n)
        for (unsigned m = 2; m <= max_m; ++m)
            for (unsigned rep = 0; rep < 5; ++rep) {
                std::vector<std::string> xs = var_names("x", n);
                std::vector<std::string> ctx = xs;
                ctx.push_back("s");

                // Graded parts in x_1..x_{n-1} with coefficients in x_n.
                // parts[j] is homogeneous of degree m+j in the transverse
                // variables; parts[0] is the diagonal sum x_i^m.
                const unsigned j1 = pick_gap(rng);
                const unsigned j2 = j1 + pick_gap(rng);
                std::vector<SparsePolynomial> parts(j2 + 1, SparsePolynomial(ctx));
                for (unsigned i = 1; i + 1 <= n; ++i) {
                    ExponentVec e(ctx.size(), 0);
                    e[i - 1] = m;
                    parts[0].add_term(e, 1);
                }
                for (unsigned j : {j1, j2}) {
                    ExponentVec e(ctx.size(), 0);
                    // Random transverse monomial of degree m + j.
                    unsigned left = m + j;
                    for (unsigned i = 0; i + 2 < n + 1 && left > 0; ++i) {
                        const unsigned take =
                            (i + 3 == n + 1) ? left : (rng() % (left + 1));
                        e[i] = take;
                        left -= take;
                    }
                    e[0] += left;
                    e[n - 1] = pick_e(rng); // coefficient power of x_n
                    parts[j].add_term(e, Rational(pick_c(rng)));
                }

                SparsePolynomial p(ctx);
                for (const auto& part : parts) p = p + part;
                ExponentVec es(ctx.size(), 0);
                es[n - 1] = m;
                es[n] = 1;
                p.add_term(es, 1); // s * x_n^m

                const BlowupChart chart(xs, var_names("y", n));
                const TransformResult tr = blowup_transform(p, chart, chart.exceptional_var());

                // Expected proper transform: sum_j parts_j(y) * y_n^j + s.
                std::vector<std::string> tctx = var_names("y", n);
                tctx.push_back("s");
                Substitution rename(tctx);
                for (unsigned i = 1; i <= n; ++i)
                    rename.set("x" + std::to_string(i),
                               SparsePolynomial::variable(tctx, "y" + std::to_string(i)));
                const SparsePolynomial yn = SparsePolynomial::variable(tctx, "y" + std::to_string(n));
                SparsePolynomial expected = SparsePolynomial::variable(tctx, "s");
                for (unsigned j = 0; j < parts.size(); ++j)
                    expected = expected + parts[j].substitute(rename) * yn.pow(j);

                ++res.cases;
                if (tr.exceptional_multiplicity != m || !(tr.proper == expected)) {
                    res.pass = false;
                    res.detail = "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
                    return res;
                }
            }
    return res;
}

SweepResult spectrum_consistency(unsigned max_m, unsigned max_n) {
    SweepResult res{"spectrum-consistency", true, 0, ""};
    for (unsigned n = 1; n <= max_n && res.pass; ++n)
        odometer(n, max_m - 1, [&](const std::vector<std::size_t>& v) {
            if (!res.pass) return;
            std::vector<unsigned> ms(n);
            for (unsigned i = 0; i < n; ++i) ms[i] = 2 + static_cast<unsigned>(v[i]);
            const BrieskornPhamDescriptor d(ms);
            const SpectrumMultiset spec = bp_spectrum(d);
            ++res.cases;

            auto fail = [&](const std::string& why) {
                res.pass = false;
                res.detail = why + " for n=" + std::to_string(n);
            };
            if (Integer(spec.total_multiplicity()) != milnor_number(d))
                return fail("total multiplicity != Milnor number");
            for (const auto& [alpha, mult] : spec.entries) {
                auto mirror = spec.entries.find(Rational(n) - alpha);
                if (mirror == spec.entries.end() || mirror->second != mult)
                    return fail("symmetry violated");
            }
            const Rational minval = spec.entries.begin()->first;
            if (minval != bp_minimal_exponent(d).value())
                return fail("minimum != minimal exponent");
            const std::set<Rational> roots = reduced_bs_root_set(d);
            if (*roots.rbegin() != -minval) return fail("maximal root != -minimum");
        });
    return res;
}

SweepResult ideal_inclusions(unsigned max_m, unsigned max_n, unsigned degree_bound,
                             unsigned max_power_a) {
    SweepResult res{"ideal-inclusions", true, 0, ""};
    for (unsigned n = 1; n <= max_n && res.pass; ++n)
        odometer(n, max_m - 1, [&](const std::vector<std::size_t>& v) {
            if (!res.pass) return;
            std::vector<unsigned> ms(n);
            for (unsigned i = 0; i < n; ++i) ms[i] = 2 + static_cast<unsigned>(v[i]);
            const BrieskornPhamDescriptor d(ms);

            const InclusionReport incl = check_vfilt_ideal_inclusion(d, degree_bound);
            res.cases += incl.checked;
            if (!incl.pass) {
                res.pass = false;
                res.detail = "valuation-threshold inclusion counterexample";
                return;
            }
            odometer(n, max_power_a + 1, [&](const std::vector<std::size_t>& w) {
                if (!res.pass) return;
                ExponentVec a(n);
                for (unsigned i = 0; i < n; ++i) a[i] = static_cast<unsigned>(w[i]);
                const PowerMembershipReport pm = check_power_membership(d, a);
                ++res.cases;
                if (!pm.pass) {
                    res.pass = false;
                    res.detail = "f-power membership counterexample at k=" + std::to_string(pm.k);
                }
            });
        });
    return res;
}

SweepResult deformation_equivalence(unsigned long count, std::uint64_t seed) {
    SweepResult res{"deformation-equivalence", true, 0, ""};
    std::vector<DeformationFamily> families;
    {
        const std::vector<std::string> xy{"x", "y"};
        families.emplace_back(parse_polynomial("x^2*y", xy), parse_polynomial("y", xy), "s");
        families.emplace_back(parse_polynomial("x^2+y^3", xy), parse_polynomial("x", xy), "s");
        const SparsePolynomial f3 = build_cross_power_family({3, 2, 4, 1});
        families.emplace_back(f3, parse_polynomial("x1^4", f3.vars()), "s");
    }
    // Bias a share of the samples onto the singular locus so that both
    // branches of the equivalence are actually exercised.
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
        auto points =
            random_rational_points(families[fi].f.arity(), count, seed + fi, 100);
        for (std::size_t k = 0; k < points.size(); k += 7)
            points[k][0] = 0; // x = 0 slices hit Sing V_f for all three families
        const DeformationCheckReport rep = check_deformation_locus(families[fi], points);
        res.cases += rep.samples;
        if (!rep.pass()) {
            res.pass = false;
            res.detail = "discrepancy in family " + std::to_string(fi + 1);
            return res;
        }
    }
    return res;
}

SweepResult detection_gate() {
    SweepResult res{"detection-gate", true, 0, ""};
    for (unsigned k = 0; k <= 6; ++k) {
        const ApplicabilityReport r = hm_applicable(7, 2, k);
        ++res.cases;
        if (r.du_bois_ok != (k <= 2) || r.rational_ok != (k <= 1)) {
            res.pass = false;
            res.detail = "gate mismatch at k=" + std::to_string(k);
            return res;
        }
    }
    return res;
}

SweepResult family_charts(unsigned max_n) {
    SweepResult res{"family-charts", true, 0, ""};
    for (unsigned n = 3; n <= max_n; ++n)
        for (unsigned m : {2u, 3u})
            for (unsigned a = 1; a <= n; ++a) {
                const SparsePolynomial f = build_cross_power_family({n, m, 2 * m, a});
                for (unsigned j = 1; j <= a; ++j) {
                    const ChartRestriction cr = chart_restrict(f, j);
                    const OrdinaryVerdict verdict = ordinary_point_certificate(
                        cr.restricted, std::vector<Rational>(cr.restricted.arity(), 0), m);
                    ++res.cases;
                    if (cr.lowest.order != m || verdict != OrdinaryVerdict::Ordinary) {
                        res.pass = false;
                        res.detail = "chart not ordinary at n=" + std::to_string(n) +
                                     " m=" + std::to_string(m) + " a=" + std::to_string(a) +
                                     " j=" + std::to_string(j);
                        return res;
                    }
                }
            }
    return res;
}

SweepResult oracle_equivalence(unsigned max_a, unsigned max_m) {
    SweepResult res{"oracle-equivalence", true, 0, ""};

    // Residue decomposition vs exhaustive search.
    for (unsigned m = 2; m <= max_m; ++m) {
        const BrieskornPhamDescriptor d1({m});
        for (unsigned a = 0; a <= max_a; ++a) {
            unsigned solutions = 0;
            std::pair<unsigned, unsigned> found{0, 0};
            for (unsigned b = 0; b + 2 <= m; ++b)
                for (unsigned c = 0; c <= a; ++c)
                    if (a == b + c * (m - 1)) {
                        ++solutions;
                        found = {b, c};
                    }
            const ResidueDecomposition dec = decompose_residue({a}, d1);
            ++res.cases;
            if (solutions != 1 || dec.pairs[0] != found) {
                res.pass = false;
                res.detail = "decomposition mismatch at m=" + std::to_string(m) +
                             " a=" + std::to_string(a);
                return res;
            }
        }
    }

    // Spectrum vs independent pairwise convolution of 1-variable spectra.
    for (unsigned n = 1; n <= 3; ++n)
        odometer(n, 5, [&](const std::vector<std::size_t>& v) {
            if (!res.pass) return;
            std::vector<unsigned> ms(n);
            for (unsigned i = 0; i < n; ++i) ms[i] = 2 + static_cast<unsigned>(v[i]);
            std::map<Rational, unsigned> expected{{Rational(0), 1}};
            for (unsigned mi : ms) {
                std::map<Rational, unsigned> next;
                for (const auto& [val, mult] : expected)
                    for (unsigned ai = 0; ai + 2 <= mi; ++ai)
                        next[val + Rational(ai + 1, mi)] += mult;
                expected = std::move(next);
            }
            const SpectrumMultiset spec = bp_spectrum(BrieskornPhamDescriptor(ms));
            ++res.cases;
            if (spec.entries != expected) {
                res.pass = false;
                res.detail = "spectrum convolution mismatch";
            }
        });
    if (!res.pass) return res;

    // Jacobian membership vs brute-force divisibility over all generators.
    std::mt19937_64 rng(99);
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned rep = 0; rep < 200; ++rep) {
            std::vector<unsigned> ms(n);
            for (unsigned i = 0; i < n; ++i) ms[i] = 2 + rng() % 4;
            const BrieskornPhamDescriptor d(ms);
            const SparsePolynomial g = random_poly(rng, var_names("x", n), 8, 4);
            bool brute = true;
            for (const auto& [e, c] : g.terms()) {
                bool divisible = false;
                for (unsigned i = 0; i < n; ++i)
                    if (e[i] >= ms[i] - 1) divisible = true;
                if (!divisible) brute = false;
            }
            ++res.cases;
            if (jacobian_membership(g, d) != brute) {
                res.pass = false;
                res.detail = "membership oracle mismatch";
                return res;
            }
        }
    return res;
}

SweepResult algebra_properties(unsigned long count, std::uint64_t seed) {
    SweepResult res{"algebra-properties", true, 0, ""};
    std::mt19937_64 rng(seed);
    const std::vector<std::string> vars{"x1", "x2", "x3", "x4"};
    const std::vector<std::string> target{"t1", "t2", "t3"};

    auto fail = [&](const std::string& why, unsigned long i) {
        res.pass = false;
        res.detail = why + " at iteration " + std::to_string(i);
    };

    for (unsigned long i = 0; i < count && res.pass; ++i) {
        const SparsePolynomial p = random_poly(rng, vars, 6, 5);
        const SparsePolynomial q = random_poly(rng, vars, 6, 5);
        const SparsePolynomial r = random_poly(rng, vars, 6, 5);
        ++res.cases;

        if (!((p + q) + r == p + (q + r))) return fail("associativity", i), res;
        if (!(p * q == q * p)) return fail("commutativity", i), res;
        if (!(p * (q + r) == p * q + p * r)) return fail("distributivity", i), res;

        if (!(parse_polynomial(p.str(), vars) == p)) return fail("print/parse", i), res;

        const std::string& v = vars[rng() % vars.size()];
        if (!((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v)))
            return fail("Leibniz", i), res;

        Substitution s(target);
        for (const auto& var : vars) s.set(var, random_poly(rng, target, 2, 2));
        if (!((p * q).substitute(s) == p.substitute(s) * q.substitute(s)))
            return fail("substitution homomorphism", i), res;

        const auto parts = graded_parts(p, {"x1", "x2"}, 0);
        SparsePolynomial sum(vars);
        for (const auto& part : parts) sum = sum + part;
        if (!(sum == p) && !(p.is_zero() && parts.empty()))
            return fail("graded parts round-trip", i), res;

        if (!p.is_zero()) {
            const PowerFactorization fact = factor_out_power(p, "x1");
            if (!(fact.quotient * SparsePolynomial::variable(vars, "x1").pow(fact.multiplicity) ==
                  p))
                return fail("power factorization round-trip", i), res;
            if (factor_out_power(fact.quotient, "x1").multiplicity != 0)
                return fail("power factorization minimality", i), res;
        }
    }
    return res;
}

} // namespace sweeps
