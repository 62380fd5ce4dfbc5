// Acceptance suite: runs every verification sweep at its pinned bounds and
// prints one pass/fail line per criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "singulex/sweeps.hpp"

using singulex::sweeps::SweepResult;

int main() {
    using clock = std::chrono::steady_clock;
    struct Criterion {
        const char* label;
        std::function<SweepResult()> run;
    };

    const std::vector<Criterion> criteria = {
        {"1 valuation gap identity (a<=12, m in [2,7], n<=4)",
         [] { return singulex::sweeps::valuation_identity(12, 2, 7, 4); }},
        {"2 blow-up of the cross family (a<=6, 1<b<a, 4<=n<=6)",
         [] { return singulex::sweeps::blowup_cross_family(6, 4, 6); }},
        {"3 blow-up of graded local models (m<=5, n<=6, two higher parts)",
         [] { return singulex::sweeps::blowup_graded_family(5, 6); }},
        {"4 spectrum consistency (m<=6, n<=4)",
         [] { return singulex::sweeps::spectrum_consistency(6, 4); }},
        {"5 Jacobian-ideal inclusion sweeps (m<=5, n<=3, deg<=12; a<=6)",
         [] { return singulex::sweeps::ideal_inclusions(5, 3, 12, 6); }},
        {"6 deformation singular-locus equivalence (3 families x 1000 points)",
         [] { return singulex::sweeps::deformation_equivalence(1000, 42); }},
        {"7 detection gate (n=7, m=2)", [] { return singulex::sweeps::detection_gate(); }},
        {"8 cross-power family charts (n<=5, m in {2,3}, d=2m)",
         [] { return singulex::sweeps::family_charts(5); }},
        {"9 oracle equivalence (decomposition, spectrum, membership)",
         [] { return singulex::sweeps::oracle_equivalence(30, 10); }},
        {"10 algebra property suite (10^4 seeded random polynomials)",
         [] { return singulex::sweeps::algebra_properties(10000, 1); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = clock::now();
        SweepResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        const double secs =
            std::chrono::duration_cast<std::chrono::duration<double>>(clock::now() - start)
                .count();
        std::printf("criterion %s: %s (%llu cases, %.2fs)%s%s\n", c.label,
                    r.pass ? "PASS" : "FAIL", static_cast<unsigned long long>(r.cases), secs,
                    r.detail.empty() ? "" : " -- ", r.detail.c_str());
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
