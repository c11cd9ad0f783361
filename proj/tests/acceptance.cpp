// Acceptance gate: prints one pass/fail line per criterion and exits
// nonzero if any criterion fails. Each criterion is backed by the registry
// case(s) whose assertions encode exactly the required values.
#include <cstdio>
#include <string>
#include <vector>

#include "ivgeo/cases.hpp"

namespace {

bool case_passes(const std::string& id, const ivgeo::ToleranceConfig& cfg,
                 std::string* detail) {
    const ivgeo::Report r = ivgeo::run_case(id, cfg);
    if (!r.pass() && detail) {
        for (const ivgeo::Assertion& a : r.assertions)
            if (!a.pass) {
                *detail += " [" + id + ": " + a.name + "]";
                break;
            }
    }
    return r.pass();
}

} // namespace

int main() {
    const ivgeo::ToleranceConfig cfg;

    struct Criterion {
        const char* text;
        std::vector<std::string> cases;
    };
    const std::vector<Criterion> criteria = {
        {"1 interval algebra oracle (10000 random linear combinations, 1e-12 rel)",
         {"interval-algebra"}},
        {"2 gH identities (endpoint == cw on 10000 pairs; A gh- A = [0,0]; [1,4] gh- [2,3])",
         {"gh-identities"}},
        {"3 order axioms (10000 random triples; [1,4] vs [2,3] lu-incomparable)",
         {"order-axioms"}},
        {"4 divergent slope on the positive reals (Diverged(-1); slope(0.01); convex_at holds)",
         {"appendixA-divergence"}},
        {"5 circle tracked case (track limits +/- pi/2; gH derivative <0, pi/2>)",
         {"circle-tracked-ghd"}},
        {"6 spd endpoint tracks (lower 0 / ln 4, upper mirrored; gH = [0, ln 4] on both tracks)",
         {"appendixA2-spd-endpoints"}},
        {"7 spd first-order counterexample (Df = <ln 4, 2(ln 4)^2>; printed values within 0.05)",
         {"spd-thm42-counterexample"}},
        {"8 minus-direction derivatives (Df(0;1) = -1, Df(0;-1) = 0)",
         {"minus-direction"}},
        {"9 tangent direction function (matches {0, -y}; convex at 0; midpoint gap >= 0.5)",
         {"tangent-g-nonconvex"}},
        {"10 Q-monotonicity and the no-infimum refutation script",
         {"q-monotone-interval", "no-infimum-Q"}},
        {"11 non-inversion pair (first-order holds, convexity falsified, witnesses recorded)",
         {"converse-thm-firstorder-real", "final-noninversion"}},
        {"12 cylinder directional derivatives (vertical = v2, horizontal = 0)",
         {"cylinder-deriv"}},
        {"13 homogeneity (lambda in {0,.5,1,2,10}) and linearity (random coefficients)",
         {"homogeneity", "linearity"}},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        bool ok = true;
        std::string detail;
        for (const std::string& id : c.cases) ok = case_passes(id, cfg, &detail) && ok;
        std::printf("%s criterion %s%s\n", ok ? "pass" : "FAIL", c.text, detail.c_str());
        failures += ok ? 0 : 1;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
