#include "ivgeo/cases.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <istream>
#include <random>
#include <sstream>

#include "ivgeo/catalog.hpp"
#include "ivgeo/convexity.hpp"
#include "ivgeo/refutation.hpp"

namespace ivgeo {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const double kLn2 = std::log(2.0);
const double kLn4 = std::log(4.0);

// -- report helpers ---------------------------------------------------------

void check_near(Report& r, const std::string& name, double expected, double actual, double tol) {
    r.assertions.push_back({name, expected, actual, tol, std::abs(actual - expected) <= tol});
}

void check_true(Report& r, const std::string& name, bool ok, const nlohmann::json& actual) {
    r.assertions.push_back({name, true, actual, 0.0, ok});
}

void check_interval(Report& r, const std::string& name, const Interval& expected,
                    const Interval& actual, double tol) {
    r.assertions.push_back(
        {name, expected.str(), actual.str(), tol, hausdorff(expected, actual) <= tol});
}

void note(Report& r, const std::string& name, const nlohmann::json& value) {
    r.assertions.push_back({name, "recorded", value, 0.0, true});
}

// -- random interval generators ----------------------------------------------

Interval random_interval(std::mt19937& rng) {
    std::uniform_real_distribution<double> c(-10.0, 10.0);
    std::uniform_real_distribution<double> w(0.0, 10.0);
    return Interval::from_cw(c(rng), w(rng));
}

// Independent endpoint oracle for alpha*A + beta*B: scale each operand by
// the sign case split, then add endpoints.
Interval lin_combo_endpoint_oracle(double alpha, const Interval& a, double beta,
                                   const Interval& b) {
    auto scale_ep = [](double k, const Interval& x) {
        return k >= 0.0 ? Interval::from_endpoints(k * x.lo(), k * x.hi())
                        : Interval::from_endpoints(k * x.hi(), k * x.lo());
    };
    const Interval ka = scale_ep(alpha, a), kb = scale_ep(beta, b);
    return Interval::from_endpoints(ka.lo() + kb.lo(), ka.hi() + kb.hi());
}

Interval gh_endpoint_oracle(const Interval& a, const Interval& b) {
    const double d1 = a.lo() - b.lo(), d2 = a.hi() - b.hi();
    return Interval::from_endpoints(std::min(d1, d2), std::max(d1, d2));
}

// -- shared fixtures ----------------------------------------------------------

DerivConfig deriv_cfg(const ToleranceConfig& cfg) { return DerivConfig{cfg.sched, cfg.tol}; }

SampleGrid circle_grid(const ToleranceConfig& cfg) {
    return default_circle_grid(cfg.theta_count, cfg.s_count);
}

Geodesic spd_counterexample_geodesic() {
    return geodesic_segment(spd2(), catalog::spd_half_identity(), catalog::spd_identity());
}

// One geodesic per target, gamma(s) = theta0 + s*(theta - theta0) in the
// closed chart [0, 2*pi]. The long way around the cut point is reached
// through the theta = 2*pi grid target rather than a per-target second arc,
// which keeps chart functions like theta^2 single-valued along every
// sampled geodesic.
SegmentFactory chart_segment_factory() {
    return [](const Point& x0, const Point& x) {
        return std::vector<Geodesic>{geodesic_segment(circle(), x0, x)};
    };
}

// ---------------------------------------------------------------------------
// Cases

void case_interval_algebra(Report& r, const ToleranceConfig&) {
    std::mt19937 rng(20240101);
    std::uniform_real_distribution<double> coef(-10.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double alpha = coef(rng), beta = coef(rng);
        const Interval a = random_interval(rng), b = random_interval(rng);
        const Interval got = linear_combo(alpha, a, beta, b);
        const Interval want = lin_combo_endpoint_oracle(alpha, a, beta, b);
        const double s = std::max(1.0, std::max(std::abs(want.lo()), std::abs(want.hi())));
        worst = std::max(worst, hausdorff(got, want) / s);
    }
    check_near(r, "linear_combo matches endpoint case split (10000 samples, rel)", 0.0, worst,
               1e-12);
    check_interval(r, "2<1,2> - <3,1> = <-1,5>", Interval::from_cw(-1.0, 5.0),
                   linear_combo(2.0, Interval::from_cw(1.0, 2.0), -1.0, Interval::from_cw(3.0, 1.0)),
                   1e-12);
    check_interval(r, "-[1,4] = [-4,-1]", Interval::from_endpoints(-4.0, -1.0),
                   neg(Interval::from_endpoints(1.0, 4.0)), 0.0);
    check_interval(r, "[1,4]+[2,3] = [3,7]", Interval::from_endpoints(3.0, 7.0),
                   minkowski_add(Interval::from_endpoints(1.0, 4.0),
                                 Interval::from_endpoints(2.0, 3.0)),
                   0.0);
    check_interval(r, "[1,4]-[2,3] = [-2,2]", Interval::from_endpoints(-2.0, 2.0),
                   minkowski_sub(Interval::from_endpoints(1.0, 4.0),
                                 Interval::from_endpoints(2.0, 3.0)),
                   0.0);
    check_near(r, "hausdorff([1,4],[2,3]) = 1", 1.0,
               hausdorff(Interval::from_endpoints(1.0, 4.0), Interval::from_endpoints(2.0, 3.0)),
               0.0);
    const Interval a = Interval::from_endpoints(1.0, 4.0);
    check_true(r, "minkowski_sub(A,A) != [0,0] when width(A) > 0",
               minkowski_sub(a, a) != Interval::from_endpoints(0.0, 0.0),
               minkowski_sub(a, a).str());
}

void case_order_axioms(Report& r, const ToleranceConfig&) {
    std::mt19937 rng(20240102);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        const Interval a = random_interval(rng), b = random_interval(rng),
                       c = random_interval(rng);
        const MinOrdering ab = cmp_min(a, b), ba = cmp_min(b, a);
        // antisymmetry / totality
        if ((ab == MinOrdering::Less) != (ba == MinOrdering::Greater)) ++violations;
        if ((ab == MinOrdering::Equal) != (ba == MinOrdering::Equal)) ++violations;
        // transitivity of <=min
        const auto le = [](MinOrdering o) { return o != MinOrdering::Greater; };
        if (le(ab) && le(cmp_min(b, c)) && !le(cmp_min(a, c))) ++violations;
    }
    check_near(r, "cmp_min order axioms on 10000 random triples (violations)", 0.0, violations,
               0.0);
    check_true(r, "[1,4] and [2,3] are lu-incomparable",
               cmp_lu(Interval::from_endpoints(1.0, 4.0), Interval::from_endpoints(2.0, 3.0)) ==
                   LuComparison::Incomparable,
               "Incomparable");
    check_true(r, "<2.5,0.5> <min <2.5,1.5>",
               cmp_min(Interval::from_cw(2.5, 0.5), Interval::from_cw(2.5, 1.5)) ==
                   MinOrdering::Less,
               "Less");
}

bool validate_supremum_refutation(const Interval& candidate) {
    const Refutation ref = refute_supremum_of_zero_center_band(candidate);
    if (ref.kind == Refutation::Kind::NotUpperBound) {
        // the exhibited member must escape the candidate
        return zero_center_band_member(ref.exhibit) &&
               cmp_min(ref.exhibit, candidate) == MinOrdering::Greater;
    }
    if (ref.kind != Refutation::Kind::SmallerUpperBound) return false;
    // the exhibit must still dominate the family and sit strictly below
    if (cmp_min(ref.exhibit, candidate) != MinOrdering::Less) return false;
    for (double x : {0.0, 1.0, 10.0, 1e6})
        if (cmp_min(Interval::from_cw(0.0, x), ref.exhibit) == MinOrdering::Greater) return false;
    return ref.exhibit.center() > 0.0;
}

void case_no_supremum(Report& r, const ToleranceConfig&) {
    std::mt19937 rng(20240103);
    std::vector<Interval> candidates = {
        Interval::from_cw(1.0, 0.0),  Interval::from_cw(0.5, 3.0), Interval::from_cw(0.0, 5.0),
        Interval::from_cw(-1.0, 2.0), Interval::from_cw(2.0, 0.1), Interval::from_cw(0.0, 0.0)};
    for (int i = 0; i < 200; ++i) candidates.push_back(random_interval(rng));
    int failures = 0;
    for (const Interval& c : candidates)
        if (!validate_supremum_refutation(c)) ++failures;
    check_near(r, "every candidate supremum of {<0,x>: x>=0} is refuted", 0.0, failures, 0.0);
    check_true(r, "<1,0> is an upper bound of sampled family members",
               is_upper_bound(Interval::from_cw(1.0, 0.0),
                              std::vector<Interval>{Interval::from_cw(0.0, 0.0),
                                                    Interval::from_cw(0.0, 7.0),
                                                    Interval::from_cw(0.0, 1e5)}),
               true);
}

void case_gh_identities(Report& r, const ToleranceConfig&) {
    std::mt19937 rng(20240104);
    double worst = 0.0;
    bool self_zero = true;
    for (int i = 0; i < 10000; ++i) {
        const Interval a = random_interval(rng), b = random_interval(rng);
        worst = std::max(worst, hausdorff(gh_diff(a, b), gh_endpoint_oracle(a, b)));
        self_zero = self_zero && gh_diff(a, a) == Interval::from_endpoints(0.0, 0.0);
    }
    check_near(r, "gh_diff endpoint form vs cw form (10000 samples)", 0.0, worst, 1e-12);
    check_true(r, "gh_diff(A,A) = [0,0] exactly", self_zero, self_zero);
    check_interval(r, "gh_diff([1,4],[2,3]) = [-1,1]", Interval::from_endpoints(-1.0, 1.0),
                   gh_diff(Interval::from_endpoints(1.0, 4.0), Interval::from_endpoints(2.0, 3.0)),
                   0.0);
    check_interval(r, "<5,2> gh- <3,2> = <2,0>", Interval::from_cw(2.0, 0.0),
                   gh_diff(Interval::from_cw(5.0, 2.0), Interval::from_cw(3.0, 2.0)), 0.0);
}

void case_cylinder_deriv(Report& r, const ToleranceConfig& cfg) {
    const RealFn f = catalog::cylinder_piecewise();
    const Point x0 = catalog::cylinder_base();
    for (double v2 : {1.0, -2.0}) {
        const Geodesic g =
            geodesic_from_velocity(cylinder(), x0, tangent_at(x0, {0.0, v2}));
        const LimitResult d = real_directional_derivative(f, g, cfg.sched, cfg.tol);
        check_true(r, "vertical direction v2=" + std::to_string(v2) + " converges", d.converged(),
                   d.converged());
        check_near(r, "Df(x0;(0,0," + std::to_string(v2) + ")) = v2", v2, d.value, cfg.tol);
    }
    for (double v1 : {1.0, kPi}) {
        const Geodesic g =
            geodesic_from_velocity(cylinder(), x0, tangent_at(x0, {v1, 0.0}));
        const LimitResult d = real_directional_derivative(f, g, cfg.sched, cfg.tol);
        check_near(r, "Df(x0;(0," + std::to_string(v1) + ",0)) = 0", 0.0,
                   d.converged() ? d.value : std::nan(""), cfg.tol);
    }
    bool rejected = false;
    try {
        geodesic_from_velocity(cylinder(), x0, tangent_at(x0, {1.0, 1.0}));
    } catch (const BadTangent&) {
        rejected = true;
    }
    check_true(r, "mixed cylinder direction rejected", rejected, rejected);
}

void case_appendix_a_divergence(Report& r, const ToleranceConfig& cfg) {
    const RealFn f = catalog::preal_log_cap();
    const Point x = preal_point(1.0);
    const Geodesic g = geodesic_segment(positive_reals(), x, preal_point(2.0));
    check_near(r, "geodesic velocity ln(2)", kLn2, g.velocity.vec[0], 1e-12);
    check_near(r, "slope at s=0.01 equals -ln(2) - 100", -kLn2 - 100.0, slope_real(f, g, 0.01),
               1e-3);
    const LimitResult d = real_directional_derivative(f, g, cfg.sched, cfg.tol);
    check_true(r, "slope limit diverges", d.tag == LimitResult::Tag::Diverged,
               d.tag == LimitResult::Tag::Diverged ? "Diverged" : "not Diverged");
    check_near(r, "divergence sign is -1", -1.0, d.sign, 0.0);

    SampleGrid grid;
    grid.targets = {preal_point(0.5), preal_point(2.0), preal_point(3.0)};
    grid.s_params = default_s_params(cfg.s_count);
    const Verdict v = convex_at(f, x, grid, default_segment_factory(positive_reals()));
    check_true(r, "f is convex at x=1 on the sample grid", v.holds, v.holds);
}

void case_minus_direction(Report& r, const ToleranceConfig& cfg) {
    const RealFn f = catalog::step_down();
    const Point x0 = euclidean_point({0.0});
    const auto deriv = [&](double v) {
        return real_directional_derivative(
            f, geodesic_from_velocity(euclidean(1), x0, tangent_at(x0, {v})), cfg.sched, cfg.tol);
    };
    const LimitResult plus = deriv(1.0), minus = deriv(-1.0);
    check_near(r, "Df(0;1) = -1", -1.0, plus.converged() ? plus.value : std::nan(""), cfg.tol);
    check_near(r, "Df(0;-1) = 0", 0.0, minus.converged() ? minus.value : std::nan(""), cfg.tol);
    check_true(r, "-Df(0;-1) >= Df(0;1)", -minus.value >= plus.value - cfg.tol,
               -minus.value >= plus.value - cfg.tol);
}

void case_tangent_g_nonconvex(Report& r, const ToleranceConfig& cfg) {
    const RealFn f = catalog::plateau_drop();
    const RealFn g = catalog::step_down();
    const Point x0 = euclidean_point({0.0});

    // derive the direction function of f at 0 numerically and compare with g
    double worst = 0.0;
    for (int i = 0; i < 21; ++i) {
        const double y = -5.0 + 0.5 * i;
        double derived = 0.0;
        if (y != 0.0) {
            const LimitResult d = real_directional_derivative(
                f, geodesic_from_velocity(euclidean(1), x0, tangent_at(x0, {y})), cfg.sched,
                cfg.tol);
            derived = d.converged() ? d.value : std::nan("");
        }
        worst = std::max(worst, std::abs(derived - g.eval(euclidean_point({y}))));
    }
    check_near(r, "derived direction function matches {0, -y} at 21 points", 0.0, worst, cfg.tol);

    SampleGrid grid;
    for (double y : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) grid.targets.push_back(euclidean_point({y}));
    grid.s_params = default_s_params(cfg.s_count);
    const SegmentFactory segs = default_segment_factory(euclidean(1));
    check_true(r, "g is convex at 0 on the sample grid", convex_at(g, x0, grid, segs).holds, true);

    const std::vector<std::pair<Point, Point>> pairs = {
        {euclidean_point({-1.0}), euclidean_point({1.0})}};
    const Verdict v = convex_on(g, pairs, grid.s_params, grid.tol, segs);
    check_true(r, "g is not convex on R (violation found)", !v.holds, !v.holds);
    if (v.witness) {
        note(r, "witness", {{"s", v.witness->s},
                            {"lhs", v.witness->lhs.center()},
                            {"rhs", v.witness->rhs.center()}});
    }
    const double mid_gap = g.eval(euclidean_point({0.0})) -
                           0.5 * (g.eval(euclidean_point({-1.0})) + g.eval(euclidean_point({1.0})));
    check_near(r, "midpoint violation gap is 0.5", 0.5, mid_gap, 1e-12);
}

void case_converse_firstorder_real(Report& r, const ToleranceConfig& cfg) {
    const RealFn f = catalog::circle_log_bump();
    const Point x0 = catalog::circle_i();
    const SampleGrid grid = circle_grid(cfg);

    // the first-order inequality is quantified over the chart segments; the
    // convexity falsifier additionally searches the opposite arcs
    check_true(r, "first-order inequality holds on the sample grid",
               first_order_check_real(f, x0, grid, chart_segment_factory(), deriv_cfg(cfg)).holds,
               true);

    const Verdict v = convex_at(f, x0, grid, default_segment_factory(circle()));
    check_true(r, "convexity at i is falsified", !v.holds, !v.holds);
    if (v.witness) {
        const double gap = v.witness->lhs.center() - v.witness->rhs.center();
        check_true(r, "grid witness gap >= 0.003", gap >= 0.003, gap);
        note(r, "grid witness",
             {{"theta", v.witness->target->coords[0]},
              {"s", v.witness->s},
              {"lhs", v.witness->lhs.center()},
              {"rhs", v.witness->rhs.center()}});
    }

    // stated midpoint witness toward -i, evaluated verbatim
    const Geodesic to_minus_i = circle_segment(x0, kPi);
    const double lhs = f.eval(to_minus_i.eval(0.5));
    const double rhs = 0.5 * f.eval(x0) + 0.5 * f.eval(circle_point(3.0 * kPi / 2.0));
    note(r, "stated s=1/2 witness toward -i",
         {{"lhs", lhs}, {"rhs", rhs}, {"violates", lhs > rhs + grid.tol}});
}

void case_circle_tracked_ghd(Report& r, const ToleranceConfig& cfg) {
    const Geodesic g = circle_segment(catalog::circle_i(), kPi / 2.0); // i to -1
    check_near(r, "chart velocity -pi/2", -kPi / 2.0, g.velocity.vec[0], 1e-12);
    const TrackedCurveFn width = catalog::circle_tracked_width(g);
    const TrackedCurveFn center = [](Track, double) { return 0.0; };
    const TrackedDerivReport rep =
        tracked_derivative(center, width, ChannelKind::CenterWidth, cfg.sched, cfg.tol);

    check_near(r, "width slope, rational track = pi/2", kPi / 2.0,
               rep.width.rational.converged() ? rep.width.rational.value : std::nan(""), cfg.tol);
    check_near(r, "width slope, irrational track = -pi/2", -kPi / 2.0,
               rep.width.irrational.converged() ? rep.width.irrational.value : std::nan(""),
               cfg.tol);
    check_true(r, "width channel does not exist", !rep.width_exists(), !rep.width_exists());
    check_true(r, "gH derivative exists", rep.gh_exists, rep.gh_exists);
    check_interval(r, "gH derivative = <0, pi/2>", Interval::from_cw(0.0, kPi / 2.0), rep.gh,
                   cfg.tol);
}

void case_lemma44_equivalence(Report& r, const ToleranceConfig& cfg) {
    // circle: width composes to s^2 v^2, non-decreasing for s >= 0
    const Ivf f = catalog::circle_unit_band();
    const Geodesic g = geodesic_segment(circle(), catalog::circle_i(), circle_point(kPi));
    const std::vector<double> s_grid = default_s_params(cfg.s_count);
    check_true(r, "circle width non-decreasing along the geodesic",
               width_monotone_check(f, g, s_grid, 1e-12).holds, true);
    const GhDerivResult d = gh_directional_derivative(f, g, cfg.sched, cfg.tol);
    check_interval(r, "circle gH derivative = <0,0>", Interval::from_cw(0.0, 0.0), d.value,
                   cfg.tol);
    check_true(r, "signed width slope converges and is >= 0",
               d.width_signed.converged() && d.width_signed.value >= -cfg.tol,
               d.width_signed.value);

    // spd: base I toward 2I; width (s ln4)^2 is non-decreasing
    const Ivf fs = catalog::spd_logdet_band();
    const Geodesic gs =
        geodesic_segment(spd2(), catalog::spd_identity(), spd_point(Mat2::identity() * 2.0));
    check_true(r, "spd width non-decreasing along the geodesic",
               width_monotone_check(fs, gs, s_grid, 1e-12).holds, true);
    const GhDerivResult ds = gh_directional_derivative(fs, gs, cfg.sched, cfg.tol);
    check_interval(r, "spd gH derivative = <ln 4, 0>", Interval::from_cw(kLn4, 0.0), ds.value,
                   cfg.tol);
    const LimitResult dl =
        real_directional_derivative(lower_fn(fs), gs, cfg.sched, cfg.tol);
    const LimitResult du =
        real_directional_derivative(upper_fn(fs), gs, cfg.sched, cfg.tol);
    check_true(r, "endpoint derivatives converge", dl.converged() && du.converged(), true);
    check_interval(r, "endpoint form [Dc-Dw, Dc+Dw] matches",
                   Interval::from_endpoints(dl.value, du.value), ds.value, 10.0 * cfg.tol);
}

void case_q_monotone_interval(Report& r, const ToleranceConfig& cfg) {
    const std::vector<double> s_grid = default_s_params(cfg.s_count);

    // Q(s) = <s, 0> for <x^2, 1> at 0 along gamma(s) = s
    const Ivf f = catalog::parabola_unit_band();
    const Point zero = euclidean_point({0.0});
    const Geodesic g = geodesic_from_velocity(euclidean(1), zero, tangent_at(zero, {1.0}));
    double worst = 0.0;
    for (double s : s_grid)
        worst = std::max(worst, hausdorff(slope_gh(f, g, s), Interval::from_cw(s, 0.0)));
    check_near(r, "Q(s) = <s,0> on the s grid", 0.0, worst, 1e-12);
    check_true(r, "Q is min-order non-decreasing", monotone_q_check(f, zero, g, s_grid, 1e-12).holds,
               true);

    // real slope monotonicity for the convex-at-a-point catalog entries
    check_true(r, "positive-reals slope non-decreasing",
               monotone_q_check(catalog::preal_log_cap(), preal_point(1.0),
                                geodesic_segment(positive_reals(), preal_point(1.0),
                                                 preal_point(2.0)),
                                s_grid, 1e-12)
                   .holds,
               true);
    check_true(r, "circle width-channel slope non-decreasing",
               monotone_q_check(catalog::circle_offset_sq(), catalog::circle_i(),
                                geodesic_segment(circle(), catalog::circle_i(),
                                                 circle_point(kPi)),
                                s_grid, 1e-12)
                   .holds,
               true);
    check_true(r, "spd interval slope non-decreasing",
               monotone_q_check(catalog::spd_logdet_band(), catalog::spd_identity(),
                                geodesic_segment(spd2(), catalog::spd_identity(),
                                                 spd_point(Mat2::identity() * 2.0)),
                                s_grid, 1e-9)
                   .holds,
               true);
}

bool validate_infimum_refutation(const Interval& candidate) {
    const Refutation ref = refute_infimum_of_slope_band(candidate);
    if (ref.kind == Refutation::Kind::NotLowerBound) {
        return slope_band_member(ref.exhibit) &&
               cmp_min(candidate, ref.exhibit) == MinOrdering::Greater;
    }
    if (ref.kind != Refutation::Kind::BetterLowerBound) return false;
    if (cmp_min(candidate, ref.exhibit) != MinOrdering::Less) return false;
    for (double s : {1e-9, 1e-3, 1.0, 1e6})
        if (cmp_min(ref.exhibit, Interval::from_cw(s, 0.0)) == MinOrdering::Greater) return false;
    return true;
}

void case_no_infimum_q(Report& r, const ToleranceConfig&) {
    std::mt19937 rng(20240105);
    std::vector<Interval> candidates = {
        Interval::from_cw(0.0, 0.0), Interval::from_cw(0.0, 3.0),  Interval::from_cw(-1.0, 0.0),
        Interval::from_cw(0.5, 0.5), Interval::from_cw(-2.0, 4.0), Interval::from_cw(1e-9, 0.0)};
    for (int i = 0; i < 200; ++i) candidates.push_back(random_interval(rng));
    int failures = 0;
    for (const Interval& c : candidates)
        if (!validate_infimum_refutation(c)) ++failures;
    check_near(r, "every candidate infimum of {<s,0>: s>0} is refuted", 0.0, failures, 0.0);
    check_true(r, "<0,0> is a lower bound of sampled members",
               is_lower_bound(Interval::from_cw(0.0, 0.0),
                              std::vector<Interval>{Interval::from_cw(0.1, 0.0),
                                                    Interval::from_cw(0.01, 0.0),
                                                    Interval::from_cw(0.001, 0.0)}),
               true);
}

void case_spd_thm42_counterexample(Report& r, const ToleranceConfig& cfg) {
    const Ivf f = catalog::spd_logdet_band();
    const Point x = catalog::spd_half_identity();
    const Point y = catalog::spd_identity();
    const Geodesic g = spd_counterexample_geodesic();

    const GhDerivResult d = gh_directional_derivative(f, g, cfg.sched, cfg.tol);
    check_true(r, "gH derivative converges", d.converged(), d.converged());
    check_near(r, "center channel = ln 4", kLn4, d.center.value, cfg.tol);
    check_near(r, "width channel = 2 (ln 4)^2", 2.0 * kLn4 * kLn4, d.width_abs.value, cfg.tol);
    check_true(r, "signed width slope is negative (width decreasing)",
               d.width_signed.converged() && d.width_signed.value < 0.0, d.width_signed.value);

    const Interval gap = gh_diff(eval_ivf(f, y), eval_ivf(f, x));
    check_interval(r, "f(y) gh- f(x) = <ln 4, (ln 4)^2>", Interval::from_cw(kLn4, kLn4 * kLn4),
                   gap, cfg.tol);
    check_true(r, "f(y) gh- f(x) <min Df(x;X)", cmp_min_tol(gap, d.value, cfg.tol) == MinOrdering::Less,
               true);

    const std::vector<double> s_grid = default_s_params(cfg.s_count);
    check_true(r, "width decreasing along the geodesic (monotone check fails)",
               !width_monotone_check(f, g, s_grid, 1e-12).holds, true);

    SampleGrid grid;
    grid.targets = {y};
    grid.s_params = s_grid;
    const Verdict v = first_order_check_ivf(f, x, grid, default_segment_factory(spd2()),
                                            deriv_cfg(cfg));
    check_true(r, "first-order min-order inequality is violated", !v.holds, !v.holds);

    // printed values vs derived closed forms
    check_near(r, "printed center 1.38 vs derived ln 4", 1.38, kLn4, 0.05);
    check_near(r, "printed gh width 1.90 vs derived (ln 4)^2", 1.90, kLn4 * kLn4, 0.05);
    check_near(r, "printed deriv width 3.81 vs derived 2 (ln 4)^2", 3.81, 2.0 * kLn4 * kLn4, 0.05);
    note(r, "printed 3.81 vs derived 3.8445 discrepancy (kept, not reconciled)",
         std::abs(3.81 - 2.0 * kLn4 * kLn4));
}

void case_final_noninversion(Report& r, const ToleranceConfig& cfg) {
    const Ivf f = catalog::circle_noninversion();
    const Point x0 = catalog::circle_i();
    const SampleGrid grid = circle_grid(cfg);

    check_true(r, "first-order min-order inequality holds on the sample grid",
               first_order_check_ivf(f, x0, grid, chart_segment_factory(), deriv_cfg(cfg)).holds,
               true);

    const Verdict v = cw_convex_at(f, x0, grid, default_segment_factory(circle()));
    check_true(r, "cw-convexity at i is falsified", !v.holds, !v.holds);
    check_true(r, "violation is in the width channel", v.witness && v.witness->channel == "width",
               v.witness ? v.witness->channel : "none");
    if (v.witness) {
        note(r, "grid witness",
             {{"theta", v.witness->target->coords[0]},
              {"s", v.witness->s},
              {"lhs", v.witness->lhs.center()},
              {"rhs", v.witness->rhs.center()}});
    }

    // stated s=1/2 width witness toward theta = 3*pi/2, evaluated verbatim
    const Geodesic to_3pi2 = circle_segment(x0, kPi);
    const double lhs = f.width.eval(to_3pi2.eval(0.5));
    const double rhs =
        0.5 * f.width.eval(x0) + 0.5 * f.width.eval(circle_point(3.0 * kPi / 2.0));
    note(r, "stated s=1/2 witness toward 3*pi/2",
         {{"lhs", lhs}, {"rhs", rhs}, {"violates", lhs > rhs + grid.tol}});
}

void case_appendix_a2_spd_endpoints(Report& r, const ToleranceConfig& cfg) {
    const Geodesic g = geodesic_segment(spd2(), catalog::spd_identity(),
                                        spd_point(Mat2::identity() * 2.0));
    const auto [lower, upper] = catalog::spd_tracked_endpoints(g);
    const TrackedDerivReport rep =
        tracked_derivative(lower, upper, ChannelKind::LowerUpper, cfg.sched, cfg.tol);

    check_near(r, "lower slope, rational track = 0", 0.0,
               rep.lower.rational.converged() ? rep.lower.rational.value : std::nan(""), cfg.tol);
    check_near(r, "lower slope, irrational track = ln 4", kLn4,
               rep.lower.irrational.converged() ? rep.lower.irrational.value : std::nan(""),
               cfg.tol);
    check_near(r, "upper slope, rational track = ln 4", kLn4,
               rep.upper.rational.converged() ? rep.upper.rational.value : std::nan(""), cfg.tol);
    check_near(r, "upper slope, irrational track = 0", 0.0,
               rep.upper.irrational.converged() ? rep.upper.irrational.value : std::nan(""),
               cfg.tol);
    check_true(r, "lower channel does not exist", !rep.lower_exists(), !rep.lower_exists());
    check_true(r, "upper channel does not exist", !rep.upper_exists(), !rep.upper_exists());
    check_true(r, "gH derivative exists", rep.gh_exists, rep.gh_exists);
    check_interval(r, "gH derivative (rational track) = [0, ln 4]",
                   Interval::from_endpoints(0.0, kLn4), rep.gh_rational.value, cfg.tol);
    check_interval(r, "gH derivative (irrational track) = [0, ln 4]",
                   Interval::from_endpoints(0.0, kLn4), rep.gh_irrational.value, cfg.tol);
}

void case_homogeneity(Report& r, const ToleranceConfig& cfg) {
    const std::vector<double> lambdas = {0.0, 0.5, 1.0, 2.0, 10.0};

    const Ivf fs = catalog::spd_logdet_band();
    const Point xs = catalog::spd_half_identity();
    const Tangent vs = spd_counterexample_geodesic().velocity;
    const auto spd_deriv = [&](const Tangent& t) {
        return gh_directional_derivative(fs, geodesic_from_velocity(spd2(), xs, t), cfg.sched,
                                         cfg.tol);
    };
    const Verdict a = homogeneity_check(spd_deriv, vs, lambdas, cfg.tol);
    check_true(r, "spd gH derivative is positively homogeneous", a.holds, a.holds);
    check_interval(r, "spd derivative at lambda=0 is <0,0>", Interval::from_cw(0.0, 0.0),
                   spd_deriv(scale_tangent(vs, 0.0)).value, cfg.tol);

    const Ivf fc = catalog::circle_unit_band();
    const Point xc = catalog::circle_i();
    const Tangent vc = tangent_at(xc, {-kPi / 2.0});
    const auto circ_deriv = [&](const Tangent& t) {
        return gh_directional_derivative(fc, geodesic_from_velocity(circle(), xc, t), cfg.sched,
                                         cfg.tol);
    };
    const Verdict b = homogeneity_check(circ_deriv, vc, lambdas, cfg.tol);
    check_true(r, "circle gH derivative is positively homogeneous", b.holds, b.holds);

    const Ivf fn = catalog::circle_noninversion();
    const auto noninv_deriv = [&](const Tangent& t) {
        return gh_directional_derivative(fn, geodesic_from_velocity(circle(), xc, t), cfg.sched,
                                         cfg.tol);
    };
    const Verdict c = homogeneity_check(noninv_deriv, vc, lambdas, 10.0 * cfg.tol);
    check_true(r, "circle theta^2-center derivative is positively homogeneous", c.holds, c.holds);
}

void case_linearity(Report& r, const ToleranceConfig& cfg) {
    std::mt19937 rng(20240106);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);

    const Geodesic gc = geodesic_segment(circle(), catalog::circle_i(), circle_point(kPi));
    const Geodesic gs = spd_counterexample_geodesic();
    const Ivf spd = catalog::spd_logdet_band();

    bool all = true;
    for (int i = 0; i < 5; ++i) {
        const double a1 = coef(rng), a2 = coef(rng);
        all = all && linearity_check(catalog::circle_theta_sq(), catalog::circle_log_bump(), a1,
                                     a2, gc, cfg.sched, 1e-5)
                         .holds;
        all = all &&
              linearity_check(spd.center, spd.width, a1, a2, gs, cfg.sched, 1e-5).holds;
    }
    check_true(r, "linearity holds for random coefficients on smooth pairs", all, all);

    // half-difference of endpoint functions recovers the width slope
    const Ivf band = catalog::circle_unit_band();
    const Verdict v = linearity_check(upper_fn(band), lower_fn(band), 0.5, -0.5, gc, cfg.sched,
                                      1e-5);
    check_true(r, "(Du - Dl)/2 recombination is linear", v.holds, v.holds);
}

// ---------------------------------------------------------------------------
// Registry

struct CaseEntry {
    CaseInfo info;
    std::function<void(Report&, const ToleranceConfig&)> run;
};

const std::vector<CaseEntry>& case_table() {
    static const std::vector<CaseEntry> table = {
        {{"interval-algebra", "Sec. 2, interval arithmetic and Lemma 2.1"}, case_interval_algebra},
        {{"order-axioms", "Sec. 2, order relations (3) and (4)"}, case_order_axioms},
        {{"no-supremum", "Sec. 2, Remark 2.2 (order incompleteness)"}, case_no_supremum},
        {{"gh-identities", "Sec. 4, gH-difference and Lemma 4.1"}, case_gh_identities},
        {{"cylinder-deriv", "Sec. 3, cylinder example"}, case_cylinder_deriv},
        {{"appendixA-divergence", "Appendix A, Example 1 (divergent slope)"},
         case_appendix_a_divergence},
        {{"minus-direction", "Sec. 3, example after Theorem on convexity at a point"},
         case_minus_direction},
        {{"tangent-g-nonconvex", "Sec. 3, tangent-space direction function example"},
         case_tangent_g_nonconvex},
        {{"converse-thm-firstorder-real", "Sec. 3, circle converse example"},
         case_converse_firstorder_real},
        {{"circle-tracked-ghd", "Sec. 4, Example (two-track width on the circle)"},
         case_circle_tracked_ghd},
        {{"lemma44-equivalence", "Sec. 4, Lemmas 4.4/4.5 (non-decreasing width)"},
         case_lemma44_equivalence},
        {{"q-monotone-interval", "Sec. 3 Theorem (i) and Sec. 4 Theorem 4.1 (i)"},
         case_q_monotone_interval},
        {{"no-infimum-Q", "Sec. 4, Remark after Theorem 4.1 (Q has no infimum)"},
         case_no_infimum_q},
        {{"spd-thm42-counterexample", "Sec. 4, Example (spd cone vs Theorem 4.2)"},
         case_spd_thm42_counterexample},
        {{"final-noninversion", "Sec. 4, final example (no inversion of Theorem 4.2)"},
         case_final_noninversion},
        {{"appendixA2-spd-endpoints", "Appendix A, Example 2 (spd endpoints)"},
         case_appendix_a2_spd_endpoints},
        {{"homogeneity", "Sec. 3/4, positive homogeneity of the derivative"}, case_homogeneity},
        {{"linearity", "Sec. 3, linear combinations of derivatives"}, case_linearity},
    };
    return table;
}

} // namespace

bool Report::pass() const {
    for (const Assertion& a : assertions)
        if (!a.pass) return false;
    return !assertions.empty();
}

const std::vector<CaseInfo>& registry() {
    static const std::vector<CaseInfo> infos = [] {
        std::vector<CaseInfo> v;
        for (const CaseEntry& e : case_table()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

Report run_case(const std::string& id, const ToleranceConfig& cfg) {
    for (const CaseEntry& e : case_table()) {
        if (e.info.id != id) continue;
        Report r;
        r.case_id = id;
        r.paper_location = e.info.location;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            e.run(r, cfg);
        } catch (const std::exception& ex) {
            r.assertions.push_back({"no exception escapes the case", "no exception", ex.what(),
                                    0.0, false});
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        return r;
    }
    throw UnknownCase("unknown case id: " + id);
}

RunSummary run_all(const ToleranceConfig& cfg) {
    RunSummary s;
    for (const CaseEntry& e : case_table()) {
        s.reports.push_back(run_case(e.info.id, cfg));
        (s.reports.back().pass() ? s.passed : s.failed) += 1;
    }
    return s;
}

ToleranceConfig load_config(std::istream& in, ToleranceConfig base) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "tol") base.tol = std::stod(val);
            else if (key == "s0") base.sched.s0 = std::stod(val);
            else if (key == "rho") base.sched.rho = std::stod(val);
            else if (key == "K") base.sched.steps = std::stoi(val);
            else if (key == "grid.theta.count") base.theta_count = std::stoi(val);
            else if (key == "grid.s.count") base.s_count = std::stoi(val);
            else throw std::runtime_error("unknown key");
        } catch (const std::exception&) {
            throw std::runtime_error("config line " + std::to_string(lineno) + ": bad entry '" +
                                     key + "'");
        }
    }
    return base;
}

nlohmann::json report_json(const Report& r) {
    nlohmann::json out;
    out["case"] = r.case_id;
    out["paper_location"] = r.paper_location;
    out["assertions"] = nlohmann::json::array();
    for (const Assertion& a : r.assertions) {
        out["assertions"].push_back({{"name", a.name},
                                     {"expected", a.expected},
                                     {"actual", a.actual},
                                     {"tol", a.tol},
                                     {"pass", a.pass}});
    }
    out["runtime_ms"] = r.runtime_ms;
    return out;
}

std::string report_markdown(const Report& r) {
    std::ostringstream os;
    os << "## " << r.case_id << (r.pass() ? "  PASS" : "  FAIL") << "\n\n";
    os << "Location: " << r.paper_location << "\n\n";
    os << "| assertion | expected | actual | tol | pass |\n";
    os << "|---|---|---|---|---|\n";
    for (const Assertion& a : r.assertions) {
        os << "| " << a.name << " | " << a.expected.dump() << " | " << a.actual.dump() << " | "
           << a.tol << " | " << (a.pass ? "yes" : "no") << " |\n";
    }
    os << "\n";
    return os.str();
}

} // namespace ivgeo
