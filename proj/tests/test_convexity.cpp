#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ivgeo/catalog.hpp"
#include "ivgeo/convexity.hpp"

using namespace ivgeo;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const DerivConfig kCfg{};

// one geodesic per target: the chart-linear circle segment
SegmentFactory chart_only() {
    return [](const Point& x0, const Point& x) {
        return std::vector<Geodesic>{geodesic_segment(circle(), x0, x)};
    };
}

} // namespace

TEST_CASE("default grids") {
    const SampleGrid g = default_circle_grid();
    REQUIRE(g.targets.size() == 17);
    CHECK(g.targets.front().coords[0] == doctest::Approx(0.0));
    CHECK(g.targets.back().coords[0] == doctest::Approx(2.0 * kPi));
    bool has_half = false;
    for (double s : g.s_params) {
        CHECK(s > 0.0);
        CHECK(s < 1.0);
        has_half = has_half || s == 0.5;
    }
    CHECK(has_half); // s = 1/2 is always sampled
    // the circle factory produces both arc orientations
    const auto segs = default_segment_factory(circle());
    CHECK(segs(circle_point(kPi / 2.0), circle_point(0.0)).size() == 2);
    CHECK(segs(circle_point(1.0), circle_point(1.0)).size() == 1);
}

TEST_CASE("convex functions pass, with soundness of any witness") {
    // x^2 on the line is convex everywhere
    const RealFn sq{euclidean(1), [](const Point& p) { return p.coords[0] * p.coords[0]; }};
    SampleGrid grid;
    for (double y : {-3.0, -1.0, 0.5, 2.0}) grid.targets.push_back(euclidean_point({y}));
    grid.s_params = default_s_params();
    CHECK(convex_at(sq, euclidean_point({0.0}), grid, default_segment_factory(euclidean(1)))
              .holds);
}

TEST_CASE("violation witnesses re-evaluate exactly as reported") {
    const RealFn f = catalog::circle_log_bump();
    const Point x0 = catalog::circle_i();
    const SampleGrid grid = default_circle_grid();
    const Verdict v = convex_at(f, x0, grid, default_segment_factory(circle()));
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    const Witness& w = *v.witness;
    // independent re-evaluation: f(gamma(s)) > (1-s) f(x0) + s f(target)
    const double lhs = w.lhs.center();
    const double rhs = w.rhs.center();
    CHECK(lhs > rhs + grid.tol);
    const double expected_rhs =
        (1.0 - w.s) * f.eval(x0) + w.s * f.eval(*w.target);
    CHECK(rhs == doctest::Approx(expected_rhs).epsilon(1e-12));
}

TEST_CASE("monotone refinement: violations survive grid refinement") {
    const RealFn f = catalog::circle_log_bump();
    const Point x0 = catalog::circle_i();
    const auto segs = default_segment_factory(circle());
    const SampleGrid coarse = default_circle_grid(17, 9);
    const Verdict v1 = convex_at(f, x0, coarse, segs);
    REQUIRE_FALSE(v1.holds);
    // supergrid: double the target and s resolution (33 thetas contain the 17)
    const SampleGrid fine = default_circle_grid(33, 19);
    const Verdict v2 = convex_at(f, x0, fine, segs);
    CHECK_FALSE(v2.holds);
}

TEST_CASE("channel consistency of cw_convex_at") {
    const auto segs = chart_only();
    const SampleGrid grid = default_circle_grid();
    const Point x0 = catalog::circle_i();
    const std::vector<Ivf> fns = {catalog::circle_unit_band(), catalog::circle_noninversion()};
    for (const Ivf& f : fns) {
        const bool cw = cw_convex_at(f, x0, grid, segs).holds;
        const bool both = convex_at(f.center, x0, grid, segs).holds &&
                          convex_at(f.width, x0, grid, segs).holds;
        CHECK(cw == both);
    }
}

TEST_CASE("theorem chain: cw-convex + monotone width implies the first-order bound") {
    // catalog sweep on fixed base points / geodesic families
    struct Entry {
        Ivf f;
        Point x0;
        SampleGrid grid;
        SegmentFactory segs;
    };
    std::vector<Entry> entries;
    {
        SampleGrid g;
        for (double y : {-2.0, -1.0, 1.0, 2.0}) g.targets.push_back(euclidean_point({y}));
        g.s_params = default_s_params();
        entries.push_back({catalog::parabola_unit_band(), euclidean_point({0.0}), g,
                           default_segment_factory(euclidean(1))});
    }
    {
        SampleGrid g;
        g.targets = {spd_point(Mat2::identity() * 2.0), spd_point(Mat2::diag(2.0, 3.0)),
                     spd_point(Mat2::identity() * 4.0)};
        g.s_params = default_s_params();
        entries.push_back({catalog::spd_logdet_band(), catalog::spd_identity(), g,
                           default_segment_factory(spd2())});
    }
    entries.push_back({catalog::circle_unit_band(), catalog::circle_i(), default_circle_grid(),
                       chart_only()});
    entries.push_back({catalog::circle_noninversion(), catalog::circle_i(),
                       default_circle_grid(), chart_only()});

    for (const Entry& e : entries) {
        const bool cw = cw_convex_at(e.f, e.x0, e.grid, e.segs).holds;
        bool width_ok = true;
        for (const Point& x : e.grid.targets)
            for (const Geodesic& g : e.segs(e.x0, x))
                width_ok = width_ok &&
                           width_monotone_check(e.f, g, e.grid.s_params, 1e-9).holds;
        if (cw && width_ok)
            CHECK(first_order_check_ivf(e.f, e.x0, e.grid, e.segs, kCfg).holds);
    }
}

TEST_CASE("q monotonicity for convex slopes, with a counterexample") {
    const std::vector<double> s_grid = default_s_params();
    const RealFn sq{euclidean(1), [](const Point& p) { return p.coords[0] * p.coords[0]; }};
    const Point zero = euclidean_point({0.0});
    const Geodesic g = geodesic_from_velocity(euclidean(1), zero, tangent_at(zero, {1.0}));
    CHECK(monotone_q_check(sq, zero, g, s_grid, 1e-12).holds);

    // concave function: slopes decrease
    const RealFn root{euclidean(1), [](const Point& p) { return std::sqrt(p.coords[0] + 1.0); }};
    const Verdict v = monotone_q_check(root, zero, g, s_grid, 1e-12);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->lhs.center() > v.witness->rhs.center());
}

TEST_CASE("width monotone check flags decreasing widths") {
    const Ivf f = catalog::spd_logdet_band();
    const Geodesic down =
        geodesic_segment(spd2(), catalog::spd_half_identity(), catalog::spd_identity());
    CHECK_FALSE(width_monotone_check(f, down, default_s_params(), 1e-12).holds);
    const Geodesic up =
        geodesic_segment(spd2(), catalog::spd_identity(), spd_point(Mat2::identity() * 2.0));
    CHECK(width_monotone_check(f, up, default_s_params(), 1e-12).holds);
}

TEST_CASE("non-inversion pair from the catalog") {
    const SampleGrid grid = default_circle_grid();
    const Point x0 = catalog::circle_i();

    // real: first-order bound holds, convexity fails
    const RealFn fr = catalog::circle_log_bump();
    CHECK(first_order_check_real(fr, x0, grid, chart_only(), kCfg).holds);
    CHECK_FALSE(convex_at(fr, x0, grid, default_segment_factory(circle())).holds);

    // interval: first-order min-order bound holds, cw-convexity fails in the width channel
    const Ivf fi = catalog::circle_noninversion();
    CHECK(first_order_check_ivf(fi, x0, grid, chart_only(), kCfg).holds);
    const Verdict v = cw_convex_at(fi, x0, grid, default_segment_factory(circle()));
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->channel == "width");
}

TEST_CASE("first-order checks raise when the derivative is missing") {
    SampleGrid grid;
    grid.targets = {preal_point(2.0)};
    grid.s_params = default_s_params();
    CHECK_THROWS_AS(first_order_check_real(catalog::preal_log_cap(), preal_point(1.0), grid,
                                           default_segment_factory(positive_reals()), kCfg),
                    DerivativeMissing);
}

TEST_CASE("first-order violation witness is sound") {
    const Ivf f = catalog::spd_logdet_band();
    const Point x = catalog::spd_half_identity();
    SampleGrid grid;
    grid.targets = {catalog::spd_identity()};
    grid.s_params = default_s_params();
    const Verdict v =
        first_order_check_ivf(f, x, grid, default_segment_factory(spd2()), kCfg);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    // re-check: Df >min f(target) gh- f(x)
    const Interval gap = gh_diff(eval_ivf(f, *v.witness->target), eval_ivf(f, x));
    CHECK(cmp_min_tol(v.witness->lhs, gap, kCfg.tol) == MinOrdering::Greater);
}
