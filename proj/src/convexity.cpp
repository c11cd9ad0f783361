#include "ivgeo/convexity.hpp"

#include <cmath>

namespace ivgeo {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Witness real_witness(const Point& target, double s, double lhs, double rhs,
                     std::string channel = "") {
    Witness w;
    w.target = target;
    w.s = s;
    w.lhs = Interval::from_cw(lhs, 0.0);
    w.rhs = Interval::from_cw(rhs, 0.0);
    w.channel = std::move(channel);
    return w;
}

Verdict convex_along(const RealFn& f, const Point& x0, const Point& target,
                     std::span<const double> s_params, double tol, const SegmentFactory& segs,
                     const std::string& channel) {
    const double f0 = f.eval(x0);
    for (const Geodesic& g : segs(x0, target)) {
        const double f1 = f.eval(g.eval(1.0));
        for (double s : s_params) {
            const double lhs = f.eval(g.eval(s));
            const double rhs = (1.0 - s) * f0 + s * f1;
            if (lhs > rhs + tol) {
                Witness w = real_witness(g.eval(1.0), s, lhs, rhs, channel);
                return Verdict::violation(std::move(w));
            }
        }
    }
    return Verdict::ok();
}

} // namespace

SegmentFactory default_segment_factory(const ManifoldId& m) {
    if (m.kind == ManifoldKind::Circle) {
        return [](const Point& x0, const Point& x) {
            const double d = x.coords[0] - x0.coords[0];
            std::vector<Geodesic> out;
            out.push_back(circle_segment(x0, d));
            if (d != 0.0) out.push_back(circle_segment(x0, d - (d > 0.0 ? 1.0 : -1.0) * 2.0 * kPi));
            return out;
        };
    }
    return [m](const Point& x0, const Point& x) {
        return std::vector<Geodesic>{geodesic_segment(m, x0, x)};
    };
}

std::vector<double> default_s_params(int s_count) {
    std::vector<double> s(s_count);
    for (int i = 0; i < s_count; ++i) s[i] = static_cast<double>(i + 1) / (s_count + 1);
    bool has_half = false;
    for (double v : s) has_half = has_half || v == 0.5;
    if (!has_half) s.push_back(0.5);
    return s;
}

SampleGrid default_circle_grid(int theta_count, int s_count, double tol) {
    SampleGrid g;
    g.tol = tol;
    for (int i = 0; i < theta_count; ++i)
        g.targets.push_back(circle_point(2.0 * kPi * i / (theta_count - 1)));
    g.s_params = default_s_params(s_count);
    return g;
}

Verdict convex_at(const RealFn& f, const Point& x0, const SampleGrid& grid,
                  const SegmentFactory& segs) {
    for (const Point& x : grid.targets) {
        Verdict v = convex_along(f, x0, x, grid.s_params, grid.tol, segs, "");
        if (!v.holds) return v;
    }
    return Verdict::ok();
}

Verdict convex_on(const RealFn& f, std::span<const std::pair<Point, Point>> pairs,
                  std::span<const double> s_params, double tol, const SegmentFactory& segs) {
    for (const auto& [x, y] : pairs) {
        Verdict v = convex_along(f, x, y, s_params, tol, segs, "");
        if (!v.holds) return v;
    }
    return Verdict::ok();
}

Verdict cw_convex_at(const Ivf& f, const Point& x0, const SampleGrid& grid,
                     const SegmentFactory& segs) {
    for (const Point& x : grid.targets) {
        Verdict c = convex_along(f.center, x0, x, grid.s_params, grid.tol, segs, "center");
        if (!c.holds) return c;
        Verdict w = convex_along(f.width, x0, x, grid.s_params, grid.tol, segs, "width");
        if (!w.holds) return w;
    }
    return Verdict::ok();
}

Verdict monotone_q_check(const RealFn& f, const Point& x0, const Geodesic& geo,
                         std::span<const double> s_grid, double tol) {
    const double f0 = f.eval(x0);
    double prev = 0.0;
    bool have_prev = false;
    for (double s : s_grid) {
        const double q = (f.eval(geo.eval(s)) - f0) / s;
        if (have_prev && prev > q + tol)
            return Verdict::violation(real_witness(geo.eval(1.0), s, prev, q, ""));
        prev = q;
        have_prev = true;
    }
    return Verdict::ok();
}

Verdict monotone_q_check(const Ivf& f, const Point& x0, const Geodesic& geo,
                         std::span<const double> s_grid, double tol) {
    const Interval f0 = eval_ivf(f, x0);
    Interval prev;
    bool have_prev = false;
    for (double s : s_grid) {
        const Interval q = scale(1.0 / s, gh_diff(eval_ivf(f, geo.eval(s)), f0));
        if (have_prev && cmp_min_tol(prev, q, tol) == MinOrdering::Greater) {
            Witness w;
            w.target = geo.eval(1.0);
            w.s = s;
            w.lhs = prev;
            w.rhs = q;
            return Verdict::violation(std::move(w));
        }
        prev = q;
        have_prev = true;
    }
    return Verdict::ok();
}

Verdict width_monotone_check(const Ivf& f, const Geodesic& geo, std::span<const double> s_grid,
                             double tol) {
    double prev = 0.0;
    bool have_prev = false;
    for (double s : s_grid) {
        const double w = f.width.eval(geo.eval(s));
        if (have_prev && prev > w + tol)
            return Verdict::violation(real_witness(geo.eval(1.0), s, prev, w, "width"));
        prev = w;
        have_prev = true;
    }
    return Verdict::ok();
}

Verdict first_order_check_real(const RealFn& f, const Point& x0, const SampleGrid& grid,
                               const SegmentFactory& segs, const DerivConfig& cfg) {
    const double f0 = f.eval(x0);
    for (const Point& x : grid.targets) {
        for (const Geodesic& g : segs(x0, x)) {
            const LimitResult d = real_directional_derivative(f, g, cfg.sched, cfg.tol);
            if (!d.converged())
                throw DerivativeMissing("first_order_check_real: derivative missing");
            const double gap = f.eval(g.eval(1.0)) - f0;
            if (gap < d.value - cfg.tol)
                return Verdict::violation(real_witness(g.eval(1.0), 1.0, d.value, gap, ""));
        }
    }
    return Verdict::ok();
}

Verdict first_order_check_ivf(const Ivf& f, const Point& x0, const SampleGrid& grid,
                              const SegmentFactory& segs, const DerivConfig& cfg) {
    const Interval f0 = eval_ivf(f, x0);
    for (const Point& x : grid.targets) {
        for (const Geodesic& g : segs(x0, x)) {
            const GhDerivResult d = gh_directional_derivative(f, g, cfg.sched, cfg.tol);
            if (!d.converged())
                throw DerivativeMissing("first_order_check_ivf: gH derivative missing");
            const Interval gap = gh_diff(eval_ivf(f, g.eval(1.0)), f0);
            if (cmp_min_tol(d.value, gap, cfg.tol) == MinOrdering::Greater) {
                Witness w;
                w.target = g.eval(1.0);
                w.s = 1.0;
                w.lhs = d.value;
                w.rhs = gap;
                return Verdict::violation(std::move(w));
            }
        }
    }
    return Verdict::ok();
}

} // namespace ivgeo
