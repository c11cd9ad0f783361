#include "ivgeo/directional.hpp"

#include <cmath>
#include <vector>

namespace ivgeo {

namespace {

constexpr double kDivergenceCap = 1e8;

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

} // namespace

void StepSchedule::validate() const {
    if (!(s0 > 0.0) || !(rho > 0.0 && rho < 1.0) || steps < 4)
        throw EvaluationFailed("step schedule: need s0 > 0, rho in (0,1), steps >= 4");
    if (s0 * std::pow(rho, steps) <= 1e-14)
        throw EvaluationFailed("step schedule: final step below the noise floor");
}

double slope_real(const RealFn& f, const Geodesic& g, double s) {
    return (f.eval(g.eval(s)) - f.eval(g.eval(0.0))) / s;
}

Interval slope_gh(const Ivf& f, const Geodesic& g, double s) {
    return scale(1.0 / s, gh_diff(eval_ivf(f, g.eval(s)), eval_ivf(f, g.eval(0.0))));
}

LimitResult estimate_limit(const std::function<double(double)>& curve,
                           const StepSchedule& sched, double tol) {
    sched.validate();
    const int n = sched.steps;
    std::vector<double> q(n);
    double s = sched.s0;
    for (int k = 0; k < n; ++k, s *= sched.rho) {
        try {
            q[k] = curve(s);
        } catch (const std::exception& e) {
            throw EvaluationFailed(std::string("estimate_limit: curve failed at s=") +
                                   std::to_string(s) + ": " + e.what());
        }
        if (!std::isfinite(q[k])) {
            LimitResult r;
            r.tag = LimitResult::Tag::Diverged;
            r.sign = k > 0 ? sign_of(q[k - 1]) : sign_of(q[k]);
            return r;
        }
    }

    // Divergence scan: a c/s-type blow-up grows by ~1/rho per step, while a
    // convergent sequence has ratio -> 1. Require five consecutive
    // same-sign growth steps either past the cap or through the end of the
    // schedule.
    const double growth = 1.0 + 0.5 * (1.0 / sched.rho - 1.0);
    int streak = 0;
    for (int k = 1; k < n; ++k) {
        const bool growing = sign_of(q[k]) != 0 && sign_of(q[k]) == sign_of(q[k - 1]) &&
                             std::abs(q[k]) >= growth * std::abs(q[k - 1]);
        streak = growing ? streak + 1 : 0;
        if (streak >= 4 && (std::abs(q[k]) > kDivergenceCap || k == n - 1)) {
            LimitResult r;
            r.tag = LimitResult::Tag::Diverged;
            r.sign = sign_of(q[k]);
            return r;
        }
    }

    // One Richardson level: q(s) = L + a*s + O(s^2) upgrades to O(s^2).
    std::vector<double> ex(n - 1);
    for (int k = 0; k + 1 < n; ++k)
        ex[k] = (q[k + 1] - sched.rho * q[k]) / (1.0 - sched.rho);

    const double r1 = std::abs(ex[n - 2] - ex[n - 3]);
    const double r2 = std::abs(ex[n - 3] - ex[n - 4]);
    LimitResult r;
    r.last = ex[n - 2];
    r.prev = ex[n - 3];
    if (r1 <= tol && r2 <= tol) {
        r.tag = LimitResult::Tag::Converged;
        r.value = ex[n - 2];
        r.residual = r1;
    } else {
        r.tag = LimitResult::Tag::NoLimit;
    }
    return r;
}

LimitResult real_directional_derivative(const RealFn& f, const Geodesic& g,
                                        const StepSchedule& sched, double tol) {
    const double base = f.eval(g.eval(0.0));
    return estimate_limit([&](double s) { return (f.eval(g.eval(s)) - base) / s; }, sched, tol);
}

GhDerivResult gh_directional_derivative(const Ivf& f, const Geodesic& g,
                                        const StepSchedule& sched, double tol) {
    const Point x = g.eval(0.0);
    const double c0 = f.center.eval(x);
    const double w0 = f.width.eval(x);

    GhDerivResult r;
    r.center = estimate_limit([&](double s) { return (f.center.eval(g.eval(s)) - c0) / s; },
                              sched, tol);
    r.width_abs = estimate_limit(
        [&](double s) { return std::abs(f.width.eval(g.eval(s)) - w0) / s; }, sched, tol);
    r.width_signed = estimate_limit(
        [&](double s) { return (f.width.eval(g.eval(s)) - w0) / s; }, sched, tol);

    if (r.center.tag == LimitResult::Tag::Diverged) {
        r.tag = GhDerivResult::Tag::CenterDiverged;
    } else if (r.center.converged() && r.width_abs.converged()) {
        r.tag = GhDerivResult::Tag::Converged;
        // the width-channel limit of nonnegative quotients may extrapolate
        // to a tiny negative number; clamp within tolerance
        double w = r.width_abs.value;
        if (w < 0.0 && w >= -tol) w = 0.0;
        r.value = Interval::from_cw(r.center.value, w);
    } else if (r.center.converged()) {
        r.tag = GhDerivResult::Tag::WidthChannelNoLimit;
    } else {
        r.tag = GhDerivResult::Tag::NoLimit;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Two-track analysis

namespace {

TrackedChannel channel_limits(const std::function<double(Track, double)>& slope,
                              const StepSchedule& sched, double tol) {
    TrackedChannel c;
    c.rational = estimate_limit([&](double s) { return slope(Track::Rational, s); }, sched, tol);
    c.irrational =
        estimate_limit([&](double s) { return slope(Track::Irrational, s); }, sched, tol);
    if (c.rational.converged() && c.irrational.converged() &&
        std::abs(c.rational.value - c.irrational.value) <= tol) {
        c.exists = true;
        c.value = c.rational.value;
    }
    return c;
}

TrackedGh gh_on_track(Track t, const std::function<double(Track, double)>& center_slope,
                      const std::function<double(Track, double)>& width_slope,
                      const StepSchedule& sched, double tol) {
    TrackedGh g;
    g.center = estimate_limit([&](double s) { return center_slope(t, s); }, sched, tol);
    g.width_abs =
        estimate_limit([&](double s) { return std::abs(width_slope(t, s)); }, sched, tol);
    if (g.center.converged() && g.width_abs.converged()) {
        g.ok = true;
        double w = g.width_abs.value;
        if (w < 0.0 && w >= -tol) w = 0.0;
        g.value = Interval::from_cw(g.center.value, w);
    }
    return g;
}

} // namespace

TrackedDerivReport tracked_derivative(const TrackedCurveFn& first, const TrackedCurveFn& second,
                                      ChannelKind kind, const StepSchedule& sched, double tol) {
    // channel values along the curve; the two branches agree at s = 0
    auto center_val = [&](Track t, double s) {
        return kind == ChannelKind::CenterWidth ? first(t, s)
                                                : 0.5 * (first(t, s) + second(t, s));
    };
    auto width_val = [&](Track t, double s) {
        return kind == ChannelKind::CenterWidth ? second(t, s)
                                                : 0.5 * (second(t, s) - first(t, s));
    };
    auto lower_val = [&](Track t, double s) {
        return kind == ChannelKind::LowerUpper ? first(t, s) : first(t, s) - second(t, s);
    };
    auto upper_val = [&](Track t, double s) {
        return kind == ChannelKind::LowerUpper ? second(t, s) : first(t, s) + second(t, s);
    };

    const double c0 = center_val(Track::Rational, 0.0);
    const double w0 = width_val(Track::Rational, 0.0);
    const double l0 = lower_val(Track::Rational, 0.0);
    const double u0 = upper_val(Track::Rational, 0.0);

    auto center_slope = [&](Track t, double s) { return (center_val(t, s) - c0) / s; };
    auto width_slope = [&](Track t, double s) { return (width_val(t, s) - w0) / s; };
    auto lower_slope = [&](Track t, double s) { return (lower_val(t, s) - l0) / s; };
    auto upper_slope = [&](Track t, double s) { return (upper_val(t, s) - u0) / s; };

    TrackedDerivReport rep;
    rep.center = channel_limits(center_slope, sched, tol);
    rep.width = channel_limits(width_slope, sched, tol);
    rep.lower = channel_limits(lower_slope, sched, tol);
    rep.upper = channel_limits(upper_slope, sched, tol);

    rep.gh_rational = gh_on_track(Track::Rational, center_slope, width_slope, sched, tol);
    rep.gh_irrational = gh_on_track(Track::Irrational, center_slope, width_slope, sched, tol);
    if (rep.gh_rational.ok && rep.gh_irrational.ok &&
        rep.gh_rational.value.approx_equal(rep.gh_irrational.value, tol)) {
        rep.gh_exists = true;
        rep.gh = rep.gh_rational.value;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Derivative algebra checks

Verdict homogeneity_check(const std::function<GhDerivResult(const Tangent&)>& deriv_at,
                          const Tangent& v, std::span<const double> lambdas, double tol) {
    const GhDerivResult base = deriv_at(v);
    if (!base.converged()) throw DerivativeMissing("homogeneity_check: derivative at v missing");
    for (double lam : lambdas) {
        const GhDerivResult scaled = deriv_at(scale_tangent(v, lam));
        if (!scaled.converged())
            throw DerivativeMissing("homogeneity_check: derivative at lambda*v missing");
        const Interval expected = scale(lam, base.value);
        if (hausdorff(scaled.value, expected) > tol) {
            Witness w;
            w.s = lam;
            w.lhs = scaled.value;
            w.rhs = expected;
            return Verdict::violation(std::move(w));
        }
    }
    return Verdict::ok();
}

Verdict homogeneity_check_real(const std::function<LimitResult(const Tangent&)>& deriv_at,
                               const Tangent& v, std::span<const double> lambdas, double tol) {
    const LimitResult base = deriv_at(v);
    if (!base.converged())
        throw DerivativeMissing("homogeneity_check_real: derivative at v missing");
    for (double lam : lambdas) {
        const LimitResult scaled = deriv_at(scale_tangent(v, lam));
        if (!scaled.converged())
            throw DerivativeMissing("homogeneity_check_real: derivative at lambda*v missing");
        if (std::abs(scaled.value - lam * base.value) > tol) {
            Witness w;
            w.s = lam;
            w.lhs = Interval::from_cw(scaled.value, 0.0);
            w.rhs = Interval::from_cw(lam * base.value, 0.0);
            return Verdict::violation(std::move(w));
        }
    }
    return Verdict::ok();
}

Verdict linearity_check(const RealFn& f, const RealFn& g, double a1, double a2,
                        const Geodesic& geo, const StepSchedule& sched, double tol) {
    const LimitResult df = real_directional_derivative(f, geo, sched, tol);
    const LimitResult dg = real_directional_derivative(g, geo, sched, tol);
    if (!df.converged() || !dg.converged())
        throw DerivativeMissing("linearity_check: component derivative missing");
    const LimitResult dc = real_directional_derivative(combine(f, g, a1, a2), geo, sched, tol);
    if (!dc.converged())
        throw DerivativeMissing("linearity_check: combined derivative missing");
    const double expected = a1 * df.value + a2 * dg.value;
    if (std::abs(dc.value - expected) > tol) {
        Witness w;
        w.lhs = Interval::from_cw(dc.value, 0.0);
        w.rhs = Interval::from_cw(expected, 0.0);
        return Verdict::violation(std::move(w));
    }
    return Verdict::ok();
}

} // namespace ivgeo
