#ifndef IVGEO_DIRECTIONAL_HPP
#define IVGEO_DIRECTIONAL_HPP

#include <functional>
#include <span>

#include "ivgeo/interval.hpp"
#include "ivgeo/ivf.hpp"
#include "ivgeo/manifold.hpp"
#include "ivgeo/verdict.hpp"

namespace ivgeo {

struct EvaluationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DerivativeMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Geometric shrink schedule discretizing the one-sided limit s -> 0+.
struct StepSchedule {
    double s0 = 0.1;
    double rho = 0.5;
    int steps = 20;

    void validate() const;
};

struct LimitResult {
    enum class Tag { Converged, Diverged, NoLimit };
    Tag tag = Tag::NoLimit;
    double value = 0.0;    // Converged: extrapolated limit
    double residual = 0.0; // Converged: final extrapolation residual
    int sign = 0;          // Diverged: sign of the blow-up
    double last = 0.0;     // NoLimit evidence: last two estimates
    double prev = 0.0;

    bool converged() const { return tag == Tag::Converged; }
};

/// Difference quotient (f(gamma(s)) - f(gamma(0))) / s.
double slope_real(const RealFn& f, const Geodesic& g, double s);

/// Interval difference quotient (f(gamma(s)) gh- f(gamma(0))) / s.
Interval slope_gh(const Ivf& f, const Geodesic& g, double s);

/// One-sided limit estimate at 0+ from samples s_k = s0 * rho^k with one
/// level of Richardson extrapolation. Divergence is reported when the raw
/// values keep growing geometrically with a consistent sign through the end
/// of the schedule, or blow past the magnitude cap.
LimitResult estimate_limit(const std::function<double(double)>& curve,
                           const StepSchedule& sched, double tol);

LimitResult real_directional_derivative(const RealFn& f, const Geodesic& g,
                                        const StepSchedule& sched, double tol);

struct GhDerivResult {
    enum class Tag { Converged, CenterDiverged, WidthChannelNoLimit, NoLimit };
    Tag tag = Tag::NoLimit;
    Interval value;          // Converged: <center, |width slope|>
    LimitResult center;      // center-channel limit estimate
    LimitResult width_abs;   // limit of |f^w(gamma(s)) - f^w(x)| / s
    LimitResult width_signed; // signed width slope, when it converges

    bool converged() const { return tag == Tag::Converged; }
};

GhDerivResult gh_directional_derivative(const Ivf& f, const Geodesic& g,
                                        const StepSchedule& sched, double tol);

// ---------------------------------------------------------------------------
// Two-track analysis

enum class ChannelKind { CenterWidth, LowerUpper };

struct TrackedChannel {
    LimitResult rational;
    LimitResult irrational;
    bool exists = false; // both tracks converge to the same value
    double value = 0.0;  // when exists
};

struct TrackedGh {
    LimitResult center;
    LimitResult width_abs;
    bool ok = false;
    Interval value;
};

struct TrackedDerivReport {
    TrackedChannel center, width, lower, upper; // signed channel slopes
    TrackedGh gh_rational, gh_irrational;
    bool gh_exists = false;
    Interval gh; // when gh_exists

    bool center_exists() const { return center.exists; }
    bool width_exists() const { return width.exists; }
    bool lower_exists() const { return lower.exists; }
    bool upper_exists() const { return upper.exists; }
};

/// Per-track directional analysis of a two-track curve pair. `first` and
/// `second` are the (center, width) or (lower, upper) channel values along
/// the geodesic, per `kind`.
TrackedDerivReport tracked_derivative(const TrackedCurveFn& first, const TrackedCurveFn& second,
                                      ChannelKind kind, const StepSchedule& sched, double tol);

// ---------------------------------------------------------------------------
// Derivative algebra checks

Verdict homogeneity_check(const std::function<GhDerivResult(const Tangent&)>& deriv_at,
                          const Tangent& v, std::span<const double> lambdas, double tol);

Verdict homogeneity_check_real(const std::function<LimitResult(const Tangent&)>& deriv_at,
                               const Tangent& v, std::span<const double> lambdas, double tol);

Verdict linearity_check(const RealFn& f, const RealFn& g, double a1, double a2,
                        const Geodesic& geo, const StepSchedule& sched, double tol);

} // namespace ivgeo

#endif
