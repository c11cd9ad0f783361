#ifndef IVGEO_CONVEXITY_HPP
#define IVGEO_CONVEXITY_HPP

#include <span>
#include <utility>
#include <vector>

#include "ivgeo/directional.hpp"
#include "ivgeo/ivf.hpp"
#include "ivgeo/verdict.hpp"

namespace ivgeo {

/// Finite family of geodesics from x0 to x, standing in for "all geodesics".
/// On the circle both arc orientations are produced.
using SegmentFactory = std::function<std::vector<Geodesic>(const Point& x0, const Point& x)>;

SegmentFactory default_segment_factory(const ManifoldId& m);

struct SampleGrid {
    std::vector<Point> targets;
    std::vector<double> s_params; // strictly inside (0, 1)
    double tol = 1e-9;
};

/// theta in {0, pi/8, ..., 2*pi} by default; s in {0.1, ..., 0.9}.
SampleGrid default_circle_grid(int theta_count = 17, int s_count = 9, double tol = 1e-9);
std::vector<double> default_s_params(int s_count = 9);

struct DerivConfig {
    StepSchedule sched;
    double tol = 1e-6;
};

/// All checkers are falsifiers: HoldsOnSamples is evidence, not proof, and
/// the returned witness is the first violation in deterministic grid order.

Verdict convex_at(const RealFn& f, const Point& x0, const SampleGrid& grid,
                  const SegmentFactory& segs);

Verdict convex_on(const RealFn& f, std::span<const std::pair<Point, Point>> pairs,
                  std::span<const double> s_params, double tol, const SegmentFactory& segs);

Verdict cw_convex_at(const Ivf& f, const Point& x0, const SampleGrid& grid,
                     const SegmentFactory& segs);

Verdict monotone_q_check(const RealFn& f, const Point& x0, const Geodesic& geo,
                         std::span<const double> s_grid, double tol);

Verdict monotone_q_check(const Ivf& f, const Point& x0, const Geodesic& geo,
                         std::span<const double> s_grid, double tol);

Verdict width_monotone_check(const Ivf& f, const Geodesic& geo, std::span<const double> s_grid,
                             double tol);

Verdict first_order_check_real(const RealFn& f, const Point& x0, const SampleGrid& grid,
                               const SegmentFactory& segs, const DerivConfig& cfg);

Verdict first_order_check_ivf(const Ivf& f, const Point& x0, const SampleGrid& grid,
                              const SegmentFactory& segs, const DerivConfig& cfg);

} // namespace ivgeo

#endif
