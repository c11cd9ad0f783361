#ifndef IVGEO_CATALOG_HPP
#define IVGEO_CATALOG_HPP

#include <utility>

#include "ivgeo/ivf.hpp"
#include "ivgeo/manifold.hpp"

namespace ivgeo::catalog {

// Real-valued functions -------------------------------------------------

/// On the positive reals: 1 for x <= 1, -ln(x) beyond. Convex at x = 1 but
/// with a divergent one-sided slope there.
RealFn preal_log_cap();

/// On the line: 0 for x <= 0, -x beyond (the derived direction function of
/// plateau_drop at 0).
RealFn step_down();

/// On the line: 1 for x <= 0, -x + 1 beyond. Convex only at 0.
RealFn plateau_drop();

/// On the cylinder chart (theta, z): z^2 + z + 1 on the vertical line
/// theta = 0, exp(sin^2 theta) on the z = 0 circle.
RealFn cylinder_piecewise();

/// On the circle: ln((theta - pi/2)^2 + e).
RealFn circle_log_bump();

/// On the circle: theta^2.
RealFn circle_theta_sq();

/// On the circle: (theta - pi/2)^2.
RealFn circle_offset_sq();

// Interval-valued functions ---------------------------------------------

/// <1, (theta - pi/2)^2> on the circle.
Ivf circle_unit_band();

/// <x^2, 1> on the line.
Ivf parabola_unit_band();

/// <ln det, (ln det)^2> on the spd2 cone.
Ivf spd_logdet_band();

/// <theta^2, ln((theta - pi/2)^2 + e)> on the circle.
Ivf circle_noninversion();

// Two-track curve restrictions ------------------------------------------

/// Width branches theta / pi - theta along the given circle geodesic.
TrackedCurveFn circle_tracked_width(const Geodesic& g);

/// Lower/upper endpoint branches {0, det} / {ln det, (ln det)^2 + 1} along
/// the given spd2 geodesic.
std::pair<TrackedCurveFn, TrackedCurveFn> spd_tracked_endpoints(const Geodesic& g);

// Common base points -----------------------------------------------------

Point circle_i();                 // theta = pi/2
Point spd_half_identity();        // (1/2) I
Point spd_identity();             // I
Point cylinder_base();            // (theta, z) = (0, 0)

} // namespace ivgeo::catalog

#endif
