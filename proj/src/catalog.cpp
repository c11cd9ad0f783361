#include "ivgeo/catalog.hpp"

#include <cmath>

namespace ivgeo::catalog {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kE = 2.71828182845904523536028747135266250;
constexpr double kAxisEps = 1e-12;

double theta_of(const Point& p) { return p.coords[0]; }
double logdet(const Point& p) { return std::log(det2(point_mat(p))); }
} // namespace

RealFn preal_log_cap() {
    return RealFn{positive_reals(), [](const Point& p) {
                      const double x = p.coords[0];
                      return x <= 1.0 ? 1.0 : -std::log(x);
                  }};
}

RealFn step_down() {
    return RealFn{euclidean(1), [](const Point& p) {
                      const double x = p.coords[0];
                      return x <= 0.0 ? 0.0 : -x;
                  }};
}

RealFn plateau_drop() {
    return RealFn{euclidean(1), [](const Point& p) {
                      const double x = p.coords[0];
                      return x <= 0.0 ? 1.0 : -x + 1.0;
                  }};
}

RealFn cylinder_piecewise() {
    return RealFn{cylinder(), [](const Point& p) {
                      const double theta = p.coords[0], z = p.coords[1];
                      const bool on_axis_line =
                          std::abs(theta) <= kAxisEps || std::abs(theta - 2.0 * kPi) <= kAxisEps;
                      if (on_axis_line) return z * z + z + 1.0;
                      if (std::abs(z) <= kAxisEps) {
                          const double st = std::sin(theta);
                          return std::exp(st * st); // exp(1 - cos^2 theta)
                      }
                      throw OffManifold("cylinder_piecewise: point outside the two axis sets");
                  }};
}

RealFn circle_log_bump() {
    return RealFn{circle(), [](const Point& p) {
                      const double u = theta_of(p) - kPi / 2.0;
                      return std::log(u * u + kE);
                  }};
}

RealFn circle_theta_sq() {
    return RealFn{circle(), [](const Point& p) {
                      const double t = theta_of(p);
                      return t * t;
                  }};
}

RealFn circle_offset_sq() {
    return RealFn{circle(), [](const Point& p) {
                      const double u = theta_of(p) - kPi / 2.0;
                      return u * u;
                  }};
}

Ivf circle_unit_band() {
    return Ivf{circle(), RealFn{circle(), [](const Point&) { return 1.0; }}, circle_offset_sq()};
}

Ivf parabola_unit_band() {
    return Ivf{euclidean(1),
               RealFn{euclidean(1),
                      [](const Point& p) { return p.coords[0] * p.coords[0]; }},
               RealFn{euclidean(1), [](const Point&) { return 1.0; }}};
}

Ivf spd_logdet_band() {
    return Ivf{spd2(), RealFn{spd2(), [](const Point& p) { return logdet(p); }},
               RealFn{spd2(), [](const Point& p) {
                          const double l = logdet(p);
                          return l * l;
                      }}};
}

Ivf circle_noninversion() {
    return Ivf{circle(), circle_theta_sq(), circle_log_bump()};
}

TrackedCurveFn circle_tracked_width(const Geodesic& g) {
    const RealFn rational{circle(), [](const Point& p) { return theta_of(p); }};
    const RealFn irrational{circle(), [](const Point& p) { return kPi - theta_of(p); }};
    return make_tracked(rational, irrational, g);
}

std::pair<TrackedCurveFn, TrackedCurveFn> spd_tracked_endpoints(const Geodesic& g) {
    const RealFn lower_rat{spd2(), [](const Point&) { return 0.0; }};
    const RealFn lower_irr{spd2(), [](const Point& p) { return logdet(p); }};
    const RealFn upper_rat{spd2(), [](const Point& p) { return det2(point_mat(p)); }};
    const RealFn upper_irr{spd2(), [](const Point& p) {
                               const double l = logdet(p);
                               return l * l + 1.0;
                           }};
    return {make_tracked(lower_rat, lower_irr, g), make_tracked(upper_rat, upper_irr, g)};
}

Point circle_i() { return circle_point(kPi / 2.0); }
Point spd_half_identity() { return spd_point(Mat2::identity() * 0.5); }
Point spd_identity() { return spd_point(Mat2::identity()); }
Point cylinder_base() { return cylinder_point(0.0, 0.0); }

} // namespace ivgeo::catalog
