#ifndef IVGEO_IVF_HPP
#define IVGEO_IVF_HPP

#include <functional>

#include "ivgeo/interval.hpp"
#include "ivgeo/manifold.hpp"

namespace ivgeo {

/// Real-valued function on a manifold. Bodies must be side-effect free;
/// evaluation is pure.
struct RealFn {
    ManifoldId domain;
    std::function<double(const Point&)> eval;
};

/// Interval-valued function stored as center and half-width channels.
/// Width nonnegativity is checked at evaluation, not construction.
struct Ivf {
    ManifoldId domain;
    RealFn center;
    RealFn width;
};

Interval eval_ivf(const Ivf& f, const Point& p);

RealFn lower_fn(const Ivf& f); // f^l = f^c - f^w
RealFn upper_fn(const Ivf& f); // f^u = f^c + f^w
RealFn combine(const RealFn& f, const RealFn& g, double a1, double a2);

std::function<double(double)> compose(const RealFn& f, const Geodesic& g);
std::function<Interval(double)> compose(const Ivf& f, const Geodesic& g);

/// Branch of a two-track (rational / irrational parameter) curve function.
/// The branch is always selected by an explicit tag; float rationality is
/// never tested.
enum class Track { Rational, Irrational };

using TrackedCurveFn = std::function<double(Track, double)>;

/// Restriction of a two-branch function to a fixed geodesic.
TrackedCurveFn make_tracked(const RealFn& rational_def, const RealFn& irrational_def,
                            const Geodesic& g);

} // namespace ivgeo

#endif
