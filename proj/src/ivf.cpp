#include "ivgeo/ivf.hpp"

namespace ivgeo {

Interval eval_ivf(const Ivf& f, const Point& p) {
    if (!(p.manifold == f.domain)) throw OffManifold("eval_ivf: point off the function domain");
    const double c = f.center.eval(p);
    const double w = f.width.eval(p);
    if (w < 0.0) throw NegativeWidth("eval_ivf: width function is negative at this point");
    return Interval::from_cw(c, w);
}

RealFn lower_fn(const Ivf& f) {
    return RealFn{f.domain, [f](const Point& p) { return f.center.eval(p) - f.width.eval(p); }};
}

RealFn upper_fn(const Ivf& f) {
    return RealFn{f.domain, [f](const Point& p) { return f.center.eval(p) + f.width.eval(p); }};
}

RealFn combine(const RealFn& f, const RealFn& g, double a1, double a2) {
    return RealFn{f.domain,
                  [f, g, a1, a2](const Point& p) { return a1 * f.eval(p) + a2 * g.eval(p); }};
}

std::function<double(double)> compose(const RealFn& f, const Geodesic& g) {
    if (!(g.manifold == f.domain)) throw OffManifold("compose: geodesic off the function domain");
    return [f, g](double s) { return f.eval(g.eval(s)); };
}

std::function<Interval(double)> compose(const Ivf& f, const Geodesic& g) {
    if (!(g.manifold == f.domain)) throw OffManifold("compose: geodesic off the function domain");
    return [f, g](double s) { return eval_ivf(f, g.eval(s)); };
}

TrackedCurveFn make_tracked(const RealFn& rational_def, const RealFn& irrational_def,
                            const Geodesic& g) {
    return [rational_def, irrational_def, g](Track t, double s) {
        const Point p = g.eval(s);
        return t == Track::Rational ? rational_def.eval(p) : irrational_def.eval(p);
    };
}

} // namespace ivgeo
