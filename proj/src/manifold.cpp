#include "ivgeo/manifold.hpp"

#include <cmath>
#include <limits>

namespace ivgeo {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kEpsPd = 1e-10; // relative to the largest eigenvalue

double wrap_angle(double t) {
    if (t >= 0.0 && t <= kTwoPi) return t; // keep 2*pi distinct from 0
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

void check_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x)) throw OffManifold(std::string(what) + ": non-finite coordinate");
}

} // namespace

ManifoldId euclidean(int n) {
    if (n < 1) throw OffManifold("euclidean: dimension must be >= 1");
    return {ManifoldKind::Euclidean, n};
}
ManifoldId circle() { return {ManifoldKind::Circle, 1}; }
ManifoldId positive_reals() { return {ManifoldKind::PositiveReals, 1}; }
ManifoldId spd2() { return {ManifoldKind::Spd2, 1}; }
ManifoldId cylinder() { return {ManifoldKind::Cylinder, 1}; }

// ---------------------------------------------------------------------------
// Mat2

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::operator+(const Mat2& o) const {
    return {a + o.a, b + o.b, c + o.c, d + o.d};
}

bool Mat2::symmetric(double tol) const {
    return std::abs(b - c) <= tol * (1.0 + norm());
}

double Mat2::norm() const {
    return std::sqrt(a * a + b * b + c * c + d * d);
}

double det2(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Eig2 spd2_eig(const Mat2& m) {
    if (!m.symmetric()) throw BadTangent("spd2_eig: matrix is not symmetric");
    const double p = m.a, q = 0.5 * (m.b + m.c), r = m.d;
    const double mean = 0.5 * (p + r);
    const double rad = std::sqrt(0.25 * (p - r) * (p - r) + q * q);
    Eig2 e;
    e.angle = (q == 0.0 && p >= r) ? 0.0 : 0.5 * std::atan2(2.0 * q, p - r);
    e.l1 = mean + rad;
    e.l2 = mean - rad;
    return e;
}

Mat2 spd2_fun(const Mat2& m, const std::function<double(double)>& f, bool require_positive) {
    const Eig2 e = spd2_eig(m);
    if (require_positive) {
        const double floor = kEpsPd * std::max(std::abs(e.l1), std::abs(e.l2));
        if (e.l1 <= floor || e.l2 <= floor)
            throw NotPositiveDefinite("spd2_fun: eigenvalue not positive");
    }
    const double ct = std::cos(e.angle), st = std::sin(e.angle);
    const double f1 = f(e.l1), f2 = f(e.l2);
    // R diag(f1,f2) R^T with R = [ct -st; st ct]
    return {f1 * ct * ct + f2 * st * st, (f1 - f2) * ct * st,
            (f1 - f2) * ct * st, f1 * st * st + f2 * ct * ct};
}

Mat2 spd2_log(const Mat2& m) {
    return spd2_fun(m, [](double x) { return std::log(x); }, true);
}
Mat2 spd2_sqrt(const Mat2& m) {
    return spd2_fun(m, [](double x) { return std::sqrt(x); }, true);
}
Mat2 spd2_inv_sqrt(const Mat2& m) {
    return spd2_fun(m, [](double x) { return 1.0 / std::sqrt(x); }, true);
}
Mat2 spd2_exp(const Mat2& m) {
    return spd2_fun(m, [](double x) { return std::exp(x); }, false);
}

// ---------------------------------------------------------------------------
// Points and tangents

Point euclidean_point(std::vector<double> coords) {
    Point p{euclidean(static_cast<int>(coords.size())), std::move(coords)};
    validate_point(p);
    return p;
}

Point circle_point(double theta) {
    Point p{circle(), {wrap_angle(theta)}};
    validate_point(p);
    return p;
}

Point preal_point(double x) {
    Point p{positive_reals(), {x}};
    validate_point(p);
    return p;
}

Point spd_point(const Mat2& m) {
    Point p{spd2(), {m.a, m.b, m.c, m.d}};
    validate_point(p);
    return p;
}

Point cylinder_point(double theta, double z) {
    Point p{cylinder(), {wrap_angle(theta), z}};
    validate_point(p);
    return p;
}

Mat2 point_mat(const Point& p) {
    if (p.manifold.kind != ManifoldKind::Spd2 || p.coords.size() != 4)
        throw OffManifold("point_mat: not an spd2 point");
    return {p.coords[0], p.coords[1], p.coords[2], p.coords[3]};
}

Mat2 tangent_mat(const Tangent& t) {
    if (t.manifold.kind != ManifoldKind::Spd2 || t.vec.size() != 4)
        throw BadTangent("tangent_mat: not an spd2 tangent");
    return {t.vec[0], t.vec[1], t.vec[2], t.vec[3]};
}

void validate_point(const Point& p) {
    check_finite(p.coords, "point");
    switch (p.manifold.kind) {
    case ManifoldKind::Euclidean:
        if (static_cast<int>(p.coords.size()) != p.manifold.dim)
            throw OffManifold("euclidean point: wrong dimension");
        break;
    case ManifoldKind::Circle:
        if (p.coords.size() != 1 || p.coords[0] < 0.0 || p.coords[0] > kTwoPi)
            throw OffManifold("circle point: angle outside [0, 2*pi]");
        break;
    case ManifoldKind::PositiveReals:
        if (p.coords.size() != 1 || p.coords[0] <= 0.0)
            throw OffManifold("positive-reals point: coordinate must be > 0");
        break;
    case ManifoldKind::Spd2: {
        if (p.coords.size() != 4) throw OffManifold("spd2 point: need 4 entries");
        const Mat2 m = {p.coords[0], p.coords[1], p.coords[2], p.coords[3]};
        if (!m.symmetric()) throw OffManifold("spd2 point: matrix not symmetric");
        const Eig2 e = spd2_eig(m);
        if (e.l2 <= kEpsPd * std::abs(e.l1))
            throw OffManifold("spd2 point: matrix not positive definite");
        break;
    }
    case ManifoldKind::Cylinder:
        if (p.coords.size() != 2 || p.coords[0] < 0.0 || p.coords[0] > kTwoPi)
            throw OffManifold("cylinder point: angle outside [0, 2*pi]");
        break;
    }
}

Tangent tangent_at(const Point& base, std::vector<double> vec) {
    validate_point(base);
    check_finite(vec, "tangent");
    if (vec.size() != base.coords.size())
        throw BadTangent("tangent: coordinate layout must match the base point");
    if (base.manifold.kind == ManifoldKind::Spd2) {
        const Mat2 v = {vec[0], vec[1], vec[2], vec[3]};
        if (!v.symmetric()) throw BadTangent("spd2 tangent: matrix not symmetric");
    }
    return Tangent{base.manifold, base, std::move(vec)};
}

Tangent scale_tangent(const Tangent& t, double k) {
    std::vector<double> v = t.vec;
    for (double& x : v) x *= k;
    return Tangent{t.manifold, t.base, std::move(v)};
}

// ---------------------------------------------------------------------------
// Geodesics

namespace {

Geodesic make_geodesic(const ManifoldId& m, const Point& base, const Tangent& vel,
                       double lo, double hi, std::function<Point(double)> f) {
    return Geodesic{m, base, vel, lo, hi, std::move(f)};
}

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

Geodesic geodesic_from_velocity(const ManifoldId& m, const Point& x, const Tangent& v) {
    validate_point(x);
    if (!(v.manifold == m) || !(x.manifold == m))
        throw BadTangent("geodesic_from_velocity: manifold mismatch");

    switch (m.kind) {
    case ManifoldKind::Euclidean: {
        const std::vector<double> x0 = x.coords, vv = v.vec;
        return make_geodesic(m, x, v, -kInf, kInf, [m, x0, vv](double s) {
            std::vector<double> c(x0.size());
            for (size_t i = 0; i < c.size(); ++i) c[i] = x0[i] + s * vv[i];
            return Point{m, std::move(c)};
        });
    }
    case ManifoldKind::Circle: {
        const double theta0 = x.coords[0], vc = v.vec[0];
        return make_geodesic(m, x, v, -kInf, kInf, [theta0, vc](double s) {
            return circle_point(theta0 - s * vc);
        });
    }
    case ManifoldKind::PositiveReals: {
        const double x0 = x.coords[0], vc = v.vec[0];
        return make_geodesic(m, x, v, -kInf, kInf, [x0, vc](double s) {
            return preal_point(x0 * std::exp((vc / x0) * s));
        });
    }
    case ManifoldKind::Spd2: {
        const Mat2 p = point_mat(x);
        const Mat2 vm = tangent_mat(v);
        const Mat2 sq = spd2_sqrt(p), isq = spd2_inv_sqrt(p);
        const Mat2 w = isq * vm * isq; // symmetric
        return make_geodesic(m, x, v, -kInf, kInf, [sq, w](double s) {
            return spd_point(sq * spd2_exp(w * s) * sq);
        });
    }
    case ManifoldKind::Cylinder: {
        const double vt = v.vec[0], vz = v.vec[1];
        if (vt != 0.0 && vz != 0.0)
            throw BadTangent("cylinder tangent: direction must be axis-aligned");
        const double theta0 = x.coords[0], z0 = x.coords[1];
        return make_geodesic(m, x, v, -kInf, kInf, [theta0, z0, vt, vz](double s) {
            return cylinder_point(theta0 + s * vt, z0 + s * vz);
        });
    }
    }
    throw OffManifold("geodesic_from_velocity: unknown manifold");
}

Geodesic geodesic_segment(const ManifoldId& m, const Point& x, const Point& y) {
    validate_point(x);
    validate_point(y);
    switch (m.kind) {
    case ManifoldKind::Euclidean: {
        std::vector<double> v(x.coords.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = y.coords[i] - x.coords[i];
        return geodesic_from_velocity(m, x, tangent_at(x, std::move(v)));
    }
    case ManifoldKind::Circle:
        return circle_segment(x, y.coords[0] - x.coords[0]);
    case ManifoldKind::PositiveReals: {
        const double v = x.coords[0] * std::log(y.coords[0] / x.coords[0]);
        return geodesic_from_velocity(m, x, tangent_at(x, {v}));
    }
    case ManifoldKind::Spd2: {
        const Mat2 p = point_mat(x), q = point_mat(y);
        const Mat2 sq = spd2_sqrt(p), isq = spd2_inv_sqrt(p);
        const Mat2 l = spd2_log(isq * q * isq);
        const Mat2 vel = sq * l * sq; // gamma'(0)
        return geodesic_from_velocity(m, x,
                                      tangent_at(x, {vel.a, 0.5 * (vel.b + vel.c),
                                                     0.5 * (vel.b + vel.c), vel.d}));
    }
    case ManifoldKind::Cylinder: {
        const double dt = y.coords[0] - x.coords[0], dz = y.coords[1] - x.coords[1];
        if (dt != 0.0 && dz != 0.0)
            throw BadTangent("cylinder segment: endpoints must share an axis");
        return geodesic_from_velocity(m, x, tangent_at(x, {dt, dz}));
    }
    }
    throw OffManifold("geodesic_segment: unknown manifold");
}

Geodesic circle_segment(const Point& x, double dtheta) {
    validate_point(x);
    if (x.manifold.kind != ManifoldKind::Circle)
        throw OffManifold("circle_segment: not a circle point");
    // chart velocity is -dtheta (see geodesic_from_velocity)
    return geodesic_from_velocity(circle(), x, tangent_at(x, {-dtheta}));
}

} // namespace ivgeo
