#ifndef IVGEO_MANIFOLD_HPP
#define IVGEO_MANIFOLD_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace ivgeo {

struct OffManifold : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadTangent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPositiveDefinite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ManifoldKind { Euclidean, Circle, PositiveReals, Spd2, Cylinder };

struct ManifoldId {
    ManifoldKind kind = ManifoldKind::Euclidean;
    int dim = 1; // Euclidean only

    bool operator==(const ManifoldId& o) const {
        return kind == o.kind && (kind != ManifoldKind::Euclidean || dim == o.dim);
    }
};

ManifoldId euclidean(int n);
ManifoldId circle();
ManifoldId positive_reals();
ManifoldId spd2();
ManifoldId cylinder();

// ---------------------------------------------------------------------------
// 2x2 symmetric matrix helpers (row-major [a b; c d])

struct Mat2 {
    double a = 0, b = 0, c = 0, d = 0;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 diag(double x, double y) { return {x, 0, 0, y}; }
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator+(const Mat2& o) const;
    Mat2 operator*(double k) const { return {k * a, k * b, k * c, k * d}; }
    bool symmetric(double tol = 1e-9) const;
    double norm() const;
};

struct Eig2 {
    double l1 = 0;    // eigenvalue for eigenvector (cos t, sin t)
    double l2 = 0;    // eigenvalue for eigenvector (-sin t, cos t)
    double angle = 0; // rotation angle t
};

double det2(const Mat2& m);
Eig2 spd2_eig(const Mat2& m);
Mat2 spd2_fun(const Mat2& m, const std::function<double(double)>& f,
              bool require_positive = false);
Mat2 spd2_log(const Mat2& m);
Mat2 spd2_sqrt(const Mat2& m);
Mat2 spd2_inv_sqrt(const Mat2& m);
Mat2 spd2_exp(const Mat2& m);

// ---------------------------------------------------------------------------
// Points, tangents, geodesics

struct Point {
    ManifoldId manifold;
    std::vector<double> coords;
};

struct Tangent {
    ManifoldId manifold;
    Point base;
    std::vector<double> vec;
};

Point euclidean_point(std::vector<double> coords);
/// Circle points are stored by angle in the closed chart [0, 2*pi]; the
/// endpoints of the chart are distinct points of the parametrized arc.
Point circle_point(double theta);
Point preal_point(double x);
Point spd_point(const Mat2& m);
Point cylinder_point(double theta, double z);

void validate_point(const Point& p);

Tangent tangent_at(const Point& base, std::vector<double> vec);
Tangent scale_tangent(const Tangent& t, double k);

Mat2 point_mat(const Point& p);
Mat2 tangent_mat(const Tangent& t);

struct Geodesic {
    ManifoldId manifold;
    Point base;       // gamma(0)
    Tangent velocity; // gamma'(0), chart coordinates
    double dom_lo = 0;
    double dom_hi = 0;
    std::function<Point(double)> eval_fn;

    Point eval(double s) const { return eval_fn(s); }
};

/// Geodesic from a base point and an initial velocity.
///
/// Circle chart convention: a tangent value v at angle theta parametrizes
/// gamma(s) = theta - s*v, i.e. positive v moves clockwise. This matches
/// the identification of T_i(S^1) with the reals used by the catalog
/// functions (the complex tangent at i equals -d(theta)/ds).
Geodesic geodesic_from_velocity(const ManifoldId& m, const Point& x, const Tangent& v);

/// Geodesic segment with gamma(0)=x and gamma(1)=y. On the circle the arc
/// is ambiguous; this default takes the signed displacement
/// dtheta = theta_y - theta_x in the chart. Use circle_segment for an
/// explicit arc choice.
Geodesic geodesic_segment(const ManifoldId& m, const Point& x, const Point& y);

/// Circle geodesic with gamma(s) = theta0 + s*dtheta (recorded chart
/// velocity is -dtheta).
Geodesic circle_segment(const Point& x, double dtheta);

} // namespace ivgeo

#endif
