#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ivgeo/manifold.hpp"

using namespace ivgeo;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

std::mt19937 rng(777);

Mat2 rand_spd() {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    // G^T G + eps I is symmetric positive definite
    const Mat2 g{a, b, c, d};
    const Mat2 gtg{a * a + c * c, a * b + c * d, a * b + c * d, b * b + d * d};
    return gtg + Mat2::identity() * 0.05;
}

double dist(const Point& p, const Point& q) {
    double s = 0.0;
    for (size_t i = 0; i < p.coords.size(); ++i) {
        const double d = p.coords[i] - q.coords[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// finite-difference chart velocity of a geodesic at s = 0
std::vector<double> fd_velocity(const Geodesic& g, double h) {
    const Point a = g.eval(0.0), b = g.eval(h);
    std::vector<double> v(a.coords.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = (b.coords[i] - a.coords[i]) / h;
    return v;
}

} // namespace

TEST_CASE("point validation") {
    CHECK_NOTHROW(circle_point(0.0));
    CHECK_NOTHROW(circle_point(2.0 * kPi)); // closed chart keeps the 2*pi endpoint
    CHECK(circle_point(2.0 * kPi).coords[0] == 2.0 * kPi);
    // constructors normalize out-of-chart angles
    CHECK(circle_point(-0.1).coords[0] == doctest::Approx(2.0 * kPi - 0.1));
    CHECK(circle_point(2.0 * kPi + 0.1).coords[0] == doctest::Approx(0.1));
    CHECK(cylinder_point(7.0, 0.0).coords[0] == doctest::Approx(7.0 - 2.0 * kPi));
    CHECK_THROWS_AS(preal_point(0.0), OffManifold);
    CHECK_THROWS_AS(preal_point(-1.0), OffManifold);
    CHECK_THROWS_AS(spd_point(Mat2{1.0, 2.0, 2.0, 1.0}), OffManifold); // det < 0
    CHECK_THROWS_AS(spd_point(Mat2{1.0, 0.5, 0.0, 1.0}), OffManifold); // asymmetric
}

TEST_CASE("spd2 spectral decomposition and calculus") {
    for (int i = 0; i < 500; ++i) {
        const Mat2 m = rand_spd();
        const Eig2 e = spd2_eig(m);
        CHECK(e.l1 > 0.0);
        CHECK(e.l2 > 0.0);
        // reconstruct: R diag(l1,l2) R^T
        const double ct = std::cos(e.angle), st = std::sin(e.angle);
        const Mat2 rec{e.l1 * ct * ct + e.l2 * st * st, (e.l1 - e.l2) * ct * st,
                       (e.l1 - e.l2) * ct * st, e.l1 * st * st + e.l2 * ct * ct};
        CHECK((rec + m * -1.0).norm() <= 1e-10 * (1.0 + m.norm()));

        const Mat2 s = spd2_sqrt(m);
        CHECK((s * s + m * -1.0).norm() <= 1e-9 * (1.0 + m.norm()));
        const Mat2 l = spd2_log(m);
        CHECK((spd2_exp(l) + m * -1.0).norm() <= 1e-9 * (1.0 + m.norm()));
        const Mat2 isq = spd2_inv_sqrt(m);
        CHECK((isq * m * isq + Mat2::identity() * -1.0).norm() <= 1e-9);
        CHECK(det2(m) == doctest::Approx(e.l1 * e.l2).epsilon(1e-10));
    }
    CHECK_THROWS_AS(spd2_log(Mat2{1.0, 2.0, 2.0, 1.0}), NotPositiveDefinite);
}

TEST_CASE("geodesic segments hit their endpoints") {
    // euclidean
    {
        const Point x = euclidean_point({1.0, -2.0}), y = euclidean_point({3.0, 0.5});
        const Geodesic g = geodesic_segment(euclidean(2), x, y);
        CHECK(dist(g.eval(0.0), x) <= 1e-12);
        CHECK(dist(g.eval(1.0), y) <= 1e-12);
    }
    // circle (chart displacement)
    {
        const Point x = circle_point(kPi / 2.0), y = circle_point(kPi);
        const Geodesic g = geodesic_segment(circle(), x, y);
        CHECK(g.eval(1.0).coords[0] == doctest::Approx(kPi).epsilon(1e-12));
        CHECK(g.velocity.vec[0] == doctest::Approx(-kPi / 2.0)); // v = -d(theta)/ds
    }
    // positive reals
    {
        const Point x = preal_point(1.0), y = preal_point(2.0);
        const Geodesic g = geodesic_segment(positive_reals(), x, y);
        CHECK(g.eval(1.0).coords[0] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(g.velocity.vec[0] == doctest::Approx(std::log(2.0)));
        // gamma(s) = y^s when x = 1
        CHECK(g.eval(0.5).coords[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
    // spd2
    for (int i = 0; i < 100; ++i) {
        const Point x = spd_point(rand_spd()), y = spd_point(rand_spd());
        const Geodesic g = geodesic_segment(spd2(), x, y);
        CHECK(dist(g.eval(0.0), x) <= 1e-9);
        CHECK(dist(g.eval(1.0), y) <= 1e-8);
        // the whole segment stays positive definite
        for (double s : {0.25, 0.5, 0.75}) CHECK_NOTHROW(validate_point(g.eval(s)));
    }
    // cylinder, vertical and horizontal
    {
        const Point x = cylinder_point(0.0, 0.0);
        const Geodesic gv = geodesic_segment(cylinder(), x, cylinder_point(0.0, 2.0));
        CHECK(gv.eval(1.0).coords[1] == doctest::Approx(2.0));
        const Geodesic gh = geodesic_segment(cylinder(), x, cylinder_point(kPi, 0.0));
        CHECK(gh.eval(1.0).coords[0] == doctest::Approx(kPi));
        CHECK_THROWS_AS(geodesic_segment(cylinder(), x, cylinder_point(1.0, 1.0)), BadTangent);
    }
}

TEST_CASE("initial velocity is recovered by finite differences") {
    const double h = 1e-6;
    // circle: gamma(s) = theta0 - s*v
    {
        const Point x = circle_point(kPi / 2.0);
        const Geodesic g = geodesic_from_velocity(circle(), x, tangent_at(x, {-0.7}));
        CHECK(fd_velocity(g, h)[0] == doctest::Approx(0.7).epsilon(1e-4));
    }
    // positive reals: gamma(s) = x e^{(v/x)s}
    {
        const Point x = preal_point(3.0);
        const Geodesic g = geodesic_from_velocity(positive_reals(), x, tangent_at(x, {1.2}));
        CHECK(fd_velocity(g, h)[0] == doctest::Approx(1.2).epsilon(1e-4));
    }
    // spd2: gamma(s) = P^(1/2) exp(s P^(-1/2) V P^(-1/2)) P^(1/2)
    {
        const Point x = spd_point(rand_spd());
        const Mat2 v{0.3, -0.1, -0.1, 0.5};
        const Geodesic g =
            geodesic_from_velocity(spd2(), x, tangent_at(x, {v.a, v.b, v.c, v.d}));
        const auto fd = fd_velocity(g, h);
        CHECK(fd[0] == doctest::Approx(v.a).epsilon(1e-4));
        CHECK(fd[1] == doctest::Approx(v.b).epsilon(1e-4));
        CHECK(fd[3] == doctest::Approx(v.d).epsilon(1e-4));
    }
}

TEST_CASE("positive reals: geodesics satisfy the group property") {
    // gamma_x,v(s + t) = gamma_{gamma(s)}, v'(t) with the transported velocity
    const Point x = preal_point(2.0);
    const Geodesic g = geodesic_from_velocity(positive_reals(), x, tangent_at(x, {0.8}));
    for (double s : {0.1, 0.3, 0.7}) {
        const Point mid = g.eval(s);
        // velocity transported proportionally to the base point (v/x constant)
        const double v2 = 0.8 / 2.0 * mid.coords[0];
        const Geodesic g2 = geodesic_from_velocity(positive_reals(), mid, tangent_at(mid, {v2}));
        for (double t : {0.1, 0.4}) {
            CHECK(g.eval(s + t).coords[0] == doctest::Approx(g2.eval(t).coords[0]).epsilon(1e-12));
        }
    }
}

TEST_CASE("circle segments: explicit arc choice") {
    const Point x = circle_point(kPi / 2.0);
    const Geodesic short_arc = circle_segment(x, -kPi / 2.0); // to theta = 0
    const Geodesic long_arc = circle_segment(x, 3.0 * kPi / 2.0); // to theta = 2*pi
    CHECK(short_arc.eval(1.0).coords[0] == doctest::Approx(0.0));
    CHECK(long_arc.eval(1.0).coords[0] == doctest::Approx(2.0 * kPi));
    // both end at the same circle point, but distinct chart values (closed chart)
    CHECK(short_arc.eval(1.0).coords[0] != long_arc.eval(1.0).coords[0]);
    // out-of-chart intermediate values wrap
    const Geodesic wind = circle_segment(x, 3.0 * kPi);
    const double th = wind.eval(1.0).coords[0];
    CHECK(th >= 0.0);
    CHECK(th <= 2.0 * kPi);
    CHECK(th == doctest::Approx(3.0 * kPi / 2.0));
}

TEST_CASE("tangent construction rules") {
    const Point x = euclidean_point({0.0, 0.0});
    CHECK_THROWS_AS(tangent_at(x, {1.0}), BadTangent); // wrong layout
    const Point p = spd_point(Mat2::identity());
    CHECK_NOTHROW(tangent_at(p, {1.0, 0.0, 0.0, 1.0}));
    CHECK_THROWS_AS(tangent_at(p, {1.0, 2.0, 0.0, 1.0}), BadTangent); // asymmetric direction
    const Tangent t = tangent_at(p, {1.0, 2.0, 2.0, 3.0});
    const Tangent t2 = scale_tangent(t, -2.0);
    CHECK(t2.vec[1] == doctest::Approx(-4.0));
    CHECK(t2.base.coords == t.base.coords);
}
