#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ivgeo/interval.hpp"

using namespace ivgeo;

namespace {

std::mt19937 rng(12345);

Interval rand_iv() {
    std::uniform_real_distribution<double> c(-50.0, 50.0);
    std::uniform_real_distribution<double> w(0.0, 25.0);
    return Interval::from_cw(c(rng), w(rng));
}

// independent endpoint-arithmetic oracle for alpha*A + beta*B
Interval combo_oracle(double alpha, const Interval& a, double beta, const Interval& b) {
    auto ep = [](double k, const Interval& x) {
        return k >= 0.0 ? std::pair{k * x.lo(), k * x.hi()} : std::pair{k * x.hi(), k * x.lo()};
    };
    auto [al, ah] = ep(alpha, a);
    auto [bl, bh] = ep(beta, b);
    return Interval::from_endpoints(al + bl, ah + bh);
}

} // namespace

TEST_CASE("construction and round trips") {
    const Interval a = Interval::from_endpoints(-1.0, 3.0);
    CHECK(a.center() == doctest::Approx(1.0));
    CHECK(a.width() == doctest::Approx(2.0));
    const Interval b = Interval::from_cw(a.center(), a.width());
    CHECK(b == a);

    CHECK_THROWS_AS(Interval::from_endpoints(2.0, 1.0), InvalidInterval);
    CHECK_THROWS_AS(Interval::from_cw(0.0, -0.1), NegativeWidth);
    CHECK_THROWS_AS(Interval::from_endpoints(std::nan(""), 1.0), InvalidInterval);

    for (int i = 0; i < 1000; ++i) {
        const Interval x = rand_iv();
        const Interval y = Interval::from_cw(x.center(), x.width());
        CHECK(hausdorff(x, y) <= 1e-12);
    }
}

TEST_CASE("linear combination matches endpoint case split") {
    std::uniform_real_distribution<double> coef(-20.0, 20.0);
    for (int i = 0; i < 10000; ++i) {
        const double alpha = coef(rng), beta = coef(rng);
        const Interval a = rand_iv(), b = rand_iv();
        const Interval got = linear_combo(alpha, a, beta, b);
        const Interval want = combo_oracle(alpha, a, beta, b);
        const double scale = std::max({1.0, std::abs(want.lo()), std::abs(want.hi())});
        CHECK(hausdorff(got, want) / scale <= 1e-12);
    }
    // degenerate coefficients
    const Interval a = rand_iv();
    CHECK(linear_combo(0.0, a, 0.0, a) == Interval::from_endpoints(0.0, 0.0));
    CHECK(scale(-1.0, a) == neg(a));
}

TEST_CASE("minkowski operations") {
    const Interval a = Interval::from_endpoints(1.0, 4.0);
    const Interval b = Interval::from_endpoints(2.0, 3.0);
    CHECK(minkowski_add(a, b) == Interval::from_endpoints(3.0, 7.0));
    CHECK(minkowski_sub(a, b) == Interval::from_endpoints(-2.0, 2.0));
    // A - A is not zero under Minkowski arithmetic: widths add
    CHECK(minkowski_sub(a, a) == Interval::from_endpoints(-3.0, 3.0));
    CHECK(minkowski_sub(a, a) != Interval::from_endpoints(0.0, 0.0));
}

TEST_CASE("gh difference: endpoint formula equals cw formula") {
    for (int i = 0; i < 10000; ++i) {
        const Interval a = rand_iv(), b = rand_iv();
        const double d1 = a.lo() - b.lo(), d2 = a.hi() - b.hi();
        const Interval want = Interval::from_endpoints(std::min(d1, d2), std::max(d1, d2));
        CHECK(hausdorff(gh_diff(a, b), want) <= 1e-12);
        CHECK(gh_diff(a, a) == Interval::from_endpoints(0.0, 0.0));
    }
    CHECK(gh_diff(Interval::from_endpoints(1.0, 4.0), Interval::from_endpoints(2.0, 3.0)) ==
          Interval::from_endpoints(-1.0, 1.0));
}

TEST_CASE("hausdorff metric axioms") {
    for (int i = 0; i < 2000; ++i) {
        const Interval a = rand_iv(), b = rand_iv(), c = rand_iv();
        const double ab = hausdorff(a, b);
        CHECK(ab >= 0.0);
        CHECK(ab == doctest::Approx(hausdorff(b, a)));
        CHECK(hausdorff(a, a) == 0.0);
        CHECK(ab <= hausdorff(a, c) + hausdorff(c, b) + 1e-12);
        if (ab == 0.0) CHECK(a == b);
    }
}

TEST_CASE("lu order is partial, min order is total") {
    // the classic incomparability witness: nested intervals
    CHECK(cmp_lu(Interval::from_endpoints(1.0, 4.0), Interval::from_endpoints(2.0, 3.0)) ==
          LuComparison::Incomparable);
    CHECK(cmp_lu(Interval::from_endpoints(1.0, 2.0), Interval::from_endpoints(1.0, 2.0)) ==
          LuComparison::Equal);
    CHECK(cmp_lu(Interval::from_endpoints(0.0, 1.0), Interval::from_endpoints(0.5, 2.0)) ==
          LuComparison::LessEq);

    for (int i = 0; i < 10000; ++i) {
        const Interval a = rand_iv(), b = rand_iv(), c = rand_iv();
        const MinOrdering ab = cmp_min(a, b), ba = cmp_min(b, a);
        // totality + antisymmetry
        CHECK(((ab == MinOrdering::Less && ba == MinOrdering::Greater) ||
               (ab == MinOrdering::Greater && ba == MinOrdering::Less) ||
               (ab == MinOrdering::Equal && ba == MinOrdering::Equal)));
        // transitivity
        const auto le = [](MinOrdering o) { return o != MinOrdering::Greater; };
        if (le(ab) && le(cmp_min(b, c))) CHECK(le(cmp_min(a, c)));
        // equality in min order is true equality
        if (ab == MinOrdering::Equal) CHECK(a == b);
        // consistency with lu order on comparable pairs
        if (cmp_lu(a, b) == LuComparison::LessEq && a != b) CHECK(ab == MinOrdering::Less);
    }
}

TEST_CASE("min order: center decides, width breaks ties") {
    CHECK(cmp_min(Interval::from_cw(1.0, 5.0), Interval::from_cw(2.0, 0.0)) == MinOrdering::Less);
    CHECK(cmp_min(Interval::from_cw(2.0, 1.0), Interval::from_cw(2.0, 3.0)) == MinOrdering::Less);
    CHECK(cmp_min(Interval::from_cw(2.0, 3.0), Interval::from_cw(2.0, 1.0)) ==
          MinOrdering::Greater);

    // the two orders disagree on which of these is "smaller"
    const Interval p = Interval::from_endpoints(0.0, 10.0); // center 5
    const Interval q = Interval::from_endpoints(4.0, 6.0);  // center 5, narrower
    CHECK(cmp_lu(p, q) == LuComparison::Incomparable);
    CHECK(cmp_min(q, p) == MinOrdering::Less);
}

TEST_CASE("cmp_min_tol tie band") {
    const Interval a = Interval::from_cw(1.0, 2.0);
    const Interval b = Interval::from_cw(1.0 + 1e-9, 1.0);
    CHECK(cmp_min(a, b) == MinOrdering::Less);             // strict center comparison
    CHECK(cmp_min_tol(a, b, 1e-6) == MinOrdering::Greater); // centers tie, widths decide
    CHECK(cmp_min_tol(a, a, 1e-6) == MinOrdering::Equal);
}

TEST_CASE("min/max and bounds over finite families") {
    const std::vector<Interval> fam = {Interval::from_cw(1.0, 1.0), Interval::from_cw(0.0, 3.0),
                                       Interval::from_cw(2.0, 0.0)};
    CHECK(min_of(fam) == Interval::from_cw(0.0, 3.0));
    CHECK(max_of(fam) == Interval::from_cw(2.0, 0.0));
    CHECK(is_lower_bound(Interval::from_cw(-1.0, 0.0), fam));
    CHECK(is_upper_bound(Interval::from_cw(3.0, 0.0), fam));
    CHECK_FALSE(is_lower_bound(Interval::from_cw(1.5, 0.0), fam));
    CHECK_THROWS_AS(min_of(std::vector<Interval>{}), EmptySet);
    CHECK_THROWS_AS(max_of(std::vector<Interval>{}), EmptySet);
}

TEST_CASE("worked linear combination from the cw formula") {
    // 2<1,2> + (-1)<3,1> = <2*1 - 3, |2|*2 + |-1|*1> = <-1, 5>
    const Interval got =
        linear_combo(2.0, Interval::from_cw(1.0, 2.0), -1.0, Interval::from_cw(3.0, 1.0));
    CHECK(got == Interval::from_cw(-1.0, 5.0));
    CHECK(got.lo() == doctest::Approx(-6.0));
    CHECK(got.hi() == doctest::Approx(4.0));
}
