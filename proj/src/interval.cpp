#include "ivgeo/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ivgeo {

namespace {
bool finite(double x) { return std::isfinite(x); }
} // namespace

Interval Interval::from_endpoints(double lo, double hi) {
    if (!finite(lo) || !finite(hi))
        throw InvalidInterval("interval endpoints must be finite");
    if (lo > hi)
        throw InvalidInterval("interval lower endpoint exceeds upper endpoint");
    return Interval(lo, hi);
}

Interval Interval::from_cw(double center, double halfwidth) {
    if (!finite(center) || !finite(halfwidth))
        throw InvalidInterval("interval center/half-width must be finite");
    if (halfwidth < 0.0)
        throw NegativeWidth("interval half-width must be nonnegative");
    return Interval(center - halfwidth, center + halfwidth);
}

bool Interval::approx_equal(const Interval& o, double tol) const {
    return std::abs(lo_ - o.lo_) <= tol && std::abs(hi_ - o.hi_) <= tol;
}

std::string Interval::str() const {
    std::ostringstream os;
    os << "[" << lo_ << ", " << hi_ << "]";
    return os.str();
}

Interval neg(const Interval& a) {
    return Interval::from_endpoints(-a.hi(), -a.lo());
}

Interval scale(double k, const Interval& a) {
    return linear_combo(k, a, 0.0, Interval::from_endpoints(0.0, 0.0));
}

Interval linear_combo(double alpha, const Interval& a, double beta, const Interval& b) {
    const double c = alpha * a.center() + beta * b.center();
    const double w = std::abs(alpha) * a.width() + std::abs(beta) * b.width();
    return Interval::from_cw(c, w);
}

Interval minkowski_add(const Interval& a, const Interval& b) {
    return Interval::from_endpoints(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval minkowski_sub(const Interval& a, const Interval& b) {
    return minkowski_add(a, neg(b));
}

Interval gh_diff(const Interval& a, const Interval& b) {
    // Endpoint form and cw form agree exactly up to rounding; the cw form
    // is canonical so that gh_diff(A, A) is exactly [0, 0].
    const double c = a.center() - b.center();
    const double w = std::abs(a.width() - b.width());
    return Interval::from_cw(c, w);
}

double hausdorff(const Interval& a, const Interval& b) {
    return std::max(std::abs(a.lo() - b.lo()), std::abs(a.hi() - b.hi()));
}

LuComparison cmp_lu(const Interval& a, const Interval& b) {
    const bool le = a.lo() <= b.lo() && a.hi() <= b.hi();
    const bool ge = b.lo() <= a.lo() && b.hi() <= a.hi();
    if (le && ge) return LuComparison::Equal;
    if (le) return LuComparison::LessEq;
    if (ge) return LuComparison::GreaterEq;
    return LuComparison::Incomparable;
}

MinOrdering cmp_min(const Interval& a, const Interval& b) {
    if (a.center() < b.center()) return MinOrdering::Less;
    if (a.center() > b.center()) return MinOrdering::Greater;
    if (a.width() < b.width()) return MinOrdering::Less;
    if (a.width() > b.width()) return MinOrdering::Greater;
    return MinOrdering::Equal;
}

MinOrdering cmp_min_tol(const Interval& a, const Interval& b, double tol) {
    if (b.center() - a.center() > tol) return MinOrdering::Less;
    if (a.center() - b.center() > tol) return MinOrdering::Greater;
    if (b.width() - a.width() > tol) return MinOrdering::Less;
    if (a.width() - b.width() > tol) return MinOrdering::Greater;
    return MinOrdering::Equal;
}

Interval min_of(std::span<const Interval> s) {
    if (s.empty()) throw EmptySet("min_of: empty set");
    Interval best = s[0];
    for (const Interval& a : s.subspan(1))
        if (cmp_min(a, best) == MinOrdering::Less) best = a;
    return best;
}

Interval max_of(std::span<const Interval> s) {
    if (s.empty()) throw EmptySet("max_of: empty set");
    Interval best = s[0];
    for (const Interval& a : s.subspan(1))
        if (cmp_min(a, best) == MinOrdering::Greater) best = a;
    return best;
}

bool is_lower_bound(const Interval& b, std::span<const Interval> s) {
    for (const Interval& a : s)
        if (cmp_min(b, a) == MinOrdering::Greater) return false;
    return true;
}

bool is_upper_bound(const Interval& b, std::span<const Interval> s) {
    for (const Interval& a : s)
        if (cmp_min(b, a) == MinOrdering::Less) return false;
    return true;
}

} // namespace ivgeo
