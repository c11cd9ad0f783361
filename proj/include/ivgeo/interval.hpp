#ifndef IVGEO_INTERVAL_HPP
#define IVGEO_INTERVAL_HPP

#include <span>
#include <stdexcept>
#include <string>

namespace ivgeo {

struct InvalidInterval : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NegativeWidth : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptySet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Closed bounded real interval. Canonical storage is the endpoint pair;
/// center and half-width are computed views.
class Interval {
public:
    Interval() = default;

    static Interval from_endpoints(double lo, double hi);
    static Interval from_cw(double center, double halfwidth);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double center() const { return 0.5 * (lo_ + hi_); }
    double width() const { return 0.5 * (hi_ - lo_); }

    bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
    bool operator!=(const Interval& o) const { return !(*this == o); }

    bool approx_equal(const Interval& o, double tol) const;

    std::string str() const;

private:
    Interval(double lo, double hi) : lo_(lo), hi_(hi) {}
    double lo_ = 0.0;
    double hi_ = 0.0;
};

enum class LuComparison { LessEq, GreaterEq, Equal, Incomparable };
enum class MinOrdering { Less, Equal, Greater };

Interval neg(const Interval& a);
Interval scale(double k, const Interval& a);
Interval linear_combo(double alpha, const Interval& a, double beta, const Interval& b);
Interval minkowski_add(const Interval& a, const Interval& b);
Interval minkowski_sub(const Interval& a, const Interval& b);
Interval gh_diff(const Interval& a, const Interval& b);

double hausdorff(const Interval& a, const Interval& b);

LuComparison cmp_lu(const Interval& a, const Interval& b);
MinOrdering cmp_min(const Interval& a, const Interval& b);

/// cmp_min with an explicit tie band: centers within tol are treated as
/// equal and the decision falls to the widths, with the same band.
MinOrdering cmp_min_tol(const Interval& a, const Interval& b, double tol);

Interval min_of(std::span<const Interval> s);
Interval max_of(std::span<const Interval> s);

bool is_lower_bound(const Interval& b, std::span<const Interval> s);
bool is_upper_bound(const Interval& b, std::span<const Interval> s);

} // namespace ivgeo

#endif
