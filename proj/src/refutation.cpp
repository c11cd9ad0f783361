#include "ivgeo/refutation.hpp"

namespace ivgeo {

bool slope_band_member(const Interval& a) { return a.center() > 0.0 && a.width() == 0.0; }

bool zero_center_band_member(const Interval& a) { return a.center() == 0.0 && a.width() >= 0.0; }

Refutation refute_infimum_of_slope_band(const Interval& candidate) {
    const double c = candidate.center();
    if (c > 0.0) {
        // not a lower bound: the member at s = c/2 is strictly below it
        return {Refutation::Kind::NotLowerBound, Interval::from_cw(0.5 * c, 0.0),
                "family member <c/2, 0> is strictly below the candidate"};
    }
    if (c < 0.0) {
        // <c/2, 0> is still a lower bound and is strictly greater
        return {Refutation::Kind::BetterLowerBound, Interval::from_cw(0.5 * c, 0.0),
                "<c/2, 0> is a strictly greater lower bound"};
    }
    // c == 0: any wider zero-center interval is a strictly greater lower bound
    return {Refutation::Kind::BetterLowerBound, Interval::from_cw(0.0, candidate.width() + 1.0),
            "<0, w+1> is a strictly greater lower bound"};
}

Refutation refute_supremum_of_zero_center_band(const Interval& candidate) {
    const double c = candidate.center();
    if (c > 0.0) {
        return {Refutation::Kind::SmallerUpperBound, Interval::from_cw(0.5 * c, 0.0),
                "<c/2, 0> is a strictly smaller upper bound"};
    }
    if (c < 0.0) {
        return {Refutation::Kind::NotUpperBound, Interval::from_cw(0.0, 0.0),
                "family member <0, 0> is strictly above the candidate"};
    }
    // c == 0: a wider family member escapes the candidate
    return {Refutation::Kind::NotUpperBound, Interval::from_cw(0.0, candidate.width() + 1.0),
            "family member <0, w+1> is strictly above the candidate"};
}

} // namespace ivgeo
