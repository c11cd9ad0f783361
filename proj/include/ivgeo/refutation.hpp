#ifndef IVGEO_REFUTATION_HPP
#define IVGEO_REFUTATION_HPP

#include <string>

#include "ivgeo/interval.hpp"

namespace ivgeo {

/// Closed-form refutation of a claimed infimum or supremum for the two
/// interval families that defeat order completeness of the min-ordering:
///   slope band    { <s, 0> : s > 0 }
///   zero-center   { <0, x> : x >= 0 }
/// Every candidate is refuted by either a family member it fails to bound
/// or a strictly better bound, decided on the sign of the candidate center.
struct Refutation {
    enum class Kind {
        NotLowerBound,     // exhibit: family member strictly below candidate
        BetterLowerBound,  // exhibit: lower bound strictly above candidate
        NotUpperBound,     // exhibit: family member strictly above candidate
        SmallerUpperBound, // exhibit: upper bound strictly below candidate
    };
    Kind kind;
    Interval exhibit;
    std::string note;
};

Refutation refute_infimum_of_slope_band(const Interval& candidate);
Refutation refute_supremum_of_zero_center_band(const Interval& candidate);

/// Family membership tests used to validate exhibits independently.
bool slope_band_member(const Interval& a);
bool zero_center_band_member(const Interval& a);

} // namespace ivgeo

#endif
