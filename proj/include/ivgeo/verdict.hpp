#ifndef IVGEO_VERDICT_HPP
#define IVGEO_VERDICT_HPP

#include <optional>
#include <string>

#include "ivgeo/interval.hpp"
#include "ivgeo/manifold.hpp"

namespace ivgeo {

/// Concrete violation found by a falsifier. Real-valued checks store the
/// two sides as degenerate intervals.
struct Witness {
    std::optional<Point> target;
    double s = 0.0;
    Interval lhs;
    Interval rhs;
    std::string channel; // "", "center", or "width"
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;

    static Verdict ok() { return Verdict{}; }
    static Verdict violation(Witness w) { return Verdict{false, std::move(w)}; }
};

} // namespace ivgeo

#endif
