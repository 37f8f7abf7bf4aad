#pragma once

#include <cmath>
#include <limits>

namespace eqstop {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Open interval (lo, hi), endpoints possibly infinite. Used for state-space
/// domains and for the open gaps between stopping-set components.
struct Interval {
    double lo = -kInf;
    double hi = kInf;

    bool contains(double x) const { return x > lo && x < hi; }
    bool contains_closure(double x) const { return x >= lo && x <= hi; }
    bool bounded_below() const { return std::isfinite(lo); }
    bool bounded_above() const { return std::isfinite(hi); }
    bool bounded() const { return bounded_below() && bounded_above(); }
    double length() const { return hi - lo; }
    bool valid() const { return lo < hi; }
};

inline Interval real_line() { return {-kInf, kInf}; }

}  // namespace eqstop
