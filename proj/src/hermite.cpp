#include "tbvp/hermite.hpp"

namespace tbvp {

double CubicHermite::value(double x) const {
    const double d = x1 - x0;
    const double p = x - x0;  // distance from the left end
    const double q = x - x1;  // distance from the right end (non-positive)
    return (d * d * d - 3.0 * d * p * p + 2.0 * p * p * p) / (d * d * d) * y0 +
           p * q * q / (d * d) * s0 + (3.0 * d * p * p - 2.0 * p * p * p) / (d * d * d) * y1 +
           p * p * q / (d * d) * s1;
}

double CubicHermite::d1(double x) const {
    const double d = x1 - x0;
    const double p = x - x0;
    const double q = x - x1;
    return (-6.0 * d * p + 6.0 * p * p) / (d * d * d) * y0 + (q * q + 2.0 * p * q) / (d * d) * s0 +
           (6.0 * d * p - 6.0 * p * p) / (d * d * d) * y1 + (2.0 * p * q + p * p) / (d * d) * s1;
}

double CubicHermite::integral() const {
    const double d = x1 - x0;
    return 0.5 * d * (y0 + y1) + d * d / 12.0 * (s0 - s1);
}

}  // namespace tbvp
