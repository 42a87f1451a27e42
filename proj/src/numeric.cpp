#include "drg/numeric.hpp"

#include <cmath>

namespace drg {

std::optional<SmallFraction> reconstruct_rational(double x, long long max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    // Convergents of the continued fraction of x.
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double y = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double fa = std::floor(y);
        if (fa > 9.2e18 || fa < -9.2e18) return std::nullopt;
        const long long a = static_cast<long long>(fa);
        const long long p2 = a * p1 + p0;
        const long long q2 = a * q1 + q0;
        if (q2 > max_den || q2 <= 0) return std::nullopt;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double err = std::fabs(x - static_cast<double>(p1) / static_cast<double>(q1));
        // Far better than a generic convergent of this size: 1/q^2 would be
        // typical, we ask for 1e-9/q. True small rationals computed in double
        // sit at ~1e-15; convergents of irrationals do not get this close
        // until the denominator is large.
        if (err <= 1e-9 / static_cast<double>(q1)) return SmallFraction{p1, q1};
        const double frac = y - fa;
        if (frac < 1e-15) return std::nullopt;
        y = 1.0 / frac;
    }
    return std::nullopt;
}

}  // namespace drg
