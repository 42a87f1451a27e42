#pragma once

#include "drg/numeric.hpp"
#include "drg/spectrum.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace drg {

// Least-distortion data for one array. Ratios with denominator below 1e-9
// are +infinity and excluded from minima. When certified, the lower and
// upper bounds agree to 1e-9 relative and c2_sq() is the common value;
// otherwise [c2_sq_lower, c2_sq_upper] is a genuine interval.
struct DistortionReport {
    double embedding_distortion_sq = 0;     // distortion(rho)^2 at theta_1
    int most_contracted_r = 0;              // argmin_r (1 - w_r(theta_1)) / r^2

    std::vector<std::vector<double>> bound_table;  // [r-1][j-1], r,j in 1..d
    std::vector<double> lower_bound_sq_per_r;      // min_j of each row
    double best_lower_bound_sq = 0;
    int best_r = 0;
    bool small_r_wins = false;              // some r <= d-2 strictly beats {d-1, d}

    bool certified = false;
    double c2_sq_lower = 0;
    double c2_sq_upper = 0;
    std::optional<SmallFraction> c2_sq_rational;

    double c2_sq() const;                   // requires certified
};

// max_r r^2 (1 - w_1(theta_1)) / (1 - w_r(theta_1)) and its argmax, ties
// broken toward larger r. Throws if some 1 - w_r(theta_1) <= 0 for r >= 1.
std::pair<double, int> embedding_distortion_sq(const Spectrum& spec);

// r^2 min_j (1 - w_1(theta_j)) / (1 - w_r(theta_j)) over j in 1..d, skipping
// +infinity terms.
double vallentin_bound_sq(const Spectrum& spec, int r);

DistortionReport analyze(const IntersectionArray& ia);
DistortionReport analyze(const IntersectionArray& ia, const Spectrum& spec,
                         double cert_tol = tol::certification);

// For an antipodal r-cover: true iff d >= 2r and theta_1/k < (d^2-2rd+r)/d^2,
// i.e. the distance-(d-1) classes are more contracted than the distance-d
// ones. Throws when the array is not antipodal.
bool antipodal_counterexample_check(const IntersectionArray& ia, const Spectrum& spec);

// Diameter-3 closed form
//   max{ 4 b1 / (th0+th1-a1),
//        9 b1 b2 / ((th0+th1-a1)(th0+th1-a2) - th0 th1 - b1 c2 - th0) }.
double diameter3_closed_form(const IntersectionArray& ia);

}  // namespace drg
