#pragma once

#include "drg/intersection_array.hpp"

#include <vector>

namespace drg {

// Distinct eigenvalues of a distance-regular graph in descending order, the
// cosine-sequence matrix W[j][r] = w_r(theta_j), and the multiplicities.
struct Spectrum {
    std::vector<double> theta;             // theta_0 > ... > theta_d, theta_0 = k
    std::vector<std::vector<double>> W;    // (d+1) x (d+1)
    std::vector<double> m;                 // m_0 = 1, sum m_j = n

    int d() const { return static_cast<int>(theta.size()) - 1; }
};

// All d+1 distinct eigenvalues, descending. Computed from the tridiagonal
// intersection matrix (subdiagonal c_i, diagonal a_i, superdiagonal b_i)
// symmetrized by the diagonal similarity with entries sqrt(k_i). Throws when
// two eigenvalues collide within 1e-7 * k.
std::vector<double> eigenvalues(const IntersectionArray& ia);

// (w_0,...,w_d) from the three-term recurrence
//   theta w_r = c_r w_{r-1} + a_r w_r + b_r w_{r+1}
// with w_0 = 1, w_1 = theta/k. theta is snapped to the nearest computed
// eigenvalue; a mismatch beyond 1e-6 * k is an error.
std::vector<double> cosine_sequence(const IntersectionArray& ia, double theta);

// Eigenvalues, full W matrix and multiplicities m_j = n / sum_i k_i w_i^2,
// with all structural invariants checked (recurrence residual, |w_r| <= 1,
// sign alternation of w_d, multiplicity sum).
Spectrum spectrum(const IntersectionArray& ia);

}  // namespace drg
