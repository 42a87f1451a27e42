#pragma once

#include "drg/intersection_array.hpp"
#include "drg/kernels.hpp"
#include "drg/spectrum.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace drg {

// A concretely constructed small graph (<= 2000 vertices) with its all-pairs
// BFS distance matrix. Ground truth for everything computed from arrays.
struct ExplicitGraph {
    std::string kind;
    int n = 0;
    kernels::AdjList adj;
    kernels::DistanceMatrix dist;
    int diameter = 0;
};

// Kinds: hypercube d | hamming d q | johnson n d | odd d | cycle n | petersen.
ExplicitGraph build_graph(const std::string& kind, std::span<const long long> params);

// Verifies distance-regularity pair by pair; throws with the violating pair
// if the counts are not constant.
IntersectionArray extract_ia(const ExplicitGraph& g);

// Direct measurement of the spectral embedding rho built from an orthonormal
// eigenbasis of the adjacency matrix.
struct EmbeddingCheck {
    int theta_index = 0;         // descending-sort position
    double theta = 0;
    int eigenspace_dim = 0;

    std::vector<double> realized_s;    // [r], r = 1..d, measured ||rho(x)-rho(y)||
    std::vector<double> predicted_s;   // sqrt((1-w_r)/(1-w_1)) from the recurrence
    double max_rel_deviation = 0;      // realized vs predicted, and within-class spread

    std::vector<double> eig_cosines;        // from row Gram ratios, r = 0..d
    std::vector<double> recurrence_cosines; // from the three-term recurrence
    double max_cosine_dev = 0;

    double measured_expansion = 0;     // max_r S_r / r, must be 1
    double measured_distortion_sq = 0; // (max_r r/S_r)^2 * expansion^2
};

EmbeddingCheck spectral_embedding_check(const ExplicitGraph& g, int theta_index);

// Largest alpha keeping (k_1 - alpha k_r) A_0 - A_1 + alpha A_r positive
// semidefinite, found through its d+1 Bose-Mesner eigenvalues
// k_1(1-w_1(theta_j)) - alpha k_r(1-w_r(theta_j)); returns alpha* and the
// quotient bound r^2 alpha* k_r / k_1, which equals vallentin_bound_sq.
std::pair<double, double> qalpha_certificate(const IntersectionArray& ia,
                                             const Spectrum& spec, int r);

}  // namespace drg
