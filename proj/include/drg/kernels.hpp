#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

// Data-parallel kernels used by the explicit-graph oracle. Each kernel has an
// OpenMP version (the default entry point) and a serial reference
// implementation kept for testing; outputs are bit-identical because every
// reduction is order-independent (min/max/counts only, no float sums).
namespace drg::kernels {

using AdjList = std::vector<std::vector<int>>;

// Row-major n x n matrix of BFS distances.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;
    int at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    int& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }
};

DistanceMatrix all_pairs_distances(const AdjList& adj);
DistanceMatrix all_pairs_distances_serial(const AdjList& adj);

// Per-distance-class extrema over all unordered vertex pairs: squared
// Euclidean distance ||U_x - U_y||^2 and inner product <U_x, U_y> of the
// embedding rows, plus pair counts. Class 0 covers the diagonal pairs.
struct PairClassStats {
    std::vector<double> min_dist2, max_dist2;
    std::vector<double> min_dot, max_dot;
    std::vector<std::int64_t> count;
};

PairClassStats pair_class_stats(const Eigen::MatrixXd& U, const DistanceMatrix& dist,
                                int diameter);
PairClassStats pair_class_stats_serial(const Eigen::MatrixXd& U, const DistanceMatrix& dist,
                                       int diameter);

// Distance-regularity counts: for every ordered pair (x, y) at distance i the
// numbers of neighbors of y at distance i-1 / i / i+1 from x. regular is
// false as soon as one count differs from the first pair seen in its class;
// the offending pair is reported.
struct IntersectionCounts {
    bool regular = false;
    std::vector<long long> b, c, a;  // b_0..b_{d-1}, c_1..c_d, a_0..a_d
    int bad_x = -1, bad_y = -1;
    std::string violation;
};

IntersectionCounts intersection_counts(const AdjList& adj, const DistanceMatrix& dist,
                                       int diameter);
IntersectionCounts intersection_counts_serial(const AdjList& adj, const DistanceMatrix& dist,
                                              int diameter);

}  // namespace drg::kernels
