#include "drg/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace drg {

namespace {

constexpr long long size_cap = 2000;

void check_cap(long long n, const std::string& kind) {
    if (n > size_cap)
        throw Error(kind + " would have " + std::to_string(n) + " vertices (cap " +
                    std::to_string(size_cap) + ")");
}

kernels::AdjList hamming_adj(long long d, long long q) {
    long long n = 1;
    for (long long i = 0; i < d; ++i) {
        n *= q;
        check_cap(n, "hamming");
    }
    kernels::AdjList adj(n);
    for (long long v = 0; v < n; ++v) {
        long long stride = 1;
        for (long long pos = 0; pos < d; ++pos) {
            const long long digit = (v / stride) % q;
            for (long long other = 0; other < q; ++other)
                if (other != digit)
                    adj[v].push_back(static_cast<int>(v + (other - digit) * stride));
            stride *= q;
        }
    }
    return adj;
}

// All d-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int m, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == m - d + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int meet_size(const std::vector<int>& x, const std::vector<int>& y) {
    int cnt = 0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) ++cnt, ++i, ++j;
        else if (x[i] < y[j]) ++i;
        else ++j;
    }
    return cnt;
}

kernels::AdjList subset_graph(int m, int d, int adjacency_meet, const std::string& kind) {
    check_cap(binomial(m, d).convert_to<long long>(), kind);
    const auto verts = subsets(m, d);
    const int n = static_cast<int>(verts.size());
    kernels::AdjList adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (meet_size(verts[i], verts[j]) == adjacency_meet) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    return adj;
}

}  // namespace

ExplicitGraph build_graph(const std::string& kind, std::span<const long long> params) {
    const auto arity = [&](std::size_t want) {
        if (params.size() != want)
            throw Error("graph '" + kind + "' takes " + std::to_string(want) +
                        " parameter(s), got " + std::to_string(params.size()));
    };

    ExplicitGraph g;
    g.kind = kind;
    if (kind == "hypercube") {
        arity(1);
        if (params[0] < 1) throw Error("hypercube needs d >= 1");
        g.adj = hamming_adj(params[0], 2);
    } else if (kind == "hamming") {
        arity(2);
        if (params[0] < 1 || params[1] < 2) throw Error("hamming needs d >= 1, q >= 2");
        g.adj = hamming_adj(params[0], params[1]);
    } else if (kind == "johnson") {
        arity(2);
        const long long n = params[0], d = params[1];
        if (d < 1 || n < 2 * d) throw Error("johnson needs 1 <= d <= n/2");
        g.adj = subset_graph(static_cast<int>(n), static_cast<int>(d), static_cast<int>(d) - 1,
                             "johnson");
    } else if (kind == "odd") {
        arity(1);
        const long long d = params[0];
        if (d < 1) throw Error("odd needs d >= 1");
        g.adj = subset_graph(static_cast<int>(2 * d + 1), static_cast<int>(d), 0, "odd");
    } else if (kind == "cycle") {
        arity(1);
        const long long n = params[0];
        if (n < 3) throw Error("cycle needs n >= 3");
        check_cap(n, "cycle");
        g.adj.resize(n);
        for (long long v = 0; v < n; ++v) {
            g.adj[v].push_back(static_cast<int>((v + 1) % n));
            g.adj[v].push_back(static_cast<int>((v + n - 1) % n));
        }
    } else if (kind == "petersen") {
        arity(0);
        g.adj = subset_graph(5, 2, 0, "petersen");
    } else {
        throw Error("unknown graph kind '" + kind + "'");
    }

    g.n = static_cast<int>(g.adj.size());
    g.dist = kernels::all_pairs_distances(g.adj);
    g.diameter = 0;
    for (int e : g.dist.d) {
        if (e < 0) throw Error("graph '" + kind + "' is disconnected");
        g.diameter = std::max(g.diameter, e);
    }
    return g;
}

IntersectionArray extract_ia(const ExplicitGraph& g) {
    const auto counts = kernels::intersection_counts(g.adj, g.dist, g.diameter);
    if (!counts.regular) {
        std::string msg = "graph is not distance-regular: " + counts.violation;
        if (counts.bad_x >= 0)
            msg += " (pair " + std::to_string(counts.bad_x) + "," +
                   std::to_string(counts.bad_y) + ")";
        throw Error(msg);
    }
    return IntersectionArray::make(counts.b, counts.c);
}

EmbeddingCheck spectral_embedding_check(const ExplicitGraph& g, int theta_index) {
    const IntersectionArray ia = extract_ia(g);
    const Spectrum spec = spectrum(ia);
    const int d = ia.d;
    // theta_0 maps every vertex to the same point (w_1 = 1); reject it.
    if (theta_index < 1 || theta_index > d) throw Error("theta index out of range 1..d");

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(g.n, g.n);
    for (int x = 0; x < g.n; ++x)
        for (int y : g.adj[x]) A(x, y) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
    if (solver.info() != Eigen::Success) throw Error("dense eigensolver failed");

    // Cluster the n eigenvalues (ascending from Eigen) around the d+1
    // distinct ones and pick the requested eigenspace.
    const double k = static_cast<double>(ia.k());
    const double target = spec.theta[theta_index];
    std::vector<int> cols;
    for (int i = 0; i < g.n; ++i)
        if (std::fabs(solver.eigenvalues()[i] - target) <= tol::eigen_cluster * k)
            cols.push_back(i);

    EmbeddingCheck ec;
    ec.theta_index = theta_index;
    ec.theta = target;
    ec.eigenspace_dim = static_cast<int>(cols.size());
    const double want_mult = spec.m[theta_index];
    if (std::fabs(want_mult - static_cast<double>(cols.size())) > 0.5)
        throw Error("eigenspace dimension " + std::to_string(cols.size()) +
                    " does not match the multiplicity formula " + std::to_string(want_mult));

    Eigen::MatrixXd U(g.n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) U.col(c) = solver.eigenvectors().col(cols[c]);

    // (u(i), u(i)) must not depend on the vertex.
    const Eigen::VectorXd rownorm2 = U.rowwise().squaredNorm();
    const double nsq = rownorm2.mean();
    for (int i = 0; i < g.n; ++i)
        if (std::fabs(rownorm2[i] - nsq) > 1e-9 * std::max(1.0, nsq))
            throw Error("row norm of the eigenbasis varies across vertices");

    const auto stats = kernels::pair_class_stats(U, g.dist, g.diameter);

    // Cosines measured from the Gram ratios, class by class.
    ec.eig_cosines.resize(d + 1);
    ec.max_cosine_dev = 0;
    for (int r = 0; r <= d; ++r) {
        const double lo = stats.min_dot[r] / nsq, hi = stats.max_dot[r] / nsq;
        ec.eig_cosines[r] = 0.5 * (lo + hi);
        ec.max_cosine_dev = std::max(ec.max_cosine_dev, hi - lo);
    }
    ec.recurrence_cosines = spec.W[theta_index];
    for (int r = 0; r <= d; ++r)
        ec.max_cosine_dev = std::max(
            ec.max_cosine_dev, std::fabs(ec.eig_cosines[r] - ec.recurrence_cosines[r]));

    // rho scales u(j) by 1/sqrt(2 (u,u) (1 - w_1)); S_r = ||rho(x) - rho(y)||.
    const double w1 = ec.eig_cosines[1];
    const double scale2 = 1.0 / (2.0 * nsq * (1.0 - w1));
    ec.realized_s.assign(d + 1, 0.0);
    ec.predicted_s.assign(d + 1, 0.0);
    ec.max_rel_deviation = 0;
    ec.measured_expansion = 0;
    double max_contraction = 0;
    for (int r = 1; r <= d; ++r) {
        const double lo = std::sqrt(std::max(0.0, stats.min_dist2[r] * scale2));
        const double hi = std::sqrt(std::max(0.0, stats.max_dist2[r] * scale2));
        ec.realized_s[r] = 0.5 * (lo + hi);
        ec.predicted_s[r] = std::sqrt((1.0 - spec.W[theta_index][r]) /
                                      (1.0 - spec.W[theta_index][1]));
        ec.max_rel_deviation = std::max(ec.max_rel_deviation,
                                        (hi - lo) / std::max(1e-300, ec.realized_s[r]));
        ec.max_rel_deviation = std::max(
            ec.max_rel_deviation, std::fabs(ec.realized_s[r] - ec.predicted_s[r]) /
                                      std::max(1e-300, ec.predicted_s[r]));
        ec.measured_expansion = std::max(ec.measured_expansion, ec.realized_s[r] / r);
        max_contraction = std::max(max_contraction, r / ec.realized_s[r]);
    }
    ec.measured_distortion_sq = max_contraction * max_contraction * ec.measured_expansion *
                                ec.measured_expansion;
    return ec;
}

std::pair<double, double> qalpha_certificate(const IntersectionArray& ia, const Spectrum& spec,
                                             int r) {
    const int d = ia.d;
    if (r < 1 || r > d) throw Error("r out of range 1..d");
    const double k1 = static_cast<double>(ia.k());
    const double kr = to_double(ia.k_dist[r]);

    // Row sums of (k_1 - alpha k_r) A_0 - A_1 + alpha A_r: A_i has row sum
    // k_i, so the expansion is (k_1 - alpha k_r) - k_1 + alpha k_r = 0
    // identically in alpha, provided the same exact k_i appear on both
    // sides. Check the coefficient pieces in exact arithmetic.
    const BigRat coeff_const = BigRat(ia.k()) * 1 - ia.k_dist[1];
    if (coeff_const != 0 || !is_integer(ia.k_dist[r]))
        throw Error("Q_alpha row sums do not vanish exactly");

    double alpha_star = inf;
    for (int j = 1; j <= d; ++j) {
        const double den = kr * (1.0 - spec.W[j][r]);
        if (std::fabs(den) <= tol::infinite_denominator * kr) continue;  // +inf term
        alpha_star = std::min(alpha_star, k1 * (1.0 - spec.W[j][1]) / den);
    }
    if (!std::isfinite(alpha_star))
        throw Error("no finite alpha: every 1 - w_r(theta_j) vanished");

    // All d+1 Bose-Mesner eigenvalues of Q_{alpha*} must be nonnegative.
    for (int j = 0; j <= d; ++j) {
        const double lambda = k1 * (1.0 - spec.W[j][1]) - alpha_star * kr * (1.0 - spec.W[j][r]);
        if (lambda < -tol::rel_equality * k1)
            throw Error("Q_alpha eigenvalue " + std::to_string(lambda) +
                        " negative at j = " + std::to_string(j));
    }

    const double bound = static_cast<double>(r) * r * alpha_star * kr / k1;
    return {alpha_star, bound};
}

}  // namespace drg
