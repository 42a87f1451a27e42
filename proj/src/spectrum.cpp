#include "drg/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace drg {

namespace {

// Coefficients (ascending powers, exact integers) of det(x I - T) for the
// tridiagonal intersection matrix T, via the minor recurrence
//   D_r = (x - a_{r-1}) D_{r-1} - b_{r-2} c_{r-1} D_{r-2}.
std::vector<BigInt> char_poly_coeffs(const IntersectionArray& ia) {
    std::vector<BigInt> prev = {1};                      // D_0
    std::vector<BigInt> cur = {-BigInt(ia.a[0]), 1};     // D_1
    for (int r = 2; r <= ia.d + 1; ++r) {
        std::vector<BigInt> next(r + 1, 0);
        const BigInt diag = ia.a[r - 1];
        const BigInt off = BigInt(ia.b[r - 2]) * BigInt(ia.c[r - 2]);  // b_{r-2} c_{r-1}
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += cur[i];
            next[i] -= diag * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= off * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigRat eval_poly(const std::vector<BigInt>& p, const BigRat& x) {
    BigRat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

// One exact Newton step off a double seed; quadratic convergence makes a
// second step from the re-rounded double land on the correctly rounded root.
double polish_root(const std::vector<BigInt>& p, const std::vector<BigInt>& dp, double seed,
                   double radius) {
    double theta = seed;
    for (int step = 0; step < 2; ++step) {
        const BigRat x(theta);
        const BigRat den = eval_poly(dp, x);
        if (den == 0) break;
        const double next = to_double(x - eval_poly(p, x) / den);
        if (!std::isfinite(next) || std::fabs(next - seed) > radius) break;
        if (next == theta) break;
        theta = next;
    }
    return theta;
}

}  // namespace

std::vector<double> eigenvalues(const IntersectionArray& ia) {
    const int d = ia.d;
    const double k = static_cast<double>(ia.k());

    // Symmetrize the tridiagonal intersection matrix with the diagonal
    // similarity diag(sqrt(k_i)): off-diagonal entries become sqrt(b_i c_{i+1}).
    Eigen::VectorXd diag(d + 1), sub(std::max(d, 1));
    for (int i = 0; i <= d; ++i) diag[i] = static_cast<double>(ia.a[i]);
    for (int i = 0; i < d; ++i)
        sub[i] = std::sqrt(static_cast<double>(ia.b[i]) * static_cast<double>(ia.c[i]));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(d), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("tridiagonal eigensolver failed");

    std::vector<double> theta(solver.eigenvalues().data(), solver.eigenvalues().data() + d + 1);
    std::sort(theta.begin(), theta.end(), std::greater<>());

    // Polish each eigenvalue on the exact characteristic polynomial: the
    // solver localizes to ~eps*k absolute, which is not enough for the
    // multiplicity formula on instances with k ~ 1e5.
    const auto p = char_poly_coeffs(ia);
    std::vector<BigInt> dp(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * BigInt(i);
    for (double& t : theta) t = polish_root(p, dp, t, tol::theta_match * k);

    for (int j = 0; j < d; ++j)
        if (theta[j] - theta[j + 1] <= tol::eigen_separation * k)
            throw Error("eigenvalue collision near " + std::to_string(theta[j]) +
                        "; array is degenerate");
    if (std::fabs(theta[0] - k) > tol::eigen_separation * k)
        throw Error("largest eigenvalue does not match the valency");
    theta[0] = k;
    return theta;
}

namespace {

std::vector<double> cosine_recurrence(const IntersectionArray& ia, double theta) {
    const int d = ia.d;
    const double k = static_cast<double>(ia.k());
    std::vector<double> w(d + 1);
    w[0] = 1.0;
    if (d >= 1) w[1] = theta / k;
    for (int r = 1; r < d; ++r)
        w[r + 1] = ((theta - static_cast<double>(ia.a[r])) * w[r] -
                    static_cast<double>(ia.c_at(r)) * w[r - 1]) /
                   static_cast<double>(ia.b[r]);
    return w;
}

}  // namespace

std::vector<double> cosine_sequence(const IntersectionArray& ia, double theta) {
    const double k = static_cast<double>(ia.k());
    const auto th = eigenvalues(ia);
    double nearest = th[0];
    for (double t : th)
        if (std::fabs(t - theta) < std::fabs(nearest - theta)) nearest = t;
    if (std::fabs(nearest - theta) > tol::theta_match * k)
        throw Error("theta = " + std::to_string(theta) +
                    " is not an eigenvalue of the array (nearest: " + std::to_string(nearest) +
                    ")");

    auto w = cosine_recurrence(ia, nearest);
    for (double wr : w)
        if (std::fabs(wr) > 1.0 + tol::recurrence_residual)
            throw Error("cosine |w_r| = " + std::to_string(std::fabs(wr)) + " exceeds 1");
    return w;
}

Spectrum spectrum(const IntersectionArray& ia) {
    const int d = ia.d;
    const double k = static_cast<double>(ia.k());
    const double n = to_double(ia.n);

    Spectrum spec;
    spec.theta = eigenvalues(ia);
    spec.W.reserve(d + 1);
    for (int j = 0; j <= d; ++j) {
        auto w = cosine_recurrence(ia, spec.theta[j]);

        // The recurrence at r = d has no forward term (b_d = 0); its residual
        // independently confirms theta_j is an eigenvalue.
        const double resid = (spec.theta[j] - static_cast<double>(ia.a[d])) * w[d] -
                             static_cast<double>(ia.c_at(d)) * w[d - 1];
        if (std::fabs(resid) > tol::recurrence_residual * k)
            throw Error("cosine recurrence residual " + std::to_string(resid) +
                        " at theta_" + std::to_string(j));

        for (double wr : w)
            if (std::fabs(wr) > 1.0 + tol::recurrence_residual)
                throw Error("cosine out of range at theta_" + std::to_string(j));

        const double wd = w[d];
        const bool even = j % 2 == 0;
        if (wd == 0.0 || (even && wd < 0.0) || (!even && wd > 0.0))
            throw Error("sign(w_d(theta_" + std::to_string(j) + ")) != (-1)^" +
                        std::to_string(j));
        spec.W.push_back(std::move(w));
    }

    spec.m.resize(d + 1);
    double msum = 0;
    for (int j = 0; j <= d; ++j) {
        double s = 0;
        for (int i = 0; i <= d; ++i)
            s += to_double(ia.k_dist[i]) * spec.W[j][i] * spec.W[j][i];
        spec.m[j] = n / s;
        msum += spec.m[j];
    }
    if (std::fabs(msum - n) > tol::multiplicity_sum * n)
        throw Error("multiplicities sum to " + std::to_string(msum) + ", expected n = " +
                    std::to_string(n));
    if (std::fabs(spec.m[0] - 1.0) > tol::multiplicity_sum)
        throw Error("multiplicity of the valency is not 1");
    return spec;
}

}  // namespace drg
