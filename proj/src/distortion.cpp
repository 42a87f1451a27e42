#include "drg/distortion.hpp"

#include <algorithm>
#include <cmath>

namespace drg {

double DistortionReport::c2_sq() const {
    if (!certified) throw Error("c2^2 is only a point value for certified reports");
    return c2_sq_upper;
}

std::pair<double, int> embedding_distortion_sq(const Spectrum& spec) {
    const int d = spec.d();
    const auto& w1 = spec.W[1];
    double best = -inf;
    int best_r = 0;
    for (int r = 1; r <= d; ++r) {
        const double den = 1.0 - w1[r];
        if (den <= 0)
            throw Error("1 - w_" + std::to_string(r) + "(theta_1) <= 0; invalid spectrum");
        const double val = static_cast<double>(r) * r * (1.0 - w1[1]) / den;
        if (val >= best * (1.0 - tol::rel_equality)) {  // ties toward larger r
            if (val > best) best = val;
            best_r = r;
        }
    }
    return {best, best_r};
}

namespace {

// (1 - w_1(theta_j)) / (1 - w_r(theta_j)) scaled by r^2; a vanishing
// denominator (w_r(theta_j) = 1, common on antipodal arrays) makes the term
// +inf so it drops out of minima.
double bound_entry(const Spectrum& spec, int r, int j) {
    const double den = 1.0 - spec.W[j][r];
    if (std::fabs(den) <= tol::infinite_denominator) return inf;
    return static_cast<double>(r) * r * (1.0 - spec.W[j][1]) / den;
}

}  // namespace

double vallentin_bound_sq(const Spectrum& spec, int r) {
    const int d = spec.d();
    if (r < 1 || r > d) throw Error("r out of range 1..d");
    double best = inf;
    for (int j = 1; j <= d; ++j) best = std::min(best, bound_entry(spec, r, j));
    if (!std::isfinite(best)) throw Error("empty minimum: every 1 - w_r(theta_j) vanished");
    return best;
}

DistortionReport analyze(const IntersectionArray& ia) { return analyze(ia, spectrum(ia)); }

DistortionReport analyze(const IntersectionArray& ia, const Spectrum& spec, double cert_tol) {
    const int d = ia.d;
    DistortionReport rep;

    auto [emb, emb_r] = embedding_distortion_sq(spec);
    rep.embedding_distortion_sq = emb;
    rep.most_contracted_r = emb_r;  // argmax r^2(1-w_1)/(1-w_r) = argmin (1-w_r)/r^2

    rep.bound_table.assign(d, std::vector<double>(d));
    rep.lower_bound_sq_per_r.assign(d, inf);
    for (int r = 1; r <= d; ++r) {
        double row_min = inf;
        for (int j = 1; j <= d; ++j) {
            const double e = bound_entry(spec, r, j);
            rep.bound_table[r - 1][j - 1] = e;
            row_min = std::min(row_min, e);
        }
        if (!std::isfinite(row_min))
            throw Error("empty minimum in bound table row r = " + std::to_string(r));
        rep.lower_bound_sq_per_r[r - 1] = row_min;
    }

    rep.best_lower_bound_sq = -inf;
    for (int r = 1; r <= d; ++r) {
        const double v = rep.lower_bound_sq_per_r[r - 1];
        if (v >= rep.best_lower_bound_sq * (1.0 - tol::rel_equality)) {
            if (v > rep.best_lower_bound_sq) rep.best_lower_bound_sq = v;
            rep.best_r = r;
        }
    }
    if (d >= 3) {
        const double tail = std::max(rep.lower_bound_sq_per_r[d - 2],
                                     rep.lower_bound_sq_per_r[d - 1]);
        rep.small_r_wins = rep.best_lower_bound_sq > tail * (1.0 + tol::rel_equality);
    }

    if (rep.best_lower_bound_sq > rep.embedding_distortion_sq *
                                      (1.0 + tol::rel_equality))
        throw Error("lower bound exceeds the embedding upper bound; numerical breakdown");

    rep.certified = rel_close(rep.best_lower_bound_sq, rep.embedding_distortion_sq, cert_tol);
    rep.c2_sq_lower = rep.best_lower_bound_sq;
    rep.c2_sq_upper = rep.embedding_distortion_sq;
    if (rep.certified) rep.c2_sq_rational = reconstruct_rational(rep.c2_sq_upper);
    return rep;
}

bool antipodal_counterexample_check(const IntersectionArray& ia, const Spectrum& spec) {
    const auto r = is_antipodal(ia);
    if (!r) throw Error("array is not antipodal");
    const int d = ia.d;
    if (d <= 2 * *r - 1) return false;  // d^2 - 2rd + r < 0 while theta_1 > 0
    const double k = static_cast<double>(ia.k());
    const double lhs = spec.theta[1] / k;
    const double rhs =
        (static_cast<double>(d) * d - 2.0 * static_cast<double>(*r) * d + static_cast<double>(*r)) /
        (static_cast<double>(d) * d);
    return lhs < rhs;
}

double diameter3_closed_form(const IntersectionArray& ia) {
    if (ia.d != 3) throw Error("closed form requires diameter 3");
    const auto th = eigenvalues(ia);
    const double th0 = th[0], th1 = th[1];
    const double a1 = static_cast<double>(ia.a[1]);
    const double a2 = static_cast<double>(ia.a[2]);
    const double b1 = static_cast<double>(ia.b[1]);
    const double b2 = static_cast<double>(ia.b[2]);
    const double c2 = static_cast<double>(ia.c[1]);
    const double first = 4.0 * b1 / (th0 + th1 - a1);
    const double second = 9.0 * b1 * b2 /
                          ((th0 + th1 - a1) * (th0 + th1 - a2) - th0 * th1 - b1 * c2 - th0);
    return std::max(first, second);
}

}  // namespace drg
