#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace drg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Shared tolerances. Eigen-side quantities are 64-bit floats with explicit
// tolerances; combinatorial quantities (valencies, vertex counts) are exact
// rationals and never touch these.
namespace tol {
inline constexpr double eigen_separation = 1e-7;    // * k, between distinct eigenvalues
inline constexpr double recurrence_residual = 1e-9; // * k
inline constexpr double certification = 1e-9;       // relative
inline constexpr double rel_equality = 1e-9;        // relative, generic comparisons
inline constexpr double multiplicity_integral = 1e-6;
inline constexpr double multiplicity_sum = 1e-6;    // relative
inline constexpr double infinite_denominator = 1e-9;
inline constexpr double theta_match = 1e-6;         // * k
inline constexpr double eigen_cluster = 1e-6;       // * k, explicit-graph eigenspaces
}  // namespace tol

inline constexpr double inf = std::numeric_limits<double>::infinity();

inline bool rel_close(double a, double b, double rel = tol::rel_equality) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= rel * scale;
}

struct SmallFraction {
    long long num = 0;
    long long den = 1;
};

// Continued-fraction reconstruction of a small rational from a double.
// Accepts a convergent p/q only when the approximation is far better than a
// generic convergent of that size (|x - p/q| <= 1e-9 / q), so quadratic
// irrationals in the 1e-15 noise regime are not misreported as fractions.
std::optional<SmallFraction> reconstruct_rational(double x, long long max_den = 1'000'000);

}  // namespace drg
