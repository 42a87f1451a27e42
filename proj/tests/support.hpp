#pragma once

#include "drg/families.hpp"
#include "drg/intersection_array.hpp"
#include "drg/rational.hpp"
#include "drg/tables.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace drg::testing {

// The 24 reference arrays.
inline std::vector<IntersectionArray> corpus_arrays() {
    std::vector<IntersectionArray> out;
    for (const char* id : {"3.5a", "3.5b"})
        for (const auto& row : corpus_table(id))
            out.push_back(parse_intersection_array(row.array));
    return out;
}

// Family instances covering every row of both classical tables plus the
// non-classical generators; well over 30 instances.
inline const std::vector<std::pair<std::string, std::vector<long long>>>& family_pool() {
    static const std::vector<std::pair<std::string, std::vector<long long>>> pool = {
        {"hamming", {2, 3}},      {"hamming", {3, 2}},
        {"hamming", {4, 2}},      {"hamming", {3, 3}},
        {"hypercube", {6}},       {"johnson", {5, 2}},
        {"johnson", {7, 3}},      {"johnson", {8, 3}},
        {"halved-cube", {6}},     {"halved-cube", {7}},
        {"doob", {2}},            {"doob", {3}},
        {"grassmann", {4, 2, 2}}, {"grassmann", {5, 2, 2}},
        {"grassmann", {6, 3, 2}}, {"grassmann", {4, 2, 3}},
        {"twisted-grassmann", {2, 2}},
        {"bilinear", {2, 2, 2}},  {"bilinear", {3, 3, 2}},
        {"bilinear", {2, 2, 3}},
        {"dual-polar", {3, 2, 0}},
        {"dual-polar", {3, 2, 2}},
        {"dual-polar", {3, 2, 4}},
        {"dual-polar", {2, 4, 1}},
        {"dual-polar", {2, 4, 3}},
        {"pseudo-d", {3, 2}},
        {"alternating", {4, 2}},  {"alternating", {5, 2}},
        {"quadratic", {3, 2}},
        {"half-dual-polar", {4, 2}},
        {"half-dual-polar", {5, 2}},
        {"symplectic-dual-polar", {4, 2}},
        {"gosset", {}},
        {"e77", {2}},             {"affine-e6", {2}},
        {"witt-m24", {}},         {"witt-m23", {}},
        {"ternary-golay", {}},
        {"triality", {2}},        {"triality", {3}},
        {"unitary-dual-polar", {2, 2}},
        {"unitary-dual-polar", {3, 2}},
        {"hermitian", {2, 2}},    {"hermitian", {2, 3}},
        {"hermitian", {3, 2}},    {"hermitian", {3, 3}},
        {"hadamard", {2}},        {"hadamard", {34}},
        {"hadamard", {36}},
        {"taylor", {5, 2}},       {"taylor", {9, 4}},
        {"icosahedron", {}},
        {"odd", {2}},             {"odd", {3}},
        {"odd", {4}},             {"odd", {5}},
        {"odd", {6}},
        {"hexagon", {2, 2}},      {"hexagon", {2, 8}},
        {"hexagon", {3, 3}},      {"hexagon", {4, 2}},
        {"octagon", {2, 4}},      {"octagon", {4, 2}},
        {"petersen", {}},
    };
    return pool;
}

// Corpus plus all family instances, for the property suites.
inline std::vector<IntersectionArray> all_test_arrays() {
    auto out = corpus_arrays();
    for (const auto& [name, params] : family_pool())
        out.push_back(family_ia(name, params).array);
    return out;
}

// Independent characteristic-polynomial oracle: coefficients of
// det(x I - T) by expanding leading minors with exact integer arithmetic.
// Written against the generic minor expansion, not the spectrum module.
inline std::vector<BigInt> charpoly_oracle(const IntersectionArray& ia) {
    const int m = ia.d + 1;
    // T[i][j] entries as exact integers.
    auto entry = [&](int i, int j) -> BigInt {
        if (i == j) return ia.a[i];
        if (j == i + 1) return ia.b[i];
        if (i == j + 1) return ia.c[j];
        return 0;
    };
    std::vector<std::vector<BigInt>> minors;  // minors[r] = coeffs of det(xI - T_r)
    minors.push_back({1});
    for (int r = 1; r <= m; ++r) {
        // Laplace expansion along the last row of the r x r block: only the
        // diagonal and the single off-diagonal pair survive in a tridiagonal.
        std::vector<BigInt> cur(r + 1, 0);
        const auto& d1 = minors[r - 1];
        for (std::size_t i = 0; i < d1.size(); ++i) {
            cur[i + 1] += d1[i];
            cur[i] -= entry(r - 1, r - 1) * d1[i];
        }
        if (r >= 2) {
            const auto& d2 = minors[r - 2];
            const BigInt prod = entry(r - 2, r - 1) * entry(r - 1, r - 2);
            for (std::size_t i = 0; i < d2.size(); ++i) cur[i] -= prod * d2[i];
        }
        minors.push_back(std::move(cur));
    }
    return minors.back();
}

inline double eval_poly_double(const std::vector<BigInt>& p, double x) {
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

inline double coeff_norm(const std::vector<BigInt>& p) {
    double m = 0;
    for (const auto& c : p) m = std::max(m, std::fabs(c.convert_to<double>()));
    return m;
}

}  // namespace drg::testing
