#pragma once

#include "drg/intersection_array.hpp"
#include "drg/rational.hpp"
#include "drg/spectrum.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace drg {

// Classical parameters (d, b, alpha, beta); base b is an integer != 0, -1,
// alpha and beta may be rational (the derived intersection numbers must come
// out positive integers).
struct ClassicalParameters {
    int d = 0;
    long long b = 1;
    BigRat alpha;
    BigRat beta;
};

// Gaussian binomial [n choose m]_b: 0 for m < 0, C(n, m) at b = 1, otherwise
// prod_{h=0}^{m-1} (b^{n-h}-1)/(b^{m-h}-1). Exact; b may be negative.
BigRat gaussian_binomial(long long n, long long m, long long base);

// b_i = ([d]-[i])(beta - alpha [i]),  c_i = [i](1 + alpha [i-1]).
IntersectionArray classical_to_ia(const ClassicalParameters& p);

// theta_i = [d-i](beta - alpha [i]) - [i] in formula order i = 0..d (not
// necessarily sorted when b < 0); exact rationals for cross-checking.
std::vector<BigRat> classical_eigenvalues(const ClassicalParameters& p);

struct FamilyInstance {
    std::string family;
    std::vector<long long> params;
    IntersectionArray array;
    std::optional<ClassicalParameters> classical;
};

// Named generators: hadamard mu; taylor k mu; icosahedron; hexagon s t;
// octagon s t; odd d; petersen; hamming d q; hypercube d; doob d;
// johnson n d; halved-cube n; grassmann n d q; twisted-grassmann d q;
// bilinear d n q; dual-polar d q 2e; pseudo-d d q; alternating n q;
// quadratic n q; half-dual-polar n q; symplectic-dual-polar n q; gosset;
// e77 q; affine-e6 q; witt-m24; witt-m23; ternary-golay; triality q;
// unitary-dual-polar d r; hermitian d q.
// Out-of-range parameters throw (generalized polygons enforce the standard
// order constraints: hexagon s <= t^3, t <= s^3; octagon s <= t^2, t <= s^2).
FamilyInstance family_ia(const std::string& name, std::span<const long long> params);

const std::vector<std::string>& family_names();

// Closed-form c2^2 for the family; an evaluation path independent of
// analyze() (which must agree with it to 1e-9 relative).
double closed_form_c2_sq(const std::string& name, std::span<const long long> params);

// 4 (1 + 1/s) with s the smallest eigenvalue; requires d == 2.
double srg_c2_sq(const Spectrum& spec);

// Eberlein polynomial E_j(i) for the Johnson scheme J(n, d):
//   sum_h (-1)^h C(i,h) C(d-i,j-h) C(n-d-i,j-h).
BigInt eberlein(long long j, long long i, long long n, long long d);

// Distance-ceil(d/2) eigenvalues of J(2d+1, d) through the alternate
// expansion sum_{h=0}^{i} (-1)^{i-h} C(i,h) C(d-h,ceil(d/2))
// C(d-i+h+1,floor(d/2)+1); agrees with eberlein(ceil(d/2), i, 2d+1, d).
BigInt eberlein_top(long long d, long long i);

// Exact eigenmatrix v_j(theta_i) of the d x d Hermitian forms scheme over
// base b = -q, with theta_i = ((-q)^{2d-i} - 1)/(q+1) in formula order.
// Row 0 holds the valencies k_j; the derived cosine matrix is self-dual.
std::vector<std::vector<BigRat>> hermitian_eigenmatrix(int d, long long q);

}  // namespace drg
