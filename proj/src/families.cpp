#include "drg/families.hpp"

#include "drg/distortion.hpp"

#include <algorithm>
#include <cmath>

namespace drg {

BigRat gaussian_binomial(long long n, long long m, long long base) {
    if (base == 0 || base == -1) throw Error("Gaussian binomial base must not be 0 or -1");
    if (m < 0) return 0;
    if (base == 1) return BigRat(binomial(n, m));
    BigRat prod = 1;
    const BigInt b = base;
    for (long long h = 0; h < m; ++h) {
        BigInt num = 1, den = 1;
        for (long long e = 0; e < n - h; ++e) num *= b;
        for (long long e = 0; e < m - h; ++e) den *= b;
        prod *= BigRat(num - 1) / BigRat(den - 1);
    }
    return prod;
}

namespace {

BigRat gauss1(long long i, long long base) { return gaussian_binomial(i, 1, base); }

long long to_ll_exact(const BigRat& x, const char* what) {
    if (!is_integer(x)) throw Error(std::string(what) + " is not an integer: " + to_string(x));
    return numerator(x).convert_to<long long>();
}

BigInt ipow(BigInt b, long long e) {
    BigInt out = 1;
    for (long long i = 0; i < e; ++i) out *= b;
    return out;
}

}  // namespace

IntersectionArray classical_to_ia(const ClassicalParameters& p) {
    if (p.d < 1) throw Error("classical parameters need d >= 1");
    std::vector<long long> b(p.d), c(p.d);
    const BigRat gd = gauss1(p.d, p.b);
    for (int i = 0; i < p.d; ++i) {
        const BigRat bi = (gd - gauss1(i, p.b)) * (p.beta - p.alpha * gauss1(i, p.b));
        b[i] = to_ll_exact(bi, "b_i");
        if (b[i] <= 0) throw Error("classical b_" + std::to_string(i) + " is not positive");
    }
    for (int i = 1; i <= p.d; ++i) {
        const BigRat ci = gauss1(i, p.b) * (1 + p.alpha * gauss1(i - 1, p.b));
        c[i - 1] = to_ll_exact(ci, "c_i");
        if (c[i - 1] <= 0) throw Error("classical c_" + std::to_string(i) + " is not positive");
    }
    return IntersectionArray::make(std::move(b), std::move(c));
}

std::vector<BigRat> classical_eigenvalues(const ClassicalParameters& p) {
    std::vector<BigRat> th(p.d + 1);
    for (int i = 0; i <= p.d; ++i)
        th[i] = gauss1(p.d - i, p.b) * (p.beta - p.alpha * gauss1(i, p.b)) - gauss1(i, p.b);
    return th;
}

namespace {

void need_params(const std::string& name, std::span<const long long> params, std::size_t n) {
    if (params.size() != n)
        throw Error("family '" + name + "' takes " + std::to_string(n) + " parameter(s), got " +
                    std::to_string(params.size()));
}

FamilyInstance from_classical(std::string name, std::vector<long long> params,
                              ClassicalParameters cp) {
    FamilyInstance inst;
    inst.family = std::move(name);
    inst.params = std::move(params);
    inst.array = classical_to_ia(cp);
    inst.classical = std::move(cp);
    return inst;
}

FamilyInstance from_array(std::string name, std::vector<long long> params,
                          std::vector<long long> b, std::vector<long long> c) {
    FamilyInstance inst;
    inst.family = std::move(name);
    inst.params = std::move(params);
    inst.array = IntersectionArray::make(std::move(b), std::move(c));
    return inst;
}

// Odd graph O_{d+1}: b_i = d+1 - floor((i+1)/2), c_i = ceil(i/2).
FamilyInstance odd_graph(long long d) {
    if (d < 1) throw Error("odd graph needs d >= 1");
    std::vector<long long> b(d), c(d);
    for (long long i = 0; i < d; ++i) b[i] = d + 1 - (i + 1) / 2;
    for (long long i = 1; i <= d; ++i) c[i - 1] = (i + 1) / 2;
    return from_array("odd", {d}, std::move(b), std::move(c));
}

}  // namespace

FamilyInstance family_ia(const std::string& name, std::span<const long long> params) {
    const auto P = [&](std::size_t i) { return params[i]; };

    if (name == "hadamard") {
        need_params(name, params, 1);
        const long long mu = P(0);
        if (mu < 1) throw Error("hadamard needs mu >= 1");
        return from_array(name, {mu}, {2 * mu, 2 * mu - 1, mu, 1}, {1, mu, 2 * mu - 1, 2 * mu});
    }
    if (name == "taylor") {
        need_params(name, params, 2);
        const long long k = P(0), mu = P(1);
        if (k < 2 || mu < 1 || mu > k - 1) throw Error("taylor needs k >= 2, 1 <= mu <= k-1");
        return from_array(name, {k, mu}, {k, mu, 1}, {1, mu, k});
    }
    if (name == "icosahedron") {
        need_params(name, params, 0);
        return from_array(name, {}, {5, 2, 1}, {1, 2, 5});
    }
    if (name == "hexagon" || name == "octagon") {
        need_params(name, params, 2);
        const long long s = P(0), t = P(1);
        if (s < 2 || t < 2) throw Error(name + " needs s, t >= 2");
        if (name == "hexagon") {
            if (s > t * t * t || t > s * s * s)
                throw Error("hexagon order out of range: needs s <= t^3 and t <= s^3");
            return from_array(name, {s, t}, {s * (t + 1), s * t, s * t}, {1, 1, t + 1});
        }
        if (s > t * t || t > s * s)
            throw Error("octagon order out of range: needs s <= t^2 and t <= s^2");
        return from_array(name, {s, t}, {s * (t + 1), s * t, s * t, s * t}, {1, 1, 1, t + 1});
    }
    if (name == "odd") {
        need_params(name, params, 1);
        return odd_graph(P(0));
    }
    if (name == "petersen") {
        need_params(name, params, 0);
        return from_array(name, {}, {3, 2}, {1, 1});
    }
    if (name == "hamming") {
        need_params(name, params, 2);
        const long long d = P(0), q = P(1);
        if (d < 1 || q < 2) throw Error("hamming needs d >= 1, q >= 2");
        return from_classical(name, {d, q}, {static_cast<int>(d), 1, 0, BigRat(q - 1)});
    }
    if (name == "hypercube") {
        need_params(name, params, 1);
        const long long d = P(0);
        if (d < 1) throw Error("hypercube needs d >= 1");
        return from_classical(name, {d}, {static_cast<int>(d), 1, 0, 1});
    }
    if (name == "doob") {
        need_params(name, params, 1);
        const long long d = P(0);
        if (d < 1) throw Error("doob needs d >= 1");
        return from_classical(name, {d}, {static_cast<int>(d), 1, 0, 3});
    }
    if (name == "johnson") {
        need_params(name, params, 2);
        const long long n = P(0), d = P(1);
        if (d < 1 || n < 2 * d) throw Error("johnson needs 1 <= d <= n/2");
        return from_classical(name, {n, d}, {static_cast<int>(d), 1, 1, BigRat(n - d)});
    }
    if (name == "halved-cube") {
        need_params(name, params, 1);
        const long long n = P(0);
        if (n < 4) throw Error("halved-cube needs n >= 4");
        const long long d = n / 2, m = 2 * ((n + 1) / 2) - 1;
        return from_classical(name, {n}, {static_cast<int>(d), 1, 2, BigRat(m)});
    }
    if (name == "grassmann") {
        need_params(name, params, 3);
        const long long n = P(0), d = P(1), q = P(2);
        if (d < 1 || n < 2 * d || q < 2) throw Error("grassmann needs 1 <= d <= n/2, q >= 2");
        const BigRat beta = gauss1(n - d + 1, q) - 1;
        return from_classical(name, {n, d, q}, {static_cast<int>(d), q, BigRat(q), beta});
    }
    if (name == "twisted-grassmann") {
        need_params(name, params, 2);
        const long long d = P(0), q = P(1);
        if (d < 1 || q < 2) throw Error("twisted-grassmann needs d >= 1, q >= 2");
        const BigRat beta = gauss1(d + 2, q) - 1;  // same parameters as grassmann(2d+1, d, q)
        return from_classical(name, {d, q}, {static_cast<int>(d), q, BigRat(q), beta});
    }
    if (name == "bilinear") {
        need_params(name, params, 3);
        const long long d = P(0), n = P(1), q = P(2);
        if (d < 1 || n < d || q < 2) throw Error("bilinear needs 1 <= d <= n, q >= 2");
        return from_classical(name, {d, n, q},
                              {static_cast<int>(d), q, BigRat(q - 1), BigRat(ipow(q, n) - 1)});
    }
    if (name == "dual-polar" || name == "pseudo-d") {
        // dual-polar d q 2e with 2e in {0,1,2,3,4}; pseudo-d is e = 0.
        const bool pseudo = name == "pseudo-d";
        need_params(name, params, pseudo ? 2 : 3);
        const long long d = P(0), q = P(1), e2 = pseudo ? 0 : P(2);
        if (d < 1 || q < 2 || e2 < 0 || e2 > 4) throw Error(name + ": bad parameters");
        BigRat beta;
        if (e2 % 2 == 0) {
            beta = BigRat(ipow(q, e2 / 2));
        } else {
            const auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(q))));
            if (r * r != q) throw Error("dual-polar with half-integer e needs square q");
            beta = BigRat(ipow(r, e2));
        }
        return from_classical(name, {params.begin(), params.end()},
                              {static_cast<int>(d), q, 0, beta});
    }
    if (name == "alternating" || name == "quadratic") {
        need_params(name, params, 2);
        long long n = P(0);
        const long long q = P(1);
        if (name == "quadratic") n += 1;  // Quad(n, q) shares Alt(n+1, q) parameters
        if (n < 2 || q < 2) throw Error(name + ": bad parameters");
        const long long d = n / 2, m = 2 * ((n + 1) / 2) - 1;
        return from_classical(name, {P(0), q},
                              {static_cast<int>(d), q * q, BigRat(q * q - 1),
                               BigRat(ipow(q, m) - 1)});
    }
    if (name == "half-dual-polar" || name == "symplectic-dual-polar") {
        need_params(name, params, 2);
        const long long n = P(0), q = P(1);
        if (n < 3 || q < 2) throw Error(name + ": bad parameters");
        const long long d = n / 2;
        const BigRat beta = gauss1(2 * ((n + 1) / 2), q) - 1;
        return from_classical(name, {n, q},
                              {static_cast<int>(d), q * q, BigRat(q * q + q), beta});
    }
    if (name == "gosset") {
        need_params(name, params, 0);
        return from_classical(name, {}, {3, 1, 4, 9});
    }
    if (name == "e77") {
        need_params(name, params, 1);
        const long long q = P(0);
        if (q < 2) throw Error("e77 needs q >= 2");
        return from_classical(name, {q},
                              {3, q * q * q * q, gauss1(5, q) - 1, gauss1(10, q) - 1});
    }
    if (name == "affine-e6") {
        need_params(name, params, 1);
        const long long q = P(0);
        if (q < 2) throw Error("affine-e6 needs q >= 2");
        return from_classical(name, {q},
                              {3, q * q * q * q, BigRat(ipow(q, 4) - 1), BigRat(ipow(q, 9) - 1)});
    }
    if (name == "witt-m24") {
        need_params(name, params, 0);
        return from_classical(name, {}, {3, -2, -4, 10});
    }
    if (name == "witt-m23") {
        need_params(name, params, 0);
        return from_classical(name, {}, {3, -2, -2, 5});
    }
    if (name == "ternary-golay") {
        need_params(name, params, 0);
        return from_classical(name, {}, {3, -2, -3, 8});
    }
    if (name == "triality") {
        need_params(name, params, 1);
        const long long q = P(0);
        if (q < 2) throw Error("triality needs q >= 2");
        return from_classical(name, {q},
                              {3, -q, BigRat(q) / BigRat(1 - q), BigRat(q * q + q)});
    }
    if (name == "unitary-dual-polar") {
        // Canonicalized to the base >= 1 parameter set (d, r^2, 0, r).
        need_params(name, params, 2);
        const long long d = P(0), r = P(1);
        if (d < 1 || r < 2) throw Error("unitary-dual-polar needs d >= 1, r >= 2");
        return from_classical(name, {d, r}, {static_cast<int>(d), r * r, 0, BigRat(r)});
    }
    if (name == "hermitian") {
        need_params(name, params, 2);
        const long long d = P(0), q = P(1);
        if (d < 1 || q < 2) throw Error("hermitian needs d >= 1, q >= 2");
        const BigRat beta = BigRat(-ipow(BigInt(-q), d) - 1);
        return from_classical(name, {d, q}, {static_cast<int>(d), -q, BigRat(-q - 1), beta});
    }
    throw Error("unknown family '" + name + "'");
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "hadamard", "taylor", "icosahedron", "hexagon", "octagon", "odd", "petersen",
        "hamming", "hypercube", "doob", "johnson", "halved-cube", "grassmann",
        "twisted-grassmann", "bilinear", "dual-polar", "pseudo-d", "alternating", "quadratic",
        "half-dual-polar", "symplectic-dual-polar", "gosset", "e77", "affine-e6", "witt-m24",
        "witt-m23", "ternary-golay", "triality", "unitary-dual-polar", "hermitian"};
    return names;
}

namespace {

double classical_closed_form(int d, long long base) {
    // d^2 b^{d-1} / [d]_b
    const BigRat v = BigRat(d) * d * BigRat(ipow(base, d - 1)) / gauss1(d, base);
    return to_double(v);
}

double taylor_closed_form(long long k, long long mu) {
    const double kk = static_cast<double>(k);
    const double z1 = (static_cast<double>(k - 1 - 2 * mu) +
                       std::sqrt(static_cast<double>((k - 1 - 2 * mu) * (k - 1 - 2 * mu) + 4 * k))) /
                      2.0;
    return 9.0 * (kk - z1) / (2.0 * kk);
}

}  // namespace

double closed_form_c2_sq(const std::string& name, std::span<const long long> params) {
    const auto P = [&](std::size_t i) { return params[i]; };

    if (name == "hadamard") {
        need_params(name, params, 1);
        const double x = std::sqrt(2.0 * static_cast<double>(P(0)));
        return std::max(8.0 * (x - 1.0) / x, 9.0 * (x - 1.0) / (x + 1.0));
    }
    if (name == "taylor") {
        need_params(name, params, 2);
        return taylor_closed_form(P(0), P(1));
    }
    if (name == "icosahedron") return taylor_closed_form(5, 2);
    if (name == "hexagon") {
        need_params(name, params, 2);
        const double s = static_cast<double>(P(0)), t = static_cast<double>(P(1));
        const double st = std::sqrt(s * t);
        return 9.0 * t * st / ((st + 1.0) * (t + 1.0));
    }
    if (name == "octagon") {
        need_params(name, params, 2);
        const double s = static_cast<double>(P(0)), t = static_cast<double>(P(1));
        return 16.0 * s * t * t * (s * t - std::sqrt(2.0 * s * t) + 1.0) /
               ((t + 1.0) * (s * s * t * t + 1.0));
    }
    if (name == "odd") {
        need_params(name, params, 1);
        const long long d = P(0);
        const long long l = d / 2;
        if (d % 2 == 0)
            return static_cast<double>(4 * l * l) * static_cast<double>(4 * l - 2) /
                   static_cast<double>(4 * l * l + l - 1);
        return static_cast<double>((2 * l + 1) * (2 * l + 1)) * static_cast<double>(4 * l + 2) /
               static_cast<double>(4 * l * l + 7 * l + 3);
    }
    if (name == "petersen") return 2.0;
    if (name == "hermitian") {
        need_params(name, params, 2);
        const int d = static_cast<int>(P(0));
        const BigInt b = -P(1);
        const BigRat v = BigRat(d) * d *
                         BigRat((ipow(b, d) + ipow(b, d - 1) + b + 1) * ipow(b, d - 1)) /
                         (BigRat(ipow(b, d) + b + 1) * gauss1(d, -P(1)));
        return to_double(v);
    }
    if (name == "triality") {
        need_params(name, params, 1);
        const double q = static_cast<double>(P(0));
        return 9.0 * std::pow(q, 5) / ((q * q * q + 1.0) * (q * q + 1.0));
    }
    if (name == "witt-m24") return 4.0 * 42.0 / 25.0;   // (2/5 sqrt(42))^2
    if (name == "witt-m23") return 4.0 * 21.0 / 13.0;   // (2 sqrt(21/13))^2
    if (name == "ternary-golay") return 33.0 / 5.0;     // (sqrt(33/5))^2

    // Everything else is classical with base >= 1: d^2 b^{d-1} / [d]_b.
    const FamilyInstance inst = family_ia(name, params);
    if (!inst.classical || inst.classical->b < 1)
        throw Error("no closed form registered for family '" + name + "'");
    return classical_closed_form(inst.classical->d, inst.classical->b);
}

double srg_c2_sq(const Spectrum& spec) {
    if (spec.d() != 2) throw Error("the strongly-regular closed form needs d == 2");
    return 4.0 * (1.0 + 1.0 / spec.theta[2]);
}

BigInt eberlein(long long j, long long i, long long n, long long d) {
    if (i < 0 || j < 0 || i > d || j > d || 2 * d > n)
        throw Error("eberlein needs 0 <= i, j <= d <= n/2");
    BigInt sum = 0;
    for (long long h = 0; h <= j; ++h) {
        const BigInt term = binomial(i, h) * binomial(d - i, j - h) * binomial(n - d - i, j - h);
        sum += (h % 2 == 0) ? term : -term;
    }
    return sum;
}

BigInt eberlein_top(long long d, long long i) {
    if (i < 0 || i > d || d < 1) throw Error("eberlein_top needs 0 <= i <= d, d >= 1");
    const long long jc = (d + 1) / 2;   // ceil(d/2)
    const long long jf = d / 2;         // floor(d/2)
    BigInt sum = 0;
    for (long long h = 0; h <= i; ++h) {
        const BigInt term =
            binomial(i, h) * binomial(d - h, jc) * binomial(d - i + h + 1, jf + 1);
        sum += ((i - h) % 2 == 0) ? term : -term;
    }
    return sum;
}

std::vector<std::vector<BigRat>> hermitian_eigenmatrix(int d, long long q) {
    if (d < 1 || q < 2) throw Error("hermitian_eigenmatrix needs d >= 1, q >= 2");
    const long long base = -q;
    std::vector<std::vector<BigRat>> v(d + 1, std::vector<BigRat>(d + 1));
    for (int j = 0; j <= d; ++j) {
        for (int i = 0; i <= d; ++i) {
            BigRat sum = 0;
            for (long long h = 0; h <= j; ++h) {
                const long long exp = (j - h) * (j - h - 1) / 2 + h * d;  // C(j-h, 2) + h d
                sum += BigRat(ipow(BigInt(base), exp)) * gaussian_binomial(d - h, d - j, base) *
                       gaussian_binomial(d - i, h, base);
            }
            v[j][i] = (j % 2 == 0) ? sum : -sum;
        }
    }
    return v;
}

}  // namespace drg
