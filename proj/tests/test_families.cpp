#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drg/distortion.hpp"
#include "drg/families.hpp"
#include "support.hpp"

#include <cmath>
#include <map>

using namespace drg;

TEST_CASE("gaussian binomials: base cases and negative base") {
    CHECK(gaussian_binomial(3, 1, -2) == BigRat(3));
    CHECK(gaussian_binomial(7, 0, -5) == BigRat(1));
    CHECK(gaussian_binomial(4, 2, 2) == BigRat(35));
    CHECK(gaussian_binomial(5, 2, 1) == BigRat(10));
    CHECK(gaussian_binomial(4, -1, 3) == BigRat(0));
    CHECK(gaussian_binomial(2, 3, 2) == BigRat(0));
    CHECK(gaussian_binomial(2, 1, -2) == BigRat(-1));
    CHECK(gaussian_binomial(3, 2, -2) == BigRat(3));  // symmetry with [3 choose 1]
    CHECK_THROWS_AS(gaussian_binomial(3, 1, 0), Error);
    CHECK_THROWS_AS(gaussian_binomial(3, 1, -1), Error);
}

TEST_CASE("classical parameters: Hamming, Hermitian Clebsch, Gosset") {
    const auto hamming = classical_to_ia({3, 1, 0, BigRat(2)});  // H(3,3)
    CHECK(hamming.b == std::vector<long long>{6, 4, 2});
    CHECK(hamming.c == std::vector<long long>{1, 2, 3});

    const auto clebsch = classical_to_ia({2, -2, BigRat(-3), BigRat(-5)});
    CHECK(clebsch.b == std::vector<long long>{5, 4});
    CHECK(clebsch.c == std::vector<long long>{1, 2});
    CHECK(clebsch.n == BigRat(16));

    const auto gosset = classical_to_ia({3, 1, BigRat(4), BigRat(9)});
    CHECK(gosset.b == std::vector<long long>{27, 10, 1});
    CHECK(gosset.c == std::vector<long long>{1, 10, 27});
    CHECK(gosset.n == BigRat(56));

    CHECK_THROWS_AS(classical_to_ia({3, 2, BigRat(1, 5), BigRat(7)}), Error);  // non-integer b_i
}

TEST_CASE("family generators: frozen arrays") {
    CHECK(format(family_ia("hadamard", std::vector<long long>{2}).array) ==
          "{4,3,2,1;1,2,3,4}");
    CHECK(format(family_ia("odd", std::vector<long long>{2}).array) == "{3,2;1,1}");
    CHECK(format(family_ia("odd", std::vector<long long>{5}).array) ==
          "{6,5,5,4,4;1,1,2,2,3}");
    CHECK(format(family_ia("taylor", std::vector<long long>{5, 2}).array) == "{5,2,1;1,2,5}");
    CHECK(format(family_ia("witt-m24", {}).array) == "{30,28,24;1,3,15}");
    CHECK(format(family_ia("witt-m23", {}).array) == "{15,14,12;1,1,9}");
    CHECK(format(family_ia("ternary-golay", {}).array) == "{24,22,20;1,2,12}");
    CHECK(format(family_ia("triality", std::vector<long long>{2}).array) ==
          "{18,16,16;1,1,9}");
    CHECK(format(family_ia("hexagon", std::vector<long long>{2, 8}).array) ==
          "{18,16,16;1,1,9}");  // triality(q) is the hexagon of order (q, q^3)
    CHECK(format(family_ia("hermitian", std::vector<long long>{3, 2}).array) ==
          "{21,20,16;1,2,12}");
    CHECK(format(family_ia("half-dual-polar", std::vector<long long>{4, 2}).array) ==
          "{70,32;1,35}");
    CHECK(format(family_ia("unitary-dual-polar", std::vector<long long>{2, 2}).array) ==
          "{10,8;1,5}");
}

TEST_CASE("family generators: range errors") {
    CHECK_THROWS_AS(family_ia("octagon", std::vector<long long>{2, 8}), Error);  // s > t^2 fails
    CHECK_THROWS_AS(family_ia("hexagon", std::vector<long long>{2, 9}), Error);
    CHECK_THROWS_AS(family_ia("hexagon", std::vector<long long>{1, 2}), Error);
    CHECK_THROWS_AS(family_ia("nonesuch", std::vector<long long>{}), Error);
    CHECK_THROWS_AS(family_ia("taylor", std::vector<long long>{3}), Error);
    CHECK_THROWS_AS(family_ia("dual-polar", std::vector<long long>{2, 2, 1}), Error);  // q not square
}

TEST_CASE("closed forms: frozen values") {
    CHECK(closed_form_c2_sq("witt-m24", {}) == doctest::Approx(168.0 / 25).epsilon(1e-12));
    CHECK(closed_form_c2_sq("witt-m23", {}) == doctest::Approx(84.0 / 13).epsilon(1e-12));
    CHECK(closed_form_c2_sq("ternary-golay", {}) == doctest::Approx(33.0 / 5).epsilon(1e-12));
    CHECK(closed_form_c2_sq("gosset", {}) == doctest::Approx(3).epsilon(1e-12));
    CHECK(closed_form_c2_sq("odd", std::vector<long long>{3}) ==
          doctest::Approx(27.0 / 7).epsilon(1e-12));
    CHECK(closed_form_c2_sq("hermitian", std::vector<long long>{2, 2}) ==
          doctest::Approx(8.0 / 3).epsilon(1e-12));
    CHECK(closed_form_c2_sq("triality", std::vector<long long>{2}) ==
          doctest::Approx(32.0 / 5).epsilon(1e-12));
    const double s = std::sqrt(68.0);
    CHECK(closed_form_c2_sq("hadamard", std::vector<long long>{34}) ==
          doctest::Approx(9 * (s - 1) / (s + 1)).epsilon(1e-12));
    // Below the crossover the distance-4 expression wins.
    CHECK(closed_form_c2_sq("hadamard", std::vector<long long>{2}) ==
          doctest::Approx(8.0 * (2 - 1) / 2).epsilon(1e-12));
}

TEST_CASE("central cross-validation: closed form equals analyze on the pool") {
    for (const auto& [name, params] : testing::family_pool()) {
        CAPTURE(name);
        const auto inst = family_ia(name, params);
        const auto rep = analyze(inst.array);
        REQUIRE(rep.certified);
        CHECK(rep.c2_sq() ==
              doctest::Approx(closed_form_c2_sq(name, params)).epsilon(1e-9));
    }
}

TEST_CASE("hermitian closed form cross-checks the strongly-regular formula") {
    const auto inst = family_ia("hermitian", std::vector<long long>{2, 2});
    const auto spec = spectrum(inst.array);
    CHECK(spec.theta[2] == doctest::Approx(-3).epsilon(1e-12));
    CHECK(closed_form_c2_sq("hermitian", std::vector<long long>{2, 2}) ==
          doctest::Approx(srg_c2_sq(spec)).epsilon(1e-12));
}

TEST_CASE("classical eigenvalue formula matches the solver after sorting") {
    for (const auto& [name, params] : testing::family_pool()) {
        const auto inst = family_ia(name, params);
        if (!inst.classical) continue;
        auto formula = classical_eigenvalues(*inst.classical);
        std::vector<double> expect;
        for (const auto& th : formula) expect.push_back(to_double(th));
        std::sort(expect.begin(), expect.end(), std::greater<>());
        const auto got = eigenvalues(inst.array);
        REQUIRE(got.size() == expect.size());
        const double k = static_cast<double>(inst.array.k());
        for (std::size_t i = 0; i < got.size(); ++i)
            CHECK(std::fabs(got[i] - expect[i]) <= 1e-7 * k);
    }
}

TEST_CASE("base-1 and base>1 cosine identities at theta_1") {
    for (const auto& [name, params] : testing::family_pool()) {
        const auto inst = family_ia(name, params);
        if (!inst.classical || inst.classical->b < 1 || inst.array.d < 2) continue;
        const auto spec = spectrum(inst.array);
        const double k = static_cast<double>(inst.array.k());
        const long long b = inst.classical->b;
        for (int r = 0; r <= inst.array.d; ++r) {
            const double one_minus = 1.0 - spec.W[1][r];
            double expect;
            if (b == 1) {
                expect = r * (1.0 - spec.theta[1] / k);
            } else {
                const double bb = static_cast<double>(b);
                expect = bb * (1.0 - std::pow(bb, -r)) / (bb - 1.0) *
                         (1.0 - spec.theta[1] / k);
            }
            CHECK(one_minus == doctest::Approx(expect).scale(1).epsilon(1e-9));
        }
    }
}

TEST_CASE("eberlein: Johnson J(5,2) values and the i = 0 product form") {
    CHECK(eberlein(1, 0, 5, 2) == BigInt(6));
    CHECK(eberlein(1, 2, 5, 2) == BigInt(-2));
    CHECK(eberlein(2, 2, 5, 2) == BigInt(1));
    for (long long n : {7LL, 9LL, 11LL})
        for (long long d = 2; 2 * d <= n; ++d)
            for (long long j = 0; j <= d; ++j)
                CHECK(eberlein(j, 0, n, d) == binomial(d, j) * binomial(n - d, j));
    CHECK_THROWS_AS(eberlein(1, 3, 5, 2), Error);
}

TEST_CASE("eberlein: the distance-2 cosine identity of the Johnson scheme") {
    // 1 - E_j(2)/E_j(0) = (4jd^2 - 4j^2 d + 2j(j-1)) / (d (d^2-1)) at n = 2d+1.
    for (long long d = 2; d <= 8; ++d) {
        const long long n = 2 * d + 1;
        for (long long j = 1; j <= d; ++j) {
            const BigRat lhs = 1 - BigRat(eberlein(j, 2, n, d)) / BigRat(eberlein(j, 0, n, d));
            const BigRat rhs = BigRat(4 * j * d * d - 4 * j * j * d + 2 * j * (j - 1)) /
                               BigRat(d * (d * d - 1));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("eberlein: the two expansions of the top eigenvalues agree") {
    for (long long d = 1; d <= 12; ++d)
        for (long long i = 0; i <= d; ++i)
            CHECK(eberlein_top(d, i) == eberlein((d + 1) / 2, i, 2 * d + 1, d));
}

TEST_CASE("eberlein: minimum of the top eigenvalues sits at i = 2") {
    for (long long d = 2; d <= 12; ++d) {
        const BigInt at2 = eberlein_top(d, 2);
        for (long long i = 1; i <= d; ++i) CHECK(at2 <= eberlein_top(d, i));
    }
}

TEST_CASE("odd graphs: cosine rows match the Eberlein ratios at theta = d-1") {
    for (long long d = 2; d <= 6; ++d) {
        const auto inst = family_ia("odd", std::vector<long long>{d});
        const auto spec = spectrum(inst.array);
        CHECK(spec.theta[1] == doctest::Approx(static_cast<double>(d - 1)).epsilon(1e-12));
        for (int r = 1; r <= inst.array.d; ++r) {
            const long long j = (r % 2 == 0) ? r / 2 : (2 * d - r + 1) / 2;
            const double expect = to_double(BigRat(eberlein(j, 2, 2 * d + 1, d)) /
                                            BigRat(eberlein(j, 0, 2 * d + 1, d)));
            CHECK(spec.W[1][r] == doctest::Approx(expect).scale(1).epsilon(1e-9));
        }
    }
}

namespace {

// W matrices of the generalized hexagon/octagon point graphs, transcribed
// directly from the closed-form entries.
std::vector<std::vector<double>> hexagon_w(double s, double t) {
    const double rst = std::sqrt(s * t);
    return {
        {1, 1, 1, 1},
        {1, (s - 1 + rst) / (s * (t + 1)), (-s + (s - 1) * rst) / (s * s * t * (t + 1)),
         -1 / (s * t * rst)},
        {1, (s - 1 - rst) / (s * (t + 1)), (-s - (s - 1) * rst) / (s * s * t * (t + 1)),
         1 / (s * t * rst)},
        {1, -1 / s, 1 / (s * s), -1 / (s * s * s)},
    };
}

std::vector<std::vector<double>> octagon_w(double s, double t) {
    const double r2 = std::sqrt(2 * s * t);
    return {
        {1, 1, 1, 1, 1},
        {1, (s - 1 + r2) / (s * (t + 1)), (s * (t - 1) + (s - 1) * r2) / (s * s * t * (t + 1)),
         ((s - 1) * s * t - s * r2) / (s * s * s * t * t * (t + 1)), -1 / (s * s * t * t)},
        {1, (s - 1) / (s * (t + 1)), -1 / (s * t), -(s - 1) / (s * s * t * (t + 1)),
         1 / (s * s * t * t)},
        {1, (s - 1 - r2) / (s * (t + 1)), (s * (t - 1) - (s - 1) * r2) / (s * s * t * (t + 1)),
         ((s - 1) * s * t + s * r2) / (s * s * s * t * t * (t + 1)), -1 / (s * s * t * t)},
        {1, -1 / s, 1 / (s * s), -1 / (s * s * s), 1 / (s * s * s * s)},
    };
}

}  // namespace

TEST_CASE("generalized polygons: W matrices match the closed-form entries") {
    for (auto [s, t] : {std::pair{2LL, 2LL}, {2LL, 8LL}, {3LL, 3LL}, {4LL, 2LL}}) {
        const auto inst = family_ia("hexagon", std::vector<long long>{s, t});
        const auto spec = spectrum(inst.array);
        const auto expect = hexagon_w(static_cast<double>(s), static_cast<double>(t));
        for (int j = 0; j <= 3; ++j)
            for (int r = 0; r <= 3; ++r)
                CHECK(spec.W[j][r] == doctest::Approx(expect[j][r]).scale(1).epsilon(1e-9));
    }
    // Octagon orders passing s <= t^2, t <= s^2; (2,2) and (3,3) are formal
    // arrays (no graph exists) but the cosine algebra is still exact.
    for (auto [s, t] : {std::pair{2LL, 2LL}, {3LL, 3LL}, {2LL, 4LL}, {4LL, 2LL}}) {
        const auto inst = family_ia("octagon", std::vector<long long>{s, t});
        const auto spec = spectrum(inst.array);
        const auto expect = octagon_w(static_cast<double>(s), static_cast<double>(t));
        for (int j = 0; j <= 4; ++j)
            for (int r = 0; r <= 4; ++r)
                CHECK(spec.W[j][r] == doctest::Approx(expect[j][r]).scale(1).epsilon(1e-9));
    }
}

TEST_CASE("hermitian eigenmatrix: d=2, q=2 row facts and self-duality") {
    const auto v = hermitian_eigenmatrix(2, 2);
    // v_0(theta_i) = 1; valencies in row 0 transposed indexing v[j][i].
    for (int i = 0; i <= 2; ++i) CHECK(v[0][i] == BigRat(1));
    CHECK(v[1][0] == BigRat(5));
    CHECK(v[2][0] == BigRat(10));
    // v_1(theta_i) = theta_i = ((-q)^{2d-i}-1)/(q+1): (5, -3, 1).
    CHECK(v[1][1] == BigRat(-3));
    CHECK(v[1][2] == BigRat(1));

    for (auto [d, q] : {std::pair{2, 2LL}, {3, 2LL}, {2, 3LL}, {3, 3LL}}) {
        const auto m = hermitian_eigenmatrix(d, q);
        // Self-duality w_r(theta_i) = w_i(theta_r), exact.
        for (int r = 0; r <= d; ++r)
            for (int i = 0; i <= d; ++i)
                CHECK(m[r][i] / m[r][0] == m[i][r] / m[i][0]);
        // w_d(theta_j) = 1 / prod_{h<j} ((-q)^{d-h} + 1).
        BigRat prod = 1;
        for (int j = 0; j <= d; ++j) {
            CHECK(m[d][j] / m[d][0] == 1 / prod);
            BigInt pw = 1;
            for (int e = 0; e < d - j; ++e) pw *= -q;
            prod *= BigRat(pw + 1);
        }
    }
}

TEST_CASE("hermitian eigenmatrix matches the recurrence cosines after sorting") {
    for (auto [d, q] : {std::pair{2, 2LL}, {3, 2LL}, {2, 3LL}, {3, 3LL}}) {
        const auto m = hermitian_eigenmatrix(d, q);
        const auto inst = family_ia("hermitian", std::vector<long long>{d, q});
        const auto spec = spectrum(inst.array);
        // theta_i = ((-q)^{2d-i}-1)/(q+1) in formula order; map to sort order.
        for (int i = 0; i <= d; ++i) {
            BigInt pw = 1;
            for (int e = 0; e < 2 * d - i; ++e) pw *= -q;
            const double theta = to_double(BigRat(pw - 1) / BigRat(q + 1));
            int pos = -1;
            for (int j = 0; j <= d; ++j)
                if (std::fabs(spec.theta[j] - theta) < 1e-6) pos = j;
            REQUIRE(pos >= 0);
            for (int r = 0; r <= d; ++r)
                CHECK(spec.W[pos][r] ==
                      doctest::Approx(to_double(m[r][i] / m[r][0])).scale(1).epsilon(1e-9));
        }
    }
}

TEST_CASE("the valency row of the hermitian eigenmatrix matches k_dist") {
    for (auto [d, q] : {std::pair{2, 2LL}, {3, 2LL}, {3, 3LL}}) {
        const auto m = hermitian_eigenmatrix(d, q);
        const auto inst = family_ia("hermitian", std::vector<long long>{d, q});
        for (int jj = 0; jj <= d; ++jj) CHECK(m[jj][0] == inst.array.k_dist[jj]);
    }
}
