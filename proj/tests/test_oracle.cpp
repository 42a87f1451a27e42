#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drg/distortion.hpp"
#include "drg/oracle.hpp"
#include "support.hpp"

#include <cmath>

using namespace drg;

TEST_CASE("graph construction: sizes, diameters, valencies") {
    const auto pet = build_graph("odd", std::vector<long long>{2});
    CHECK(pet.n == 10);
    CHECK(pet.diameter == 2);

    const auto cube = build_graph("hypercube", std::vector<long long>{4});
    CHECK(cube.n == 16);
    CHECK(cube.diameter == 4);

    const auto j52 = build_graph("johnson", std::vector<long long>{5, 2});
    CHECK(j52.n == 10);
    CHECK(j52.diameter == 2);
    CHECK(j52.adj[0].size() == 6);

    CHECK_THROWS_AS(build_graph("hamming", std::vector<long long>{4, 7}), Error);  // 2401 > cap
    CHECK_THROWS_AS(build_graph("nonesuch", std::vector<long long>{}), Error);
}

TEST_CASE("extract_ia recovers the known arrays") {
    CHECK(format(extract_ia(build_graph("odd", std::vector<long long>{2}))) == "{3,2;1,1}");
    CHECK(format(extract_ia(build_graph("petersen", {}))) == "{3,2;1,1}");
    CHECK(format(extract_ia(build_graph("hypercube", std::vector<long long>{4}))) ==
          "{4,3,2,1;1,2,3,4}");
    CHECK(format(extract_ia(build_graph("johnson", std::vector<long long>{5, 2}))) ==
          "{6,2;1,4}");
    CHECK(format(extract_ia(build_graph("cycle", std::vector<long long>{6}))) ==
          "{2,1,1;1,1,2}");
    CHECK(format(extract_ia(build_graph("cycle", std::vector<long long>{7}))) ==
          "{2,1,1;1,1,1}");
    CHECK(format(extract_ia(build_graph("odd", std::vector<long long>{3}))) ==
          "{4,3,3;1,1,2}");
}

TEST_CASE("extract_ia rejects a path graph with the violating pair") {
    ExplicitGraph path;
    path.kind = "path";
    path.n = 4;
    path.adj = {{1}, {0, 2}, {1, 3}, {2}};
    path.dist = kernels::all_pairs_distances(path.adj);
    path.diameter = 3;
    CHECK_THROWS_WITH_AS(extract_ia(path),
                         doctest::Contains("not distance-regular"), Error);
}

TEST_CASE("embedding check: Petersen measures distortion^2 = 2") {
    const auto ec = spectral_embedding_check(build_graph("petersen", {}), 1);
    CHECK(ec.eigenspace_dim == 5);
    CHECK(ec.theta == doctest::Approx(1).epsilon(1e-12));
    CHECK(ec.measured_expansion == doctest::Approx(1).epsilon(1e-9));
    CHECK(ec.measured_distortion_sq == doctest::Approx(2).epsilon(1e-9));
    CHECK(ec.max_rel_deviation <= 1e-9);
    CHECK(ec.max_cosine_dev <= 1e-9);
}

TEST_CASE("embedding check: 4-cube at theta_1 gives d = 4") {
    const auto ec = spectral_embedding_check(build_graph("hypercube", std::vector<long long>{4}), 1);
    CHECK(ec.measured_distortion_sq == doctest::Approx(4).epsilon(1e-9));
    CHECK(ec.eigenspace_dim == 4);
}

TEST_CASE("embedding check: odd(3) matches the closed form 27/7") {
    const auto g = build_graph("odd", std::vector<long long>{3});
    CHECK(g.n == 35);
    const auto ec = spectral_embedding_check(g, 1);
    CHECK(ec.measured_distortion_sq == doctest::Approx(27.0 / 7).epsilon(1e-7));
}

TEST_CASE("embedding check: non-principal eigenvalue still reproduces S_r") {
    // theta_2 of the Petersen graph: the embedding is fine, just not optimal.
    const auto ec = spectral_embedding_check(build_graph("petersen", {}), 2);
    CHECK(ec.eigenspace_dim == 4);
    CHECK(ec.max_rel_deviation <= 1e-9);
    CHECK(ec.measured_expansion == doctest::Approx(1).epsilon(1e-9));
}

TEST_CASE("oracle graphs agree with analyze end to end") {
    struct Case { const char* kind; std::vector<long long> params; };
    const Case cases[] = {
        {"petersen", {}}, {"hypercube", {2}}, {"hypercube", {3}}, {"hypercube", {5}},
        {"hamming", {2, 3}}, {"johnson", {5, 2}}, {"odd", {3}}, {"cycle", {8}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.kind);
        const auto g = build_graph(c.kind, c.params);
        const auto ia = extract_ia(g);
        const auto rep = analyze(ia);
        const auto ec = spectral_embedding_check(g, 1);
        CHECK(ec.measured_distortion_sq ==
              doctest::Approx(rep.embedding_distortion_sq).epsilon(1e-7));
        CHECK(ec.measured_expansion == doctest::Approx(1).epsilon(1e-9));
        for (std::size_t r = 0; r < ec.eig_cosines.size(); ++r)
            CHECK(ec.eig_cosines[r] ==
                  doctest::Approx(ec.recurrence_cosines[r]).scale(1).epsilon(1e-7));
    }
}

TEST_CASE("qalpha: Petersen r=2 certifies the bound 2 with alpha* = 1/4") {
    const auto ia = parse_intersection_array("{3,2;1,1}");
    const auto spec = spectrum(ia);
    const auto [alpha, bound] = qalpha_certificate(ia, spec, 2);
    CHECK(alpha == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(bound == doctest::Approx(2).epsilon(1e-12));
}

TEST_CASE("qalpha: r=1 is the trivial self-bound 1") {
    for (const auto& ia : testing::corpus_arrays()) {
        const auto spec = spectrum(ia);
        const auto [alpha, bound] = qalpha_certificate(ia, spec, 1);
        CHECK(bound == doctest::Approx(1).epsilon(1e-9));
    }
}

TEST_CASE("qalpha: Hadamard mu=34 r=3 reproduces the distance-3 bound") {
    const auto inst = family_ia("hadamard", std::vector<long long>{34});
    const auto spec = spectrum(inst.array);
    const double s = std::sqrt(68.0);
    const auto [alpha, bound] = qalpha_certificate(inst.array, spec, 3);
    CHECK(bound == doctest::Approx(9 * (s - 1) / (s + 1)).epsilon(1e-9));
}

TEST_CASE("qalpha equals the Vallentin bound for every corpus (array, r)") {
    for (const auto& ia : testing::corpus_arrays()) {
        const auto spec = spectrum(ia);
        for (int r = 1; r <= ia.d; ++r) {
            const auto [alpha, bound] = qalpha_certificate(ia, spec, r);
            CHECK(bound == doctest::Approx(vallentin_bound_sq(spec, r)).epsilon(1e-9));
        }
    }
}
