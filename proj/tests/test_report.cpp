#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drg/report.hpp"
#include "support.hpp"

#include <cmath>

using namespace drg;

TEST_CASE("rational reconstruction accepts true fractions, rejects irrationals") {
    const auto f = reconstruct_rational(35.0 / 3.0);
    REQUIRE(f.has_value());
    CHECK(f->num == 35);
    CHECK(f->den == 3);

    const auto g = reconstruct_rational(368.0 / 35.0);
    REQUIRE(g.has_value());
    CHECK(g->num == 368);
    CHECK(g->den == 35);

    CHECK(reconstruct_rational(7.2).has_value());
    CHECK_FALSE(reconstruct_rational(4 * std::sqrt(2.0)).has_value());
    CHECK_FALSE(reconstruct_rational(9 * (std::sqrt(68.0) - 1) / (std::sqrt(68.0) + 1))
                    .has_value());
    // The three decimal corpus rows are quadratic irrationals.
    for (const char* text : {"{76,75,6,1;1,6,75,76}", "{85,84,5,1;1,5,84,85}",
                             "{116,115,10,1;1,10,115,116}"}) {
        const auto rep = analyze(parse_intersection_array(text));
        CHECK_FALSE(rep.c2_sq_rational.has_value());
    }
}

TEST_CASE("format_value renders fractions and plain decimals") {
    CHECK(format_value(35.0 / 3.0) == "35/3 (~11.6667)");
    CHECK(format_value(2.0) == "2");
    CHECK(format_value(7.147728507100475) == "7.14773");
}

TEST_CASE("JSON round-trips byte-identically through its own parser") {
    for (const char* text :
         {"{3,2;1,1}", "{22,21,20,3,2,1;1,2,3,20,21,22}", "{2;1}", "{3,1;1,1}",
          "{5,2,1;1,2,5}"}) {
        const auto rep = make_report(parse_intersection_array(text), text);
        const Json j = to_json(rep);
        const auto parsed = report_from_json(j);
        CHECK(to_json(parsed).dump(2) == j.dump(2));
        // And through a serialize/deserialize cycle of the JSON text itself.
        const auto reparsed = Json::parse(j.dump(2));
        CHECK(to_json(report_from_json(reparsed)).dump(2) == j.dump(2));
    }
}

TEST_CASE("JSON: uncertified reports carry an interval") {
    const auto ia = parse_intersection_array("{3,2;1,1}");
    auto rep = make_report(ia, "{3,2;1,1}");
    rep.distortion = analyze(ia, rep.spec, -1.0);  // force certification off
    const Json j = to_json(rep);
    REQUIRE(j.at("distortion").at("c2_sq").is_object());
    CHECK(j.at("distortion").at("c2_sq").at("lower").get<double>() ==
          doctest::Approx(2).epsilon(1e-9));
    const auto round = report_from_json(j);
    CHECK(to_json(round).dump() == j.dump());
}

TEST_CASE("JSON: infinite bound-table entries survive the round trip") {
    const auto rep =
        make_report(parse_intersection_array("{4,3,2,1;1,2,3,4}"), "{4,3,2,1;1,2,3,4}");
    const Json j = to_json(rep);
    bool saw_inf = false;
    for (const auto& row : j.at("distortion").at("bound_table"))
        for (const auto& e : row)
            if (e.is_string()) saw_inf = true;
    CHECK(saw_inf);  // bipartite antipodal arrays have w_d(theta_j) = 1 rows
    CHECK(to_json(report_from_json(j)).dump() == j.dump());
}

TEST_CASE("human rendering contains the load-bearing lines") {
    const auto rep = make_report(parse_intersection_array("{22,21,20,3,2,1;1,2,3,20,21,22}"),
                                 "{22,21,20,3,2,1;1,2,3,20,21,22}");
    const auto text = render_human(rep, true);
    CHECK(text.find("c2^2") != std::string::npos);
    CHECK(text.find("35/3") != std::string::npos);
    CHECK(text.find("certified              : yes") != std::string::npos);
    CHECK(text.find("2-cover") != std::string::npos);
    CHECK(text.find("bound table") != std::string::npos);
    CHECK(text.find("counterexample to the original distance-d conjecture: yes") !=
          std::string::npos);

    const auto d1 = render_human(make_report(parse_intersection_array("{2;1}"), "{2;1}"), false);
    CHECK(d1.find("checks skipped") != std::string::npos);
}
