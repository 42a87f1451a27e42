#pragma once

#include "drg/conjectures.hpp"
#include "drg/distortion.hpp"
#include "drg/intersection_array.hpp"
#include "drg/oracle.hpp"
#include "drg/spectrum.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace drg {

using Json = nlohmann::ordered_json;

// Full analysis record for one array: echo of the input, feasibility,
// spectrum, distortion report, conjecture verdict (absent for d = 1) and the
// antipodal counterexample flag.
struct Report {
    std::string input;
    std::string kind = "array";       // "array" | "family"
    std::string family;               // family id + params when kind == "family"
    std::string array_text;           // canonical format
    IntersectionArray array;
    Spectrum spec;
    FeasibilityReport feasibility;
    std::optional<long long> antipodal_r;
    bool bipartite = false;
    DistortionReport distortion;
    std::optional<ConjectureVerdict> verdict;   // d >= 2 only
    bool vallentin_counterexample = false;
    std::optional<double> closed_form;          // family runs with a closed form
};

Report make_report(const IntersectionArray& ia, const std::string& input_echo);

Json to_json(const Report& r);
Json to_json(const DistortionReport& r);
Json to_json(const FeasibilityReport& r);
Json to_json(const ConjectureVerdict& v);
Json to_json(const EmbeddingCheck& ec);

// Inverse of to_json(Report); round-trips byte-identically through dump().
Report report_from_json(const Json& j);

// Fixed-width human rendering; floats at 6 significant digits, certified
// values as p/q when rational reconstruction succeeds.
std::string render_human(const Report& r, bool all_r = false);
std::string render_human(const EmbeddingCheck& ec, const std::string& head);

// "35/3 (~11.6667)" when reconstructible, otherwise "%.6g".
std::string format_value(double x);

}  // namespace drg
