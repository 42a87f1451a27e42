#pragma once

#include "drg/distortion.hpp"
#include "drg/intersection_array.hpp"
#include "drg/spectrum.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace drg {

// Per-instance checks; verdicts never assert the statements in general.
//   C1: min_r (1-w_r(theta_1))/r^2 is attained on {d-1, d}, at d unless the
//       array is antipodal.
//   C2: for every r in 2..d, max_j (1-w_r(theta_j))/(1-w_1(theta_j)) is
//       attained at j = 1 (ties within 1e-9 allowed).
//   C3: the embedding upper bound is met by the best lower bound over
//       r in {d-1, d}, i.e. analyze() certifies through those r.
struct ConjectureVerdict {
    bool conj1_holds = false;
    int conj1_argmin_r = 0;
    bool conj2_holds = false;
    std::optional<std::pair<int, int>> conj2_witness;  // (r, j), j != 1
    bool conj3_holds = false;
    bool antipodal_consistent = false;  // argmin at d unless antipodal

    bool all_hold() const {
        return conj1_holds && conj2_holds && conj3_holds && antipodal_consistent;
    }
};

std::pair<bool, int> check_conjecture1(const Spectrum& spec);
std::pair<bool, std::optional<std::pair<int, int>>> check_conjecture2(const Spectrum& spec);
ConjectureVerdict check_conjectures(const IntersectionArray& ia, const Spectrum& spec);

struct CorpusLineResult {
    enum class Status { ok, check_failed, infeasible, skipped_d1, parse_error, analysis_error };

    std::size_t line_no = 0;  // 1-based
    Status status = Status::parse_error;
    std::string name;
    std::string array_text;   // canonical format when parsed
    std::string error;        // parse/analysis failure message

    std::optional<IntersectionArray> array;
    std::optional<FeasibilityReport> feasibility;
    std::optional<DistortionReport> report;
    std::optional<ConjectureVerdict> verdict;

    bool failed() const {
        return status != Status::ok && status != Status::skipped_d1;
    }
};

struct CorpusResult {
    std::vector<CorpusLineResult> lines;  // ordered by input line number
    std::size_t arrays = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t parse_errors = 0;
    std::size_t skipped = 0;

    bool all_passed() const { return failed == 0 && parse_errors == 0; }
};

// Lines are analyzed independently (and possibly concurrently); results are
// reported in input order. Parse errors are recorded per line and processing
// continues.
CorpusResult check_corpus(const std::vector<std::string>& lines);
CorpusResult check_corpus(std::istream& in);

}  // namespace drg
