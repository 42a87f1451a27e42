#include "drg/conjectures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drg {

std::pair<bool, int> check_conjecture1(const Spectrum& spec) {
    const int d = spec.d();
    if (d < 2) throw Error("conjecture checks need d >= 2");
    const auto& w1 = spec.W[1];

    double full_min = inf, tail_min = inf;
    int argmin = 0;
    for (int r = 1; r <= d; ++r) {
        const double v = (1.0 - w1[r]) / (static_cast<double>(r) * r);
        if (v <= full_min * (1.0 + tol::rel_equality)) {  // ties toward larger r
            if (v < full_min) full_min = v;
            argmin = r;
        }
        if (r >= d - 1) tail_min = std::min(tail_min, v);
    }
    const bool holds = rel_close(full_min, tail_min, tol::rel_equality);
    return {holds, argmin};
}

std::pair<bool, std::optional<std::pair<int, int>>> check_conjecture2(const Spectrum& spec) {
    const int d = spec.d();
    if (d < 2) throw Error("conjecture checks need d >= 2");
    for (int r = 2; r <= d; ++r) {
        const double at_one = (1.0 - spec.W[1][r]) / (1.0 - spec.W[1][1]);
        for (int j = 2; j <= d; ++j) {
            const double at_j = (1.0 - spec.W[j][r]) / (1.0 - spec.W[j][1]);
            // A tie with j = 1 within tolerance is not a violation.
            if (at_j > at_one * (1.0 + tol::rel_equality))
                return {false, std::make_pair(r, j)};
        }
    }
    return {true, std::nullopt};
}

ConjectureVerdict check_conjectures(const IntersectionArray& ia, const Spectrum& spec) {
    ConjectureVerdict v;
    std::tie(v.conj1_holds, v.conj1_argmin_r) = check_conjecture1(spec);
    std::tie(v.conj2_holds, v.conj2_witness) = check_conjecture2(spec);

    const bool antipodal = is_antipodal(ia).has_value();
    v.antipodal_consistent = v.conj1_argmin_r == ia.d || antipodal;

    // Certification through r in {d-1, d} against the embedding upper bound.
    const double tail = std::max(vallentin_bound_sq(spec, ia.d - 1),
                                 vallentin_bound_sq(spec, ia.d));
    const double emb = embedding_distortion_sq(spec).first;
    v.conj3_holds = rel_close(tail, emb, tol::certification);
    return v;
}

namespace {

bool blank_line(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

CorpusLineResult run_line(std::size_t line_no, const std::string& raw) {
    CorpusLineResult res;
    res.line_no = line_no;

    std::optional<CorpusLine> parsed;
    try {
        parsed = parse_corpus_line(raw);
    } catch (const std::exception& e) {
        res.status = CorpusLineResult::Status::parse_error;
        res.error = e.what();
        return res;
    }
    if (!parsed) {  // caller filters blank lines; keep the error path anyway
        res.status = CorpusLineResult::Status::parse_error;
        res.error = "empty line";
        return res;
    }
    res.name = parsed->name;
    res.array_text = format(parsed->array);
    res.array = parsed->array;

    try {
        const auto& ia = *res.array;
        const Spectrum spec = spectrum(ia);
        res.feasibility = is_feasible(ia, spec);
        res.report = analyze(ia, spec);
        if (ia.d < 2) {
            res.status = CorpusLineResult::Status::skipped_d1;
            return res;
        }
        res.verdict = check_conjectures(ia, spec);
        if (!res.feasibility->feasible())
            res.status = CorpusLineResult::Status::infeasible;
        else if (!res.verdict->all_hold())
            res.status = CorpusLineResult::Status::check_failed;
        else
            res.status = CorpusLineResult::Status::ok;
    } catch (const std::exception& e) {
        res.status = CorpusLineResult::Status::analysis_error;
        res.error = e.what();
    }
    return res;
}

}  // namespace

CorpusResult check_corpus(const std::vector<std::string>& lines) {
    std::vector<std::pair<std::size_t, const std::string*>> work;
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (!blank_line(lines[i])) work.emplace_back(i + 1, &lines[i]);

    std::vector<CorpusLineResult> all(work.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(work.size()); ++i)
        all[i] = run_line(work[i].first, *work[i].second);

    CorpusResult out;
    for (auto& res : all) {
        switch (res.status) {
            case CorpusLineResult::Status::ok:
                ++out.arrays;
                ++out.passed;
                break;
            case CorpusLineResult::Status::skipped_d1:
                ++out.arrays;
                ++out.skipped;
                break;
            case CorpusLineResult::Status::parse_error:
                ++out.parse_errors;
                break;
            default:
                ++out.arrays;
                ++out.failed;
                break;
        }
        out.lines.push_back(std::move(res));
    }
    return out;
}

CorpusResult check_corpus(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();  // CRLF corpus files
        lines.push_back(line);
    }
    return check_corpus(lines);
}

}  // namespace drg
