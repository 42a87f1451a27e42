#include "drg/conjectures.hpp"
#include "drg/families.hpp"
#include "drg/oracle.hpp"
#include "drg/report.hpp"
#include "drg/tables.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;   // parse errors, mismatches, failed checks
constexpr int exit_infeasible = 2;

drg::BigRat parse_bigrat(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return drg::BigRat(drg::BigInt(s));
        return drg::BigRat(drg::BigInt(s.substr(0, slash)), drg::BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw drg::Error("cannot parse rational '" + s + "' (expected p or p/q)");
    }
}

long long parse_ll(const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw drg::Error("not an integer: '" + s + "'");
    return v;
}

void print_report(const drg::Report& rep, bool json, bool all_r) {
    if (json)
        std::cout << drg::to_json(rep).dump(2) << "\n";
    else
        std::cout << drg::render_human(rep, all_r);
}

int report_exit(const drg::Report& rep) {
    return rep.feasibility.feasible() ? exit_ok : exit_infeasible;
}

int cmd_analyze(const std::string& text, double tol, bool json, bool all_r) {
    const auto ia = drg::parse_intersection_array(text);
    drg::Report rep = drg::make_report(ia, text);
    if (tol > 0) rep.distortion = drg::analyze(ia, rep.spec, tol);
    print_report(rep, json, all_r);
    return report_exit(rep);
}

int cmd_family(const std::string& name, const std::vector<std::string>& raw_params, double tol,
               bool json, bool all_r) {
    drg::Report rep;
    std::string echo = name;
    for (const auto& p : raw_params) echo += " " + p;

    if (name == "classical") {
        if (raw_params.size() != 4)
            throw drg::Error("family classical takes: d b alpha beta");
        drg::ClassicalParameters cp;
        cp.d = static_cast<int>(parse_ll(raw_params[0]));
        cp.b = parse_ll(raw_params[1]);
        cp.alpha = parse_bigrat(raw_params[2]);
        cp.beta = parse_bigrat(raw_params[3]);
        rep = drg::make_report(drg::classical_to_ia(cp), echo);
    } else {
        std::vector<long long> params;
        for (const auto& p : raw_params) params.push_back(parse_ll(p));
        const auto inst = drg::family_ia(name, params);
        rep = drg::make_report(inst.array, echo);
        try {
            rep.closed_form = drg::closed_form_c2_sq(name, params);
        } catch (const drg::Error&) {
            // no closed form registered for this family
        }
    }
    rep.kind = "family";
    rep.family = echo;
    if (tol > 0) rep.distortion = drg::analyze(rep.array, rep.spec, tol);

    print_report(rep, json, all_r);
    if (rep.closed_form && rep.distortion.certified &&
        !drg::rel_close(*rep.closed_form, rep.distortion.c2_sq()))
        return exit_failure;
    return report_exit(rep);
}

void print_corpus_line(const drg::CorpusLineResult& res, bool json, bool all_r) {
    using Status = drg::CorpusLineResult::Status;
    if (json) {
        drg::Json j;
        j["line"] = res.line_no;
        j["name"] = res.name;
        switch (res.status) {
            case Status::ok: j["status"] = "ok"; break;
            case Status::check_failed: j["status"] = "check_failed"; break;
            case Status::infeasible: j["status"] = "infeasible"; break;
            case Status::skipped_d1: j["status"] = "skipped_d1"; break;
            case Status::parse_error: j["status"] = "parse_error"; break;
            case Status::analysis_error: j["status"] = "analysis_error"; break;
        }
        if (!res.error.empty()) j["error"] = res.error;
        if (res.array) j["array"] = res.array_text;
        if (res.feasibility) j["feasibility"] = drg::to_json(*res.feasibility);
        if (res.report) j["distortion"] = drg::to_json(*res.report);
        if (res.verdict) j["conjectures"] = drg::to_json(*res.verdict);
        std::cout << j.dump() << "\n";
        return;
    }

    std::printf("line %3zu  ", res.line_no);
    if (!res.name.empty()) std::printf("%-30s ", res.name.c_str());
    switch (res.status) {
        case Status::parse_error:
            std::printf("PARSE ERROR: %s\n", res.error.c_str());
            return;
        case Status::analysis_error:
            std::printf("%s  ANALYSIS ERROR: %s\n", res.array_text.c_str(), res.error.c_str());
            return;
        case Status::skipped_d1:
            std::printf("%s  d=1, checks skipped (c2^2 = 1)\n", res.array_text.c_str());
            return;
        default:
            break;
    }
    const auto& rep = *res.report;
    std::printf("%-46s c2^2 = %-18s %s", res.array_text.c_str(),
                drg::format_value(rep.certified ? rep.c2_sq() : rep.c2_sq_upper).c_str(),
                rep.certified ? "certified" : "UNCERTIFIED");
    if (res.status == Status::infeasible) std::printf("  INFEASIBLE");
    if (res.verdict && !res.verdict->all_hold()) std::printf("  CHECKS FAILED");
    std::printf("\n");

    if (res.status != Status::ok && res.verdict) {
        const auto& v = *res.verdict;
        std::printf("  C1 %s (argmin r = %d)  C2 %s  C3 %s  antipodal-consistency %s\n",
                    v.conj1_holds ? "ok" : "FAIL", v.conj1_argmin_r,
                    v.conj2_holds ? "ok" : "FAIL", v.conj3_holds ? "ok" : "FAIL",
                    v.antipodal_consistent ? "ok" : "FAIL");
        if (v.conj2_witness)
            std::printf("  C2 witness: r = %d, j = %d\n", v.conj2_witness->first,
                        v.conj2_witness->second);
        // Full bound table for diagnosis.
        for (std::size_t r = 0; r < rep.bound_table.size(); ++r) {
            std::printf("  r=%zu:", r + 1);
            for (double e : rep.bound_table[r])
                if (std::isinf(e)) std::printf(" %10s", "inf");
                else std::printf(" %10.6g", e);
            std::printf("\n");
        }
    }
    (void)all_r;
}

int cmd_corpus(const std::string& path, bool json, bool keep_going, bool all_r) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open corpus file: " << path << "\n";
        return exit_failure;
    }
    const auto result = drg::check_corpus(in);
    for (const auto& res : result.lines) print_corpus_line(res, json, all_r);

    if (json) {
        drg::Json j;
        j["summary"] = {{"arrays", result.arrays},
                        {"passed", result.passed},
                        {"failed", result.failed},
                        {"parse_errors", result.parse_errors},
                        {"skipped", result.skipped}};
        std::cout << j.dump() << "\n";
    } else {
        std::printf("%zu arrays: %zu passed, %zu failed, %zu parse errors, %zu skipped\n",
                    result.arrays, result.passed, result.failed, result.parse_errors,
                    result.skipped);
    }
    if (keep_going) return exit_ok;
    return result.all_passed() ? exit_ok : exit_failure;
}

int cmd_oracle(const std::string& kind, const std::vector<std::string>& raw_params,
               int theta_index, bool json) {
    std::vector<long long> params;
    for (const auto& p : raw_params) params.push_back(parse_ll(p));
    const auto g = drg::build_graph(kind, params);
    const auto ia = drg::extract_ia(g);
    const auto ec = drg::spectral_embedding_check(g, theta_index);
    const auto rep = drg::analyze(ia);

    std::string echo = kind;
    for (const auto& p : raw_params) echo += " " + p;
    if (json) {
        drg::Json j = drg::to_json(ec);
        j["graph"] = echo;
        j["n"] = g.n;
        j["array"] = drg::format(ia);
        j["analyze_c2_sq"] = rep.certified ? rep.c2_sq() : rep.c2_sq_upper;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << drg::render_human(
            ec, "graph " + echo + ": n = " + std::to_string(g.n) + ", array " + drg::format(ia));
        std::cout << "  analyze c2^2           : "
                  << drg::format_value(rep.certified ? rep.c2_sq() : rep.c2_sq_upper) << "\n";
    }
    const bool match = drg::rel_close(ec.measured_distortion_sq, rep.embedding_distortion_sq,
                                      1e-7);
    return match ? exit_ok : exit_failure;
}

int cmd_table(const std::string& id, bool json) {
    bool all_ok = true;
    drg::Json jout = drg::Json::array();

    if (id == "3.5a" || id == "3.5b") {
        for (const auto& row : drg::corpus_table(id)) {
            const auto ia = drg::parse_intersection_array(row.array);
            const auto rep = drg::analyze(ia);
            const double got = rep.certified ? rep.c2_sq() : rep.c2_sq_upper;
            const double tolerance = row.decimal_approx ? 1e-5 : 1e-9;
            const bool ok = rep.certified && drg::rel_close(got, row.c2_sq, tolerance);
            all_ok = all_ok && ok;
            if (json) {
                drg::Json j;
                j["d"] = row.d;
                j["v"] = row.v;
                j["array"] = row.array;
                j["expected"] = row.c2_display;
                j["computed"] = got;
                j["match"] = ok;
                if (row.comment[0]) j["comment"] = row.comment;
                jout.push_back(std::move(j));
            } else {
                std::printf("%d  %6lld  %-46s %-10s computed %-12.8g %s%s%s\n", row.d,
                            static_cast<long long>(row.v), row.array, row.c2_display, got,
                            ok ? "ok" : "MISMATCH", row.comment[0] ? "  # " : "",
                            row.comment);
            }
        }
    } else {
        for (const auto& row : drg::family_table(id)) {
            const auto inst = drg::family_ia(row.family, row.params);
            const auto rep = drg::analyze(inst.array);
            const double got = rep.certified ? rep.c2_sq() : rep.c2_sq_upper;
            const double want = drg::closed_form_c2_sq(row.family, row.params);
            const bool ok = rep.certified && drg::rel_close(got, want, 1e-9);
            all_ok = all_ok && ok;
            if (json) {
                drg::Json j;
                j["name"] = row.display_name;
                j["family"] = row.family;
                j["params"] = row.params;
                j["array"] = drg::format(inst.array);
                j["closed_form"] = want;
                j["computed"] = got;
                j["match"] = ok;
                jout.push_back(std::move(j));
            } else {
                std::printf("%-38s %-32s closed form %-12.8g computed %-12.8g %s\n",
                            row.display_name, drg::format(inst.array).c_str(), want, got,
                            ok ? "ok" : "MISMATCH");
            }
        }
    }
    if (json) std::cout << jout.dump(2) << "\n";
    return all_ok ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"least-distortion Euclidean embedding data for distance-regular graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after a subcommand too

    bool json = false, all_r = false, keep_going = false;
    double tolerance = 0;  // 0: module default
    app.add_flag("--json", json, "structured output");
    app.add_flag("--all-r", all_r, "print the full bound table");
    app.add_option("--tol", tolerance, "certification tolerance (relative)");

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one intersection array");
    std::string array_text;
    analyze_cmd->add_option("array", array_text, "e.g. \"{3,2;1,1}\"")->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "run the checks over a corpus file");
    std::string corpus_path;
    corpus_cmd->add_option("path", corpus_path, "corpus file")->required();
    corpus_cmd->add_flag("--keep-going", keep_going, "exit 0 even when lines fail");

    auto* family_cmd = app.add_subcommand("family", "generate and analyze a named family");
    std::string family_name;
    std::vector<std::string> family_params;
    family_cmd->add_option("name", family_name, "family id (see --list)");
    family_cmd->add_option("params", family_params, "family parameters");
    bool list_families = false;
    family_cmd->add_flag("--list", list_families, "list family ids");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force check on an explicit graph");
    std::string graph_kind;
    std::vector<std::string> graph_params;
    int theta_index = 1;
    oracle_cmd->add_option("kind", graph_kind,
                           "hypercube|hamming|johnson|odd|cycle|petersen")->required();
    oracle_cmd->add_option("params", graph_params, "graph parameters");
    oracle_cmd->add_option("--theta-index", theta_index, "eigenvalue by descending position");

    auto* table_cmd = app.add_subcommand("table", "recompute a shipped reference table");
    std::string table_id;
    table_cmd->add_option("id", table_id, "3.5a | 3.5b | 5.1a | 5.1b")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(array_text, tolerance, json, all_r);
        if (corpus_cmd->parsed()) return cmd_corpus(corpus_path, json, keep_going, all_r);
        if (family_cmd->parsed()) {
            if (list_families) {
                for (const auto& n : drg::family_names()) std::cout << n << "\n";
                return exit_ok;
            }
            if (family_name.empty()) throw drg::Error("family name required (or --list)");
            return cmd_family(family_name, family_params, tolerance, json, all_r);
        }
        if (oracle_cmd->parsed()) return cmd_oracle(graph_kind, graph_params, theta_index, json);
        if (table_cmd->parsed()) return cmd_table(table_id, json);
    } catch (const drg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}
