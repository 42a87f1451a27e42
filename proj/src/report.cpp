#include "drg/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace drg {

namespace {

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

Json num_or_inf(double x) {
    if (std::isinf(x)) return Json("inf");
    return Json(x);
}

double inf_or_num(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return inf;
        throw Error("expected a number or \"inf\"");
    }
    return j.get<double>();
}

}  // namespace

std::string format_value(double x) {
    if (const auto frac = reconstruct_rational(x)) {
        if (frac->den == 1) return std::to_string(frac->num);
        return std::to_string(frac->num) + "/" + std::to_string(frac->den) + " (~" + fmt6(x) +
               ")";
    }
    return fmt6(x);
}

Report make_report(const IntersectionArray& ia, const std::string& input_echo) {
    Report r;
    r.input = input_echo;
    r.array_text = format(ia);
    r.array = ia;
    r.spec = spectrum(ia);
    r.feasibility = is_feasible(ia, r.spec);
    r.antipodal_r = is_antipodal(ia);
    r.bipartite = is_bipartite(ia);
    r.distortion = analyze(ia, r.spec);
    if (ia.d >= 2) {
        r.verdict = check_conjectures(ia, r.spec);
        if (r.antipodal_r)
            r.vallentin_counterexample = antipodal_counterexample_check(ia, r.spec);
    }
    return r;
}

Json to_json(const FeasibilityReport& f) {
    Json j;
    j["k_dist_integral"] = f.k_dist_integral;
    j["n_integral"] = f.n_integral;
    j["b_nonincreasing"] = f.b_nonincreasing;
    j["c_nondecreasing"] = f.c_nondecreasing;
    j["multiplicities_integral"] = f.multiplicities_integral;
    j["multiplicities"] = f.multiplicities;
    j["feasible"] = f.feasible();
    return j;
}

Json to_json(const DistortionReport& r) {
    Json j;
    j["embedding_distortion_sq"] = r.embedding_distortion_sq;
    j["most_contracted_r"] = r.most_contracted_r;
    Json table = Json::array();
    for (const auto& row : r.bound_table) {
        Json jrow = Json::array();
        for (double e : row) jrow.push_back(num_or_inf(e));
        table.push_back(std::move(jrow));
    }
    j["bound_table"] = std::move(table);
    j["lower_bound_sq_per_r"] = r.lower_bound_sq_per_r;
    j["best_lower_bound_sq"] = r.best_lower_bound_sq;
    j["best_r"] = r.best_r;
    j["small_r_wins"] = r.small_r_wins;
    j["certified"] = r.certified;
    if (r.certified) {
        j["c2_sq"] = r.c2_sq_upper;
    } else {
        j["c2_sq"] = Json{{"lower", r.c2_sq_lower}, {"upper", r.c2_sq_upper}};
    }
    if (r.c2_sq_rational)
        j["c2_sq_rational"] =
            std::to_string(r.c2_sq_rational->num) + "/" + std::to_string(r.c2_sq_rational->den);
    else
        j["c2_sq_rational"] = nullptr;
    return j;
}

Json to_json(const ConjectureVerdict& v) {
    Json j;
    j["conj1_holds"] = v.conj1_holds;
    j["conj1_argmin_r"] = v.conj1_argmin_r;
    j["conj2_holds"] = v.conj2_holds;
    if (v.conj2_witness)
        j["conj2_witness"] = Json{{"r", v.conj2_witness->first}, {"j", v.conj2_witness->second}};
    else
        j["conj2_witness"] = nullptr;
    j["conj3_holds"] = v.conj3_holds;
    j["antipodal_consistent"] = v.antipodal_consistent;
    return j;
}

Json to_json(const EmbeddingCheck& ec) {
    Json j;
    j["theta_index"] = ec.theta_index;
    j["theta"] = ec.theta;
    j["eigenspace_dim"] = ec.eigenspace_dim;
    j["realized_s"] = ec.realized_s;
    j["predicted_s"] = ec.predicted_s;
    j["max_rel_deviation"] = ec.max_rel_deviation;
    j["eig_cosines"] = ec.eig_cosines;
    j["recurrence_cosines"] = ec.recurrence_cosines;
    j["max_cosine_dev"] = ec.max_cosine_dev;
    j["measured_expansion"] = ec.measured_expansion;
    j["measured_distortion_sq"] = ec.measured_distortion_sq;
    return j;
}

Json to_json(const Report& r) {
    Json j;
    j["input"] = r.input;
    j["kind"] = r.kind;
    if (r.kind == "family") j["family"] = r.family;
    j["array"] = r.array_text;
    j["d"] = r.array.d;
    j["k"] = r.array.k();
    j["n"] = to_string(r.array.n);
    j["theta"] = r.spec.theta;
    j["multiplicities"] = r.spec.m;
    j["feasibility"] = to_json(r.feasibility);
    if (r.antipodal_r)
        j["antipodal_r"] = *r.antipodal_r;
    else
        j["antipodal_r"] = nullptr;
    j["bipartite"] = r.bipartite;
    j["distortion"] = to_json(r.distortion);
    if (r.verdict)
        j["conjectures"] = to_json(*r.verdict);
    else
        j["conjectures"] = nullptr;
    j["vallentin_counterexample"] = r.vallentin_counterexample;
    if (r.closed_form)
        j["closed_form_c2_sq"] = *r.closed_form;
    else
        j["closed_form_c2_sq"] = nullptr;
    return j;
}

Report report_from_json(const Json& j) {
    Report r;
    r.input = j.at("input").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    if (r.kind == "family") r.family = j.at("family").get<std::string>();
    r.array_text = j.at("array").get<std::string>();
    r.array = parse_intersection_array(r.array_text);

    r.spec.theta = j.at("theta").get<std::vector<double>>();
    r.spec.m = j.at("multiplicities").get<std::vector<double>>();

    const Json& f = j.at("feasibility");
    r.feasibility.k_dist_integral = f.at("k_dist_integral").get<bool>();
    r.feasibility.n_integral = f.at("n_integral").get<bool>();
    r.feasibility.b_nonincreasing = f.at("b_nonincreasing").get<bool>();
    r.feasibility.c_nondecreasing = f.at("c_nondecreasing").get<bool>();
    r.feasibility.multiplicities_integral = f.at("multiplicities_integral").get<bool>();
    r.feasibility.multiplicities = f.at("multiplicities").get<std::vector<double>>();

    if (!j.at("antipodal_r").is_null()) r.antipodal_r = j.at("antipodal_r").get<long long>();
    r.bipartite = j.at("bipartite").get<bool>();

    const Json& dj = j.at("distortion");
    DistortionReport& d = r.distortion;
    d.embedding_distortion_sq = dj.at("embedding_distortion_sq").get<double>();
    d.most_contracted_r = dj.at("most_contracted_r").get<int>();
    for (const auto& jrow : dj.at("bound_table")) {
        std::vector<double> row;
        for (const auto& e : jrow) row.push_back(inf_or_num(e));
        d.bound_table.push_back(std::move(row));
    }
    d.lower_bound_sq_per_r = dj.at("lower_bound_sq_per_r").get<std::vector<double>>();
    d.best_lower_bound_sq = dj.at("best_lower_bound_sq").get<double>();
    d.best_r = dj.at("best_r").get<int>();
    d.small_r_wins = dj.at("small_r_wins").get<bool>();
    d.certified = dj.at("certified").get<bool>();
    if (d.certified) {
        d.c2_sq_lower = d.c2_sq_upper = dj.at("c2_sq").get<double>();
    } else {
        d.c2_sq_lower = dj.at("c2_sq").at("lower").get<double>();
        d.c2_sq_upper = dj.at("c2_sq").at("upper").get<double>();
    }
    if (!dj.at("c2_sq_rational").is_null()) {
        const auto s = dj.at("c2_sq_rational").get<std::string>();
        const auto slash = s.find('/');
        d.c2_sq_rational = SmallFraction{std::stoll(s.substr(0, slash)),
                                         std::stoll(s.substr(slash + 1))};
    }

    if (!j.at("conjectures").is_null()) {
        const Json& cj = j.at("conjectures");
        ConjectureVerdict v;
        v.conj1_holds = cj.at("conj1_holds").get<bool>();
        v.conj1_argmin_r = cj.at("conj1_argmin_r").get<int>();
        v.conj2_holds = cj.at("conj2_holds").get<bool>();
        if (!cj.at("conj2_witness").is_null())
            v.conj2_witness = std::make_pair(cj.at("conj2_witness").at("r").get<int>(),
                                             cj.at("conj2_witness").at("j").get<int>());
        v.conj3_holds = cj.at("conj3_holds").get<bool>();
        v.antipodal_consistent = cj.at("antipodal_consistent").get<bool>();
        r.verdict = v;
    }
    r.vallentin_counterexample = j.at("vallentin_counterexample").get<bool>();
    if (!j.at("closed_form_c2_sq").is_null())
        r.closed_form = j.at("closed_form_c2_sq").get<double>();
    return r;
}

namespace {

void render_distortion(std::ostringstream& out, const Report& r, bool all_r) {
    const auto& d = r.distortion;
    out << "  embedding distortion^2 : " << format_value(d.embedding_distortion_sq) << "\n";
    out << "  most contracted r      : " << d.most_contracted_r << "\n";
    out << "  best lower bound^2     : " << format_value(d.best_lower_bound_sq) << " (r = "
        << d.best_r << ")\n";
    out << "  certified              : " << (d.certified ? "yes" : "no") << "\n";
    if (d.certified) {
        out << "  c2^2                   : " << format_value(d.c2_sq_upper) << "\n";
    } else {
        out << "  c2^2 in                : [" << fmt6(d.c2_sq_lower) << ", "
            << fmt6(d.c2_sq_upper) << "]\n";
    }
    if (d.small_r_wins)
        out << "  NOTE: some r <= d-2 beats both d-1 and d in the lower bound\n";

    out << "  lower bound^2 by r     :";
    for (std::size_t i = 0; i < d.lower_bound_sq_per_r.size(); ++i)
        out << " r=" << i + 1 << ":" << fmt6(d.lower_bound_sq_per_r[i]);
    out << "\n";
    if (all_r) {
        out << "  bound table r\\j (r^2 (1-w_1(th_j))/(1-w_r(th_j))):\n";
        for (std::size_t ri = 0; ri < d.bound_table.size(); ++ri) {
            out << "    r=" << ri + 1 << ":";
            for (double e : d.bound_table[ri]) {
                char buf[32];
                if (std::isinf(e))
                    std::snprintf(buf, sizeof buf, " %10s", "inf");
                else
                    std::snprintf(buf, sizeof buf, " %10.6g", e);
                out << buf;
            }
            out << "\n";
        }
    }
}

}  // namespace

std::string render_human(const Report& r, bool all_r) {
    std::ostringstream out;
    out << "array  : " << r.array_text;
    if (r.kind == "family") out << "   [" << r.family << "]";
    out << "\n";
    out << "  d = " << r.array.d << ", k = " << r.array.k() << ", n = " << to_string(r.array.n)
        << "\n";
    out << "  eigenvalues            :";
    for (double t : r.spec.theta) out << " " << fmt6(t);
    out << "\n";
    out << "  multiplicities         :";
    for (double m : r.spec.m) out << " " << fmt6(m);
    out << "\n";
    out << "  feasible               : " << (r.feasibility.feasible() ? "yes" : "NO");
    if (!r.feasibility.feasible()) {
        out << " (";
        if (!r.feasibility.k_dist_integral) out << " k_i not integral";
        if (!r.feasibility.n_integral) out << " n not integral";
        if (!r.feasibility.b_nonincreasing) out << " b increasing";
        if (!r.feasibility.c_nondecreasing) out << " c decreasing";
        if (!r.feasibility.multiplicities_integral) out << " multiplicities not integral";
        out << " )";
    }
    out << "\n";
    out << "  antipodal              : "
        << (r.antipodal_r ? ("yes, " + std::to_string(*r.antipodal_r) + "-cover") : "no")
        << "\n";
    out << "  bipartite              : " << (r.bipartite ? "yes" : "no") << "\n";
    render_distortion(out, r, all_r);
    if (r.verdict) {
        const auto& v = *r.verdict;
        out << "  C1 (min at d-1 or d)   : " << (v.conj1_holds ? "holds" : "FAILS")
            << ", argmin r = " << v.conj1_argmin_r
            << (v.antipodal_consistent ? "" : " (argmin < d on a non-antipodal array!)") << "\n";
        out << "  C2 (max over j at j=1) : " << (v.conj2_holds ? "holds" : "FAILS");
        if (v.conj2_witness)
            out << ", witness (r = " << v.conj2_witness->first
                << ", j = " << v.conj2_witness->second << ")";
        out << "\n";
        out << "  C3 (certified at d-1,d): " << (v.conj3_holds ? "holds" : "FAILS") << "\n";
        out << "  counterexample to the original distance-d conjecture: "
            << (r.vallentin_counterexample ? "yes" : "no") << "\n";
    } else {
        out << "  conjecture checks skipped (d = 1: complete graph, c2 = 1)\n";
    }
    if (r.closed_form)
        out << "  family closed form c2^2: " << format_value(*r.closed_form) << "\n";
    return out.str();
}

std::string render_human(const EmbeddingCheck& ec, const std::string& head) {
    std::ostringstream out;
    out << head << "\n";
    out << "  theta_" << ec.theta_index << " = " << fmt6(ec.theta)
        << ", eigenspace dim = " << ec.eigenspace_dim << "\n";
    out << "     r   realized S_r   predicted S_r\n";
    for (std::size_t r = 1; r < ec.realized_s.size(); ++r) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "  %4zu  %13.9f  %14.9f\n", r, ec.realized_s[r],
                      ec.predicted_s[r]);
        out << buf;
    }
    out << "  max relative deviation : " << fmt6(ec.max_rel_deviation) << "\n";
    out << "  max cosine deviation   : " << fmt6(ec.max_cosine_dev) << "\n";
    out << "  measured expansion     : " << fmt6(ec.measured_expansion) << "\n";
    out << "  measured distortion^2  : " << format_value(ec.measured_distortion_sq) << "\n";
    return out.str();
}

}  // namespace drg
