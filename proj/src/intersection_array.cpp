#include "drg/intersection_array.hpp"

#include "drg/spectrum.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace drg {

IntersectionArray IntersectionArray::make(std::vector<long long> b, std::vector<long long> c) {
    if (b.empty() || b.size() != c.size())
        throw Error("intersection array needs equal-length nonempty b- and c-sequences");
    IntersectionArray ia;
    ia.d = static_cast<int>(b.size());
    ia.b = std::move(b);
    ia.c = std::move(c);

    for (int i = 0; i < ia.d; ++i) {
        if (ia.b[i] <= 0)
            throw Error("b_" + std::to_string(i) + " must be positive, got " +
                        std::to_string(ia.b[i]));
        if (ia.c[i] <= 0)
            throw Error("c_" + std::to_string(i + 1) + " must be positive, got " +
                        std::to_string(ia.c[i]));
    }
    if (ia.c[0] != 1) throw Error("c_1 must be 1, got " + std::to_string(ia.c[0]));

    const long long k = ia.b[0];
    ia.a.resize(ia.d + 1);
    for (int i = 0; i <= ia.d; ++i) {
        ia.a[i] = k - ia.b_at(i) - ia.c_at(i);
        if (ia.a[i] < 0)
            throw Error("a_" + std::to_string(i) + " = k - b_" + std::to_string(i) + " - c_" +
                        std::to_string(i) + " is negative (" + std::to_string(ia.a[i]) + ")");
    }

    ia.k_dist.assign(ia.d + 1, BigRat(1));
    for (int i = 1; i <= ia.d; ++i)
        ia.k_dist[i] = ia.k_dist[i - 1] * BigRat(ia.b[i - 1]) / BigRat(ia.c[i - 1]);
    ia.n = 0;
    for (const auto& ki : ia.k_dist) ia.n += ki;
    return ia;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char ch) {
        skip_ws();
        if (pos < s.size() && s[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    long long integer() {
        skip_ws();
        const std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = 0;
        long long v = 0;
        bool neg = start < pos && s[start] == '-';
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            const int dgt = s[pos] - '0';
            if (v > (9'000'000'000'000'000'000LL - dgt) / 10) fail("integer out of range");
            v = v * 10 + dgt;
            ++pos;
            ++digits;
        }
        if (digits == 0) fail("expected an integer");
        return neg ? -v : v;
    }

    std::vector<long long> int_list(char stop) {
        std::vector<long long> out;
        out.push_back(integer());
        while (true) {
            skip_ws();
            if (pos >= s.size()) fail(std::string("expected ',' or '") + stop + "'");
            if (s[pos] == ',') {
                ++pos;
                out.push_back(integer());
            } else if (s[pos] == stop) {
                return out;
            } else {
                fail(std::string("expected ',' or '") + stop + "'");
            }
        }
    }
};

}  // namespace

IntersectionArray parse_intersection_array(std::string_view text) {
    Cursor cur{text};
    if (!cur.eat('{')) cur.fail("expected '{'");
    auto b = cur.int_list(';');
    cur.eat(';');
    auto c = cur.int_list('}');
    cur.eat('}');
    cur.skip_ws();
    if (cur.pos != text.size()) cur.fail("trailing characters after '}'");
    if (b.size() != c.size())
        throw ParseError("length mismatch: " + std::to_string(b.size()) + " b-entries vs " +
                             std::to_string(c.size()) + " c-entries",
                         cur.pos);
    return IntersectionArray::make(std::move(b), std::move(c));
}

std::string format(const IntersectionArray& ia) {
    std::ostringstream out;
    out << '{';
    for (int i = 0; i < ia.d; ++i) out << (i ? "," : "") << ia.b[i];
    out << ';';
    for (int i = 0; i < ia.d; ++i) out << (i ? "," : "") << ia.c[i];
    out << '}';
    return out.str();
}

std::optional<long long> is_antipodal(const IntersectionArray& ia) {
    for (int i = 0; i <= ia.d; ++i) {
        if (i == ia.d / 2) continue;
        if (ia.b_at(i) != ia.c_at(ia.d - i)) return std::nullopt;
    }
    const BigRat& kd = ia.k_dist[ia.d];
    if (!is_integer(kd) || kd <= 0) return std::nullopt;
    return numerator(kd).convert_to<long long>() + 1;  // G_d is a union of K_{k_d + 1}
}

bool is_bipartite(const IntersectionArray& ia) {
    for (long long ai : ia.a)
        if (ai != 0) return false;
    return true;
}

FeasibilityReport is_feasible(const IntersectionArray& ia, const Spectrum& spec) {
    FeasibilityReport rep;
    rep.k_dist_integral = true;
    for (const auto& ki : ia.k_dist)
        if (!is_integer(ki)) rep.k_dist_integral = false;
    rep.n_integral = is_integer(ia.n);

    rep.b_nonincreasing = true;
    for (int i = 0; i + 1 < ia.d; ++i)
        if (ia.b[i] < ia.b[i + 1]) rep.b_nonincreasing = false;
    rep.c_nondecreasing = true;
    for (int i = 0; i + 1 < ia.d; ++i)
        if (ia.c[i] > ia.c[i + 1]) rep.c_nondecreasing = false;

    rep.multiplicities = spec.m;
    rep.multiplicities_integral = true;
    for (double mj : spec.m)
        if (std::fabs(mj - std::round(mj)) > tol::multiplicity_integral)
            rep.multiplicities_integral = false;
    return rep;
}

std::optional<CorpusLine> parse_corpus_line(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);

    std::size_t begin = 0, end = line.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
    if (begin == end) return std::nullopt;

    CorpusLine out;
    std::string_view body = line.substr(begin, end - begin);
    const auto brace = body.find('{');
    if (const auto colon = body.find(':');
        colon != std::string_view::npos && (brace == std::string_view::npos || colon < brace)) {
        std::string_view name = body.substr(0, colon);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.remove_suffix(1);
        out.name = std::string(name);
        body.remove_prefix(colon + 1);
    }
    out.array = parse_intersection_array(body);
    return out;
}

}  // namespace drg
