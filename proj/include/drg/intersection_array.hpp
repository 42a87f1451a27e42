#pragma once

#include "drg/numeric.hpp"
#include "drg/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace drg {

struct Spectrum;

// Intersection array {b_0,...,b_{d-1}; c_1,...,c_d} of a distance-regular
// graph together with every combinatorially derived quantity. Valencies and
// the vertex count are exact rationals so integrality can be decided exactly.
// Immutable after construction.
struct IntersectionArray {
    int d = 0;
    std::vector<long long> b;       // b_0..b_{d-1}
    std::vector<long long> c;       // c_1..c_d
    std::vector<long long> a;       // a_0..a_d, a_i = k - b_i - c_i
    std::vector<BigRat> k_dist;     // k_0..k_d, k_0 = 1, k_i = k_{i-1} b_{i-1} / c_i
    BigRat n;                       // sum of k_i

    long long k() const { return b[0]; }
    long long b_at(int i) const { return i < d ? b[i] : 0; }   // b_d = 0
    long long c_at(int i) const { return i >= 1 ? c[i - 1] : 0; }  // c_0 = 0

    // Validates c_1 = 1, positivity, a_i >= 0 and derives a, k_dist, n.
    static IntersectionArray make(std::vector<long long> b, std::vector<long long> c);
};

// Grammar: '{' int (',' int)* ';' int (',' int)* '}'. Whitespace allowed
// between tokens. Throws ParseError with byte position on malformed input.
IntersectionArray parse_intersection_array(std::string_view text);

// Canonical form "{b0,...;c1,...}" (no spaces); parse(format(ia)) == ia.
std::string format(const IntersectionArray& ia);

// Cover index r = k_d + 1 when b_i = c_{d-i} for all i except possibly
// floor(d/2) and k_d is a positive integer; empty otherwise.
std::optional<long long> is_antipodal(const IntersectionArray& ia);

// True iff every a_i = 0.
bool is_bipartite(const IntersectionArray& ia);

struct FeasibilityReport {
    bool k_dist_integral = false;
    bool n_integral = false;
    bool b_nonincreasing = false;
    bool c_nondecreasing = false;
    bool multiplicities_integral = false;
    std::vector<double> multiplicities;

    bool feasible() const {
        return k_dist_integral && n_integral && b_nonincreasing && c_nondecreasing &&
               multiplicities_integral;
    }
};

// spec must be spectrum(ia). Report-style: never throws on a failed check.
FeasibilityReport is_feasible(const IntersectionArray& ia, const Spectrum& spec);

// One corpus line: optional "name :" prefix, braces grammar, '#' comment.
// Returns empty for blank/comment-only lines.
struct CorpusLine {
    std::string name;
    IntersectionArray array;
};
std::optional<CorpusLine> parse_corpus_line(std::string_view line);

}  // namespace drg
