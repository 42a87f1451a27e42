#pragma once

#include <span>
#include <string>
#include <vector>

namespace drg {

// Reference tables shipped with the tool. Expected values are compared
// against freshly computed ones by the `table` subcommand and the acceptance
// suite. decimal_approx marks rows whose printed value is a 6-digit rounding
// (compared at 1e-5) rather than an exact rational (compared at 1e-9).
struct CorpusTableRow {
    const char* name;  // corpus-line name, may be empty
    int d;
    long long v;
    const char* array;
    const char* c2_display;
    double c2_sq;
    bool decimal_approx;
    const char* comment;
};

// Representative instance for one named-family row; expected value is the
// family closed form, computed rather than frozen.
struct FamilyTableRow {
    const char* display_name;
    const char* family;
    std::vector<long long> params;
};

// ids: "3.5a" (antipodal, not bipartite), "3.5b" (antipodal bipartite),
// "5.1a" (classical base >= 1), "5.1b" (classical base <= -1).
std::span<const CorpusTableRow> corpus_table(const std::string& id);
std::span<const FamilyTableRow> family_table(const std::string& id);
const std::vector<std::string>& table_ids();

// The two corpus tables rendered in the shipped corpus-file format.
std::string corpus_file_text();

}  // namespace drg
