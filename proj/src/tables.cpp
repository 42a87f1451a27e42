#include "drg/tables.hpp"

#include "drg/numeric.hpp"

#include <cstdio>
#include <sstream>

namespace drg {

namespace {

// Antipodal, not bipartite, diameter >= 4, at most 2048 vertices.
const CorpusTableRow table_35a[] = {
    {"", 4, 1104, "{76,75,6,1;1,6,75,76}", "~7.14773", 7.14773, true, ""},
    {"", 4, 1600, "{85,84,5,1;1,5,84,85}", "~7.23867", 7.23867, true, ""},
    {"", 4, 1568, "{116,115,10,1;1,10,115,116}", "~7.47073", 7.47073, true, ""},
    {"", 4, 1232, "{135,128,18,1;1,18,128,135}", "7.2", 7.2, false, "G_{1,2} SRG"},
    {"", 4, 1850, "{154,150,15,1;1,15,150,154}", "7.5", 7.5, false, ""},
    {"", 4, 2000, "{243,224,36,1;1,36,224,243}", "7.2", 7.2, false, ""},
    {"shortened-golay-coset", 6, 2048, "{22,21,20,3,2,1;1,2,3,20,21,22}", "35/3", 35.0 / 3.0,
     false, "coset graph of the shortened binary Golay code"},
};

// Antipodal and bipartite, diameter >= 5.
const CorpusTableRow table_35b[] = {
    {"", 5, 704, "{26,25,24,2,1;1,2,24,25,26}", "10", 10.0, false, ""},
    {"", 5, 420, "{33,32,27,6,1;1,6,27,32,33}", "64/7", 64.0 / 7.0, false, ""},
    {"", 5, 704, "{36,35,32,4,1;1,4,32,35,36}", "112/11", 112.0 / 11.0, false, ""},
    {"", 5, 1408, "{37,36,35,2,1;1,2,35,36,37}", "120/11", 120.0 / 11.0, false, ""},
    {"", 5, 532, "{45,44,36,9,1;1,9,36,44,45}", "176/19", 176.0 / 19.0, false, ""},
    {"", 5, 784, "{46,45,40,6,1;1,6,40,45,46}", "72/7", 72.0 / 7.0, false, ""},
    {"", 5, 1276, "{49,48,45,4,1;1,4,45,48,49}", "320/29", 320.0 / 29.0, false, ""},
    {"", 5, 1300, "{55,54,50,5,1;1,5,50,54,55}", "144/13", 144.0 / 13.0, false, ""},
    {"", 5, 648, "{57,56,45,12,1;1,12,45,56,57}", "28/3", 28.0 / 3.0, false, "Q-pol."},
    {"", 5, 1104, "{76,75,64,12,1;1,12,64,75,76}", "240/23", 240.0 / 23.0, false, ""},
    {"", 5, 1600, "{85,84,75,10,1;1,10,75,84,85}", "11.2", 11.2, false, ""},
    {"", 5, 1334, "{96,95,80,16,1;1,16,80,95,96}", "304/29", 304.0 / 29.0, false, ""},
    {"", 5, 1568, "{116,115,96,20,1;1,20,96,115,116}", "368/35", 368.0 / 35.0, false, "Q-pol."},
    {"", 7, 4114, "{16,15,15,14,2,1,1;1,1,2,14,15,15,16}", "180/11", 180.0 / 11.0, false, ""},
    {"truncated-golay-double-coset", 7, 2048, "{22,21,20,16,6,2,1;1,2,6,16,20,21,22}", "13.5",
     13.5, false, "double coset graph of the truncated binary Golay code"},
    {"golay-double-coset", 7, 4096, "{23,22,21,20,3,2,1;1,2,3,20,21,22,23}", "15.75", 15.75,
     false, "double coset graph of the binary Golay code"},
    {"", 7, 19140, "{105,104,100,75,30,5,1;1,5,30,75,100,104,105}", "468/29", 468.0 / 29.0,
     false, ""},
};

// Classical families with base b >= 1, one representative instance per row.
const FamilyTableRow table_51a[] = {
    {"Hamming H(3,3)", "hamming", {3, 3}},
    {"Johnson J(7,3)", "johnson", {7, 3}},
    {"Halved 7-cube", "halved-cube", {7}},
    {"Doob (d=2)", "doob", {2}},
    {"Grassmann J_2(4,2)", "grassmann", {4, 2, 2}},
    {"Twisted Grassmann (d=2, q=2)", "twisted-grassmann", {2, 2}},
    {"Bilinear forms H_2(3,3)", "bilinear", {3, 3, 2}},
    {"Dual polar D_3(2)", "dual-polar", {3, 2, 0}},
    {"Alternating forms Alt(4,2)", "alternating", {4, 2}},
    {"Quadratic forms Quad(3,2)", "quadratic", {3, 2}},
    {"Half dual polar D_{4,4}(2)", "half-dual-polar", {4, 2}},
    {"Distance 1-or-2 symplectic dual polar", "symplectic-dual-polar", {4, 2}},
    {"Pseudo D_3(2)", "pseudo-d", {3, 2}},
    {"Gosset E_7(1)", "gosset", {}},
    {"Exceptional Lie E_{7,7}(2)", "e77", {2}},
    {"Affine E_6(2)", "affine-e6", {2}},
};

// Classical families with base b <= -1.
const FamilyTableRow table_51b[] = {
    {"Witt graph M_24", "witt-m24", {}},
    {"Witt graph M_23", "witt-m23", {}},
    {"Extended ternary Golay code graph", "ternary-golay", {}},
    {"Triality graph 3D_{4,2}(2)", "triality", {2}},
    {"Unitary dual polar U(4,2)", "unitary-dual-polar", {2, 2}},
    {"Hermitian forms (d=3, q=2)", "hermitian", {3, 2}},
};

const std::vector<std::string> ids = {"3.5a", "3.5b", "5.1a", "5.1b"};

}  // namespace

std::span<const CorpusTableRow> corpus_table(const std::string& id) {
    if (id == "3.5a") return table_35a;
    if (id == "3.5b") return table_35b;
    throw Error("unknown corpus table '" + id + "' (have: 3.5a, 3.5b)");
}

std::span<const FamilyTableRow> family_table(const std::string& id) {
    if (id == "5.1a") return table_51a;
    if (id == "5.1b") return table_51b;
    throw Error("unknown family table '" + id + "' (have: 5.1a, 5.1b)");
}

const std::vector<std::string>& table_ids() { return ids; }

std::string corpus_file_text() {
    std::ostringstream out;
    out << "# Reference corpus: feasible antipodal intersection arrays of diameter >= 4.\n";
    out << "# One array per line; optional \"name :\" prefix; '#' starts a comment.\n";
    out << "\n";
    out << "# --- antipodal, not bipartite, d >= 4, at most 2048 vertices ---\n";
    const auto emit = [&out](const CorpusTableRow& row) {
        std::string head;
        if (row.name[0] != '\0') head = std::string(row.name) + " : ";
        head += row.array;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-58s # d=%d v=%lld c2^2 = %s", head.c_str(), row.d,
                      static_cast<long long>(row.v), row.c2_display);
        out << buf;
        if (row.comment[0] != '\0') out << " ; " << row.comment;
        out << "\n";
    };
    for (const auto& row : table_35a) emit(row);
    out << "\n# --- antipodal and bipartite, d >= 5 ---\n";
    for (const auto& row : table_35b) emit(row);
    return out.str();
}

}  // namespace drg
