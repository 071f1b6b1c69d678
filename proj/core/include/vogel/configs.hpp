#pragma once

// Combinatorial configurations (p_gamma l_pi): tables, canonical labeling, (n_3) enumeration,
// black/red/green colorings and the pairing permutations they induce.
//
// Point labels are 1..p. Lines are the columns of the table and are numbered 1..l in order.

#include "vogel/perm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vogel {

struct ConfigurationTable {
    int p = 0;
    int l = 0;
    int gamma = 0;
    int pi = 0;
    std::vector<std::vector<int>> columns;

    friend bool operator==(const ConfigurationTable&, const ConfigurationTable&) = default;
};

/// Infers p (largest label), l, pi (size of the first column) and gamma (occurrences of label 1).
ConfigurationTable make_table(std::vector<std::vector<int>> columns);

/// The colorable (9_3): AG(2,3) with one parallel class of lines removed.
ConfigurationTable pappus_table();

struct Violation {
    std::string kind;  // "count", "label-range", "column-size", "duplicate-label", "point-degree", "shared-pair"
    std::string detail;
};

/// Empty when the table satisfies p gamma = l pi, every column has pi distinct labels in 1..p,
/// every label occurs in gamma columns and two columns share at most one label.
std::vector<Violation> validate_table(const ConfigurationTable& t);
bool is_valid(const ConfigurationTable& t);

struct CanonicalLabeling {
    ConfigurationTable table;
    std::vector<int> point_map;  // point_map[old_label - 1] = new label
    std::vector<int> line_map;   // line_map[old_line - 1] = new line number
};

/// Canonical relabeling by individualization and refinement on the point-line incidence
/// graph. The canonical table has sorted columns in lexicographic order. Throws
/// ConfigurationError for invalid tables.
CanonicalLabeling canonical_labeling(const ConfigurationTable& t);
ConfigurationTable canonical_form(const ConfigurationTable& t);
bool isomorphic(const ConfigurationTable& a, const ConfigurationTable& b);

/// All (n_3) configurations up to isomorphism, as canonical tables in increasing order.
/// Throws ConfigurationError for n > 10.
std::vector<ConfigurationTable> enumerate_n3(int n);

/// Line numbers (1-based) of each color class.
struct Coloring {
    std::vector<int> black;
    std::vector<int> red;
    std::vector<int> green;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Each class has k lines and every point lies on exactly one line of each color.
bool is_valid_coloring(const ConfigurationTable& t, const Coloring& c);

/// Backtracking with forward checking on the canonical form; the result is mapped back to the
/// input's line numbers. The class containing the lexicographically smallest column is black,
/// the class containing the smallest remaining column is red. Requires l = 3k and gamma = 3
/// (ConfigurationError otherwise).
std::optional<Coloring> find_coloring(const ConfigurationTable& t, int k);

/// Pairings on the black lines, taken in the order of c.black. Green lines are renumbered so
/// the first black line pairs red i with green i; for the remaining black lines the returned
/// permutation sends green j to the red line it meets on that black line. Black lines 2, 3 and
/// 4 give s, p and v. Throws ConfigurationError for malformed colorings.
PermTriple extract_permutations(const ConfigurationTable& t, const Coloring& c);

}  // namespace vogel
