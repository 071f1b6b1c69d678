#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vogel {

/// Permutation of {0, ..., k-1} stored as its image list.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);
Perm identity_perm(int k);
Perm inverse(const Perm& p);
/// (a * b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
/// All k! permutations in lexicographic order of their image lists.
std::vector<Perm> all_perms(int k);
bool has_fixed_point(const Perm& p);

/// Cycle notation with 1-based labels, fixed points omitted: "(12)(34)", "()" for identity.
std::string cycle_notation(const Perm& p);
/// Parses cycle notation "(12)(34)" (single-digit labels) or a 1-based image list "2,1,4,3".
Perm parse_perm(std::string_view text, int k);

/// The pairing permutations read off a colored configuration, or chosen for a constraint
/// system. s belongs to the second black line, p to the third and v to the fourth; v is empty
/// when only three lines are involved.
struct PermTriple {
    Perm s;
    Perm p;
    Perm v;

    friend bool operator==(const PermTriple&, const PermTriple&) = default;
};

}  // namespace vogel
