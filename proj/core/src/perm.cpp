#include "vogel/perm.hpp"

#include "vogel/errors.hpp"

#include <algorithm>
#include <numeric>

namespace vogel {

bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Perm identity_perm(int k) {
    Perm p(k);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

std::vector<Perm> all_perms(int k) {
    std::vector<Perm> out;
    Perm p = identity_perm(k);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool has_fixed_point(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == static_cast<int>(i)) return true;
    return false;
}

std::string cycle_notation(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        out += '(';
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            out += std::to_string(j + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Perm parse_perm(std::string_view text, int k) {
    const std::string where = "perm '" + std::string(text) + "'";
    if (k < 1 || k > 9) throw ParseError(where, "size must be between 1 and 9");
    Perm p;
    if (!text.empty() && text.front() == '(') {
        p = identity_perm(k);
        std::vector<int> cycle;
        bool open = false;
        for (char ch : text) {
            if (ch == '(') {
                if (open) throw ParseError(where, "nested '('");
                open = true;
                cycle.clear();
            } else if (ch == ')') {
                if (!open) throw ParseError(where, "unbalanced ')'");
                open = false;
                for (std::size_t i = 0; i < cycle.size(); ++i)
                    p[cycle[i]] = cycle[(i + 1) % cycle.size()];
            } else if (ch >= '1' && ch <= '9') {
                if (!open) throw ParseError(where, "label outside a cycle");
                const int v = ch - '1';
                if (v >= k) throw ParseError(where, "label out of range");
                cycle.push_back(v);
            } else if (ch != ' ') {
                throw ParseError(where, std::string("unexpected character '") + ch + "'");
            }
        }
        if (open) throw ParseError(where, "unterminated cycle");
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto comma = std::min(text.find(',', pos), text.size());
            const auto item = text.substr(pos, comma - pos);
            int v = 0;
            if (item.empty()) throw ParseError(where, "empty entry");
            for (char ch : item) {
                if (ch < '0' || ch > '9') throw ParseError(where, "expected a 1-based image list");
                v = v * 10 + (ch - '0');
            }
            p.push_back(v - 1);
            pos = comma + 1;
        }
        if (static_cast<int>(p.size()) != k) throw ParseError(where, "wrong number of images");
    }
    if (!is_permutation(p)) throw ParseError(where, "not a permutation");
    return p;
}

}  // namespace vogel
