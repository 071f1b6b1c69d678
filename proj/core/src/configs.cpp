#include "vogel/configs.hpp"

#include "vogel/errors.hpp"

#include <algorithm>
#include <set>

namespace vogel {

ConfigurationTable make_table(std::vector<std::vector<int>> columns) {
    ConfigurationTable t;
    t.l = static_cast<int>(columns.size());
    for (const auto& c : columns)
        for (int v : c) {
            t.p = std::max(t.p, v);
            if (v == 1) ++t.gamma;
        }
    t.pi = columns.empty() ? 0 : static_cast<int>(columns.front().size());
    t.columns = std::move(columns);
    return t;
}

ConfigurationTable pappus_table() {
    return make_table({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9},
                       {1, 5, 9}, {2, 6, 7}, {3, 4, 8}});
}

std::vector<Violation> validate_table(const ConfigurationTable& t) {
    std::vector<Violation> out;
    auto add = [&out](std::string kind, std::string detail) { out.push_back({std::move(kind), std::move(detail)}); };
    if (t.p < 0 || t.l < 0 || t.gamma < 0 || t.pi < 0) add("count", "negative parameter");
    if (t.p * t.gamma != t.l * t.pi)
        add("count", "p*gamma = " + std::to_string(t.p * t.gamma) + " differs from l*pi = " +
                         std::to_string(t.l * t.pi));
    if (static_cast<int>(t.columns.size()) != t.l)
        add("count", "expected " + std::to_string(t.l) + " columns, got " + std::to_string(t.columns.size()));
    std::vector<int> degree(std::max(t.p, 0), 0);
    std::vector<std::set<int>> sets;
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
        const auto& col = t.columns[j];
        const std::string name = "column " + std::to_string(j + 1);
        if (static_cast<int>(col.size()) != t.pi)
            add("column-size", name + " has " + std::to_string(col.size()) + " labels, expected " + std::to_string(t.pi));
        std::set<int> s;
        for (int v : col) {
            if (v < 1 || v > t.p) {
                add("label-range", name + " contains label " + std::to_string(v) + " outside 1.." + std::to_string(t.p));
                continue;
            }
            if (!s.insert(v).second) add("duplicate-label", name + " repeats label " + std::to_string(v));
            else ++degree[v - 1];
        }
        sets.push_back(std::move(s));
    }
    for (int v = 0; v < t.p; ++v)
        if (degree[v] != t.gamma)
            add("point-degree", "label " + std::to_string(v + 1) + " occurs in " + std::to_string(degree[v]) +
                                    " columns, expected " + std::to_string(t.gamma));
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                                  std::back_inserter(common));
            if (common.size() > 1)
                add("shared-pair", "columns " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                       " share labels " + std::to_string(common[0]) + " and " +
                                       std::to_string(common[1]));
        }
    return out;
}

bool is_valid(const ConfigurationTable& t) { return validate_table(t).empty(); }

// ---------------------------------------------------------------------------------------------

namespace {

struct N3Builder {
    int n;
    std::vector<int> degree;
    std::vector<std::vector<bool>> pair_used;
    std::vector<std::array<int, 3>> lines;
    std::set<std::vector<std::vector<int>>> found;

    explicit N3Builder(int n_)
        : n(n_), degree(n_, 0), pair_used(n_, std::vector<bool>(n_, false)) {}

    int max_used() const {
        int m = -1;
        for (const auto& l : lines) m = std::max(m, l[2]);
        return m;
    }

    void place(int a, int b, int c, bool on) {
        const int d = on ? 1 : -1;
        degree[a] += d;
        degree[b] += d;
        degree[c] += d;
        pair_used[a][b] = pair_used[b][a] = on;
        pair_used[a][c] = pair_used[c][a] = on;
        pair_used[b][c] = pair_used[c][b] = on;
    }

    void run() {
        int a = 0;
        while (a < n && degree[a] == 3) ++a;
        if (a == n) {
            std::vector<std::vector<int>> cols;
            for (const auto& l : lines) cols.push_back({l[0] + 1, l[1] + 1, l[2] + 1});
            ConfigurationTable t{n, n, 3, 3, std::move(cols)};
            found.insert(canonical_form(t).columns);
            return;
        }
        // Every new line through a uses only points above a, since points below are full.
        const int used = std::max(max_used(), a);
        for (int b = a + 1; b < n && b <= used + 1; ++b) {
            if (degree[b] == 3 || pair_used[a][b]) continue;
            for (int c = b + 1; c < n && c <= std::max(used, b) + 1; ++c) {
                if (degree[c] == 3 || pair_used[a][c] || pair_used[b][c]) continue;
                if (!lines.empty()) {
                    const auto& last = lines.back();
                    if (last[0] == a && std::array<int, 3>{a, b, c} < last) continue;
                }
                place(a, b, c, true);
                lines.push_back({a, b, c});
                run();
                lines.pop_back();
                place(a, b, c, false);
            }
        }
    }
};

}  // namespace

std::vector<ConfigurationTable> enumerate_n3(int n) {
    if (n < 1 || n > 10) throw ConfigurationError("enumerate_n3 supports 1 <= n <= 10");
    N3Builder b(n);
    b.run();
    std::vector<ConfigurationTable> out;
    for (const auto& cols : b.found) out.push_back(ConfigurationTable{n, n, 3, 3, cols});
    return out;
}

// ---------------------------------------------------------------------------------------------

bool is_valid_coloring(const ConfigurationTable& t, const Coloring& c) {
    const std::size_t k = c.black.size();
    if (c.red.size() != k || c.green.size() != k || static_cast<int>(3 * k) != t.l) return false;
    std::vector<int> color(t.l, -1);
    int idx = 0;
    for (const auto* cls : {&c.black, &c.red, &c.green}) {
        for (int line : *cls) {
            if (line < 1 || line > t.l || color[line - 1] != -1) return false;
            color[line - 1] = idx;
        }
        ++idx;
    }
    std::vector<std::array<int, 3>> seen(t.p, {0, 0, 0});
    for (int j = 0; j < t.l; ++j)
        for (int v : t.columns[j]) {
            if (v < 1 || v > t.p) return false;
            ++seen[v - 1][color[j]];
        }
    for (const auto& s : seen)
        if (s[0] != 1 || s[1] != 1 || s[2] != 1) return false;
    return true;
}

namespace {

struct ColorSearch {
    const ConfigurationTable& t;
    int k;
    std::vector<std::vector<int>> lines_of;  // per point
    std::vector<int> color;
    std::array<int, 3> used{0, 0, 0};

    bool consistent(int line, int col) const {
        if (used[col] == k) return false;
        for (int v : t.columns[line])
            for (int other : lines_of[v - 1])
                if (other != line && color[other] == col) return false;
        return true;
    }

    bool run(int line) {
        if (line == t.l) return true;
        for (int col = 0; col < 3; ++col) {
            if (line == 0 && col > 0) break;  // colors are interchangeable at this stage
            if (!consistent(line, col)) continue;
            color[line] = col;
            ++used[col];
            if (forward_ok() && run(line + 1)) return true;
            --used[col];
            color[line] = -1;
        }
        return false;
    }

    // Every point must still be able to see each color exactly once.
    bool forward_ok() const {
        for (std::size_t v = 0; v < lines_of.size(); ++v) {
            std::array<bool, 3> have{false, false, false};
            int open = 0;
            for (int j : lines_of[v]) {
                if (color[j] < 0) ++open;
                else have[color[j]] = true;
            }
            const int missing = !have[0] + !have[1] + !have[2];
            if (missing > open) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<Coloring> find_coloring(const ConfigurationTable& t, int k) {
    if (auto v = validate_table(t); !v.empty()) throw ConfigurationError("invalid table: " + v.front().detail);
    if (t.l != 3 * k || t.gamma != 3)
        throw ConfigurationError("coloring needs l = 3k lines and 3 lines per point");
    const CanonicalLabeling canon = canonical_labeling(t);
    ColorSearch cs{canon.table, k, std::vector<std::vector<int>>(t.p), std::vector<int>(t.l, -1)};
    for (int j = 0; j < t.l; ++j)
        for (int v : canon.table.columns[j]) cs.lines_of[v - 1].push_back(j);
    if (!cs.run(0)) return std::nullopt;

    // Classes in terms of the input's line numbers.
    std::array<std::vector<int>, 3> cls;
    for (int j = 0; j < t.l; ++j) cls[cs.color[canon.line_map[j] - 1]].push_back(j + 1);
    auto smallest_column = [&t](const std::vector<int>& lines) {
        std::vector<int> best;
        for (int line : lines) {
            std::vector<int> col = t.columns[line - 1];
            std::sort(col.begin(), col.end());
            if (best.empty() || col < best) best = col;
        }
        return best;
    };
    std::sort(cls.begin(), cls.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
        return smallest_column(a) < smallest_column(b);
    });
    return Coloring{cls[0], cls[1], cls[2]};
}

PermTriple extract_permutations(const ConfigurationTable& t, const Coloring& c) {
    if (!is_valid_coloring(t, c)) throw ConfigurationError("not a valid coloring of the table");
    const int k = static_cast<int>(c.black.size());
    if (t.pi != k) throw ConfigurationError("black lines must carry k points for a pairing");
    std::vector<int> red_of(t.p, -1), green_of(t.p, -1);
    for (int i = 0; i < k; ++i) {
        for (int v : t.columns[c.red[i] - 1]) red_of[v - 1] = i;
        for (int v : t.columns[c.green[i] - 1]) green_of[v - 1] = i;
    }
    // pairing[b][green] = red
    std::vector<Perm> pairing;
    for (int b = 0; b < k; ++b) {
        Perm g2r(k, -1);
        for (int v : t.columns[c.black[b] - 1]) {
            if (g2r[green_of[v - 1]] != -1)
                throw ConfigurationError("black line " + std::to_string(c.black[b]) + " meets a green line twice");
            g2r[green_of[v - 1]] = red_of[v - 1];
        }
        if (!is_permutation(g2r))
            throw ConfigurationError("black line " + std::to_string(c.black[b]) + " does not pair red and green lines bijectively");
        pairing.push_back(std::move(g2r));
    }
    // New green label of green j is the red line it meets on the first black line.
    const Perm relabel = pairing[0];
    auto normalized = [&](const Perm& g2r) {
        Perm out(k);
        for (int j = 0; j < k; ++j) out[relabel[j]] = g2r[j];
        return out;
    };
    PermTriple out;
    if (k >= 2) out.s = normalized(pairing[1]);
    if (k >= 3) out.p = normalized(pairing[2]);
    if (k >= 4) out.v = normalized(pairing[3]);
    return out;
}

}  // namespace vogel
