#include "oracles.hpp"

#include "vogel/configs.hpp"
#include "vogel/errors.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace vogel;

namespace {

ConfigurationTable relabel(const ConfigurationTable& t, std::mt19937_64& rng) {
    std::vector<int> pm(t.p);
    std::iota(pm.begin(), pm.end(), 1);
    std::shuffle(pm.begin(), pm.end(), rng);
    ConfigurationTable out = t;
    for (auto& c : out.columns) {
        for (auto& v : c) v = pm[v - 1];
        std::shuffle(c.begin(), c.end(), rng);
    }
    std::shuffle(out.columns.begin(), out.columns.end(), rng);
    return out;
}

// Fano plane: lines {i, i+1, i+3} mod 7.
ConfigurationTable fano() {
    std::vector<std::vector<int>> cols;
    for (int i = 0; i < 7; ++i) cols.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    return make_table(cols);
}

}  // namespace

TEST(Configs, PappusTableValid) {
    const auto t = pappus_table();
    EXPECT_EQ(t.p, 9);
    EXPECT_EQ(t.l, 9);
    EXPECT_EQ(t.gamma, 3);
    EXPECT_EQ(t.pi, 3);
    EXPECT_TRUE(oracle::table_ok(t));
    EXPECT_TRUE(is_valid(t));
    EXPECT_TRUE(validate_table(t).empty());
}

TEST(Configs, Violations) {
    auto t = pappus_table();
    t.columns[0] = {1, 1, 2};
    EXPECT_FALSE(is_valid(t));
    bool dup = false;
    for (const auto& v : validate_table(t)) dup = dup || v.kind == "duplicate-label";
    EXPECT_TRUE(dup);

    auto c = pappus_table();
    c.l = 8;
    bool count = false;
    for (const auto& v : validate_table(c)) count = count || v.kind == "count";
    EXPECT_TRUE(count);

    auto s = pappus_table();
    s.columns[1] = {1, 2, 4};  // shares {1, 2} with column 1
    EXPECT_FALSE(is_valid(s));
}

TEST(Configs, CanonicalForm) {
    std::mt19937_64 rng(oracle::seed());
    const auto t = pappus_table();
    const auto c = canonical_form(t);
    EXPECT_EQ(canonical_form(c), c);
    for (int i = 0; i < 20; ++i) {
        const auto r = relabel(t, rng);
        EXPECT_TRUE(isomorphic(t, r));
        EXPECT_EQ(canonical_form(r), c);
    }
    const auto lab = canonical_labeling(t);
    // The maps are bijections sending the input to the canonical table.
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
        std::vector<int> mapped;
        for (int v : t.columns[j]) mapped.push_back(lab.point_map[v - 1]);
        std::sort(mapped.begin(), mapped.end());
        EXPECT_EQ(mapped, lab.table.columns[lab.line_map[j] - 1]);
    }
}

TEST(Configs, EnumerateN3Counts) {
    EXPECT_TRUE(enumerate_n3(3).empty());
    EXPECT_TRUE(enumerate_n3(6).empty());
    const auto seven = enumerate_n3(7);
    ASSERT_EQ(seven.size(), 1u);
    EXPECT_TRUE(isomorphic(seven[0], fano()));
    EXPECT_EQ(enumerate_n3(8).size(), 1u);
    const auto nine = enumerate_n3(9);
    ASSERT_EQ(nine.size(), 3u);
    for (std::size_t i = 0; i < nine.size(); ++i) {
        EXPECT_TRUE(oracle::table_ok(nine[i]));
        for (std::size_t j = i + 1; j < nine.size(); ++j) EXPECT_FALSE(isomorphic(nine[i], nine[j]));
    }
    EXPECT_THROW(enumerate_n3(11), ConfigurationError);
}

TEST(Configs, ColoringOfN3) {
    const auto nine = enumerate_n3(9);
    int colorable = 0;
    for (const auto& t : nine) {
        const auto c = find_coloring(t, 3);
        if (!c) continue;
        ++colorable;
        EXPECT_TRUE(oracle::coloring_ok(t, *c));
        EXPECT_TRUE(isomorphic(t, pappus_table()));
    }
    EXPECT_EQ(colorable, 1);
}

TEST(Configs, PappusColoring) {
    const auto c = find_coloring(pappus_table(), 3);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->black, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(c->red, (std::vector<int>{4, 5, 6}));
    EXPECT_EQ(c->green, (std::vector<int>{7, 8, 9}));
    EXPECT_TRUE(is_valid_coloring(pappus_table(), *c));
    EXPECT_FALSE(is_valid_coloring(pappus_table(), Coloring{{1, 4, 7}, {2, 5, 8}, {3, 6, 9}}));
    EXPECT_THROW(find_coloring(fano(), 3), ConfigurationError);
}

TEST(Configs, ColoringIndependentOfColumnOrder) {
    std::mt19937_64 rng(oracle::seed() + 1);
    for (int i = 0; i < 10; ++i) {
        auto t = pappus_table();
        std::vector<int> order(t.l);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        ConfigurationTable s = t;
        for (int j = 0; j < t.l; ++j) s.columns[j] = t.columns[order[j]];
        const auto c = find_coloring(s, 3);
        ASSERT_TRUE(c);
        EXPECT_TRUE(oracle::coloring_ok(s, *c));
        // Map back to the original column numbers: the same partition.
        auto back = [&](std::vector<int> v) {
            for (auto& x : v) x = order[x - 1] + 1;
            std::sort(v.begin(), v.end());
            return v;
        };
        std::set<std::vector<int>> classes{back(c->black), back(c->red), back(c->green)};
        EXPECT_EQ(classes, (std::set<std::vector<int>>{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
    }
}

TEST(Configs, ExtractPermutationsPappus) {
    const auto t = pappus_table();
    const auto c = *find_coloring(t, 3);
    const auto p = extract_permutations(t, c);
    EXPECT_TRUE(p.v.empty());
    EXPECT_FALSE(has_fixed_point(p.s));
    EXPECT_FALSE(has_fixed_point(p.p));
    EXPECT_NE(p.s, p.p);
    // Renaming green lines does not change the result.
    Coloring g = c;
    std::reverse(g.green.begin(), g.green.end());
    EXPECT_EQ(extract_permutations(t, g), p);
}

TEST(Configs, ExtractPermutationsErrors) {
    const auto t = pappus_table();
    EXPECT_THROW(extract_permutations(t, Coloring{{1, 4, 7}, {2, 5, 8}, {3, 6, 9}}), ConfigurationError);
}
