#include "oracles.hpp"

#include "vogel/errors.hpp"
#include "vogel/qsearch.hpp"

#include <gtest/gtest.h>

using namespace vogel;

namespace {

std::vector<Rational> ones(int k) { return std::vector<Rational>(k, 1); }

const PermTriple kCyclic{{1, 2, 0}, {2, 0, 1}, {}};  // s(i) = i+1, p(i) = i+2 mod 3

std::vector<Rational> draw(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(oracle::rnd(rng));
    return v;
}

// cancel(F) and the builtin coincide as lists of projective lines with equal values.
bool same_product(const FactorProduct& f, const FactorProduct& g, std::mt19937_64& rng) {
    const auto cf = cancel(f), cg = cancel(g);
    if (oracle::line_set(cf.num()) != oracle::line_set(cg.num())) return false;
    if (oracle::line_set(cf.den()) != oracle::line_set(cg.den())) return false;
    const vogel::Triple p{oracle::rnd(rng), oracle::rnd(rng), oracle::rnd(rng)};
    return oracle::classical(cf, p) == oracle::classical(cg, p);
}

}  // namespace

TEST(Perm, Basics) {
    EXPECT_EQ(cycle_notation({1, 0, 3, 2}), "(12)(34)");
    EXPECT_EQ(cycle_notation({0, 1, 2}), "()");
    EXPECT_EQ(parse_perm("(14)(23)", 4), (Perm{3, 2, 1, 0}));
    EXPECT_EQ(parse_perm("3,4,1,2", 4), (Perm{2, 3, 0, 1}));
    EXPECT_THROW(parse_perm("(15)", 4), ParseError);
    EXPECT_THROW(parse_perm("1,1,2", 3), ParseError);
    EXPECT_EQ(all_perms(4).size(), 24u);
    EXPECT_EQ(compose(Perm{1, 2, 0}, inverse(Perm{1, 2, 0})), identity_perm(3));
    EXPECT_TRUE(has_fixed_point({0, 2, 1}));
    EXPECT_FALSE(has_fixed_point({1, 2, 0}));
}

TEST(QSearch, BuildSystemErrors) {
    EXPECT_THROW(build_system(3, LineSet::ThreeLines, kCyclic, {{2, 1, 1}, ones(3), {}}), InvalidMultiplier);
    EXPECT_THROW(build_system(3, LineSet::ThreeLines, kCyclic, {{0, 1, 1}, ones(3), {}}), InvalidMultiplier);
    EXPECT_THROW(build_system(3, LineSet::ThreeLines, {{0, 0, 1}, {0, 1, 2}, {}}, {ones(3), ones(3), {}}),
                 DegenerateInput);
    EXPECT_THROW(build_system(2, LineSet::FourLines, {{1, 0}, {1, 0}, {}}, {ones(2), ones(2), ones(2)}),
                 DegenerateInput);
}

TEST(QSearch, ClosedFormParametrization) {
    // n_i = 1, k_i = c_i; x_2 = c_2 x_1, x_3 = c_2 c_3 x_1, y_2 = c_2 c_3 y_1, y_3 = c_3 y_1.
    std::mt19937_64 rng(oracle::seed());
    for (int t = 0; t < 10; ++t) {
        const auto v = draw(rng, 4);
        const Rational c1 = v[0], c2 = v[1], c3 = 1 / (c1 * c2), x = v[2], y = v[3];
        const std::vector<Rational> c{c1, c2, c3};
        const auto sys = build_system(3, LineSet::ThreeLines, kCyclic, {c, c, {}});
        const std::vector<Rational> u{1, 1, 1, x, c2 * x, c2 * c3 * x, y, c2 * c3 * y, c3 * y};
        ASSERT_TRUE(oracle::system_holds(3, kCyclic, c, c, {}, u));
        EXPECT_TRUE(verify_solution(sys, u).ok);
        // The assembled product is the builtin after relabeling factors.
        EXPECT_TRUE(same_product(assemble_q(sys, u, false), builtin_q33(c1, c2, x, y), rng));
        auto bad = u;
        bad[4] += 1;
        const auto rep = verify_solution(sys, bad);
        EXPECT_FALSE(rep.ok);
        EXPECT_FALSE(rep.failed.empty());
    }
}

TEST(QSearch, Q33Builtin) {
    EXPECT_TRUE(is_trivial(builtin_q33(1, 1, 5, 7)));
    const auto q = builtin_q33(2, 3, 1, 1);
    EXPECT_EQ(eval_classical(q, ProjPoint(1, 1, 1, Basis::Primed)).value, Rational(27, 26));
    std::mt19937_64 rng(oracle::seed() + 1);
    for (int i = 0; i < 10; ++i) {
        const auto v = draw(rng, 4);
        const auto m = match_q33(builtin_q33(v[0], v[1], v[2], v[3]));
        ASSERT_TRUE(m);
        EXPECT_TRUE(same_product(builtin_q33(m->c1, m->c2, m->x, m->y), builtin_q33(v[0], v[1], v[2], v[3]), rng) !=
                    m->inverted);
    }
}

TEST(QSearch, Prop4Builtin) {
    // Denominators are the numerators with n and n' = -(n + 3x + 3x') exchanged.
    const Rational n = 2, x = 5, xp = -7, y = 3, np = -(n + 3 * x + 3 * xp);
    const auto q = builtin_q_prop4(n, x, xp, y);
    auto swap_n = [&](const LinearForm& f) {
        const Rational a = f[0] == n ? np : n;
        return LinearForm(a, f[1], f[2], Basis::Primed);
    };
    ASSERT_EQ(q.k(), 4u);
    std::multiset<Triple> swapped;
    for (const auto& f : q.num()) swapped.insert(swap_n(f).canonical());
    EXPECT_EQ(swapped, oracle::line_set(q.den()));
    EXPECT_TRUE(match_prop4(q).has_value());
    EXPECT_TRUE(match_prop4(with_quantum(q, true)).has_value());
    EXPECT_FALSE(match_prop4(builtin_q33(2, 3, 5, 7)).has_value());
}

TEST(QSearch, Prop4Relations) {
    std::mt19937_64 rng(oracle::seed() + 2);
    const PermTriple want{{1, 0, 3, 2}, {3, 2, 1, 0}, {2, 3, 0, 1}};
    EXPECT_EQ(prop4_perms(), want);
    for (int t = 0; t < 10; ++t) {
        const auto v = draw(rng, 7);
        const auto in = prop4_relations(v[0], v[1], v[2], v[3], v[4], v[5], v[6], true);
        const auto& m = in.system.mult();
        EXPECT_TRUE(oracle::system_holds(4, want, m.c, m.kmul, m.r, in.unknowns));
        EXPECT_TRUE(verify_solution(in.system, in.unknowns).ok);
        // Relations as displayed: x3 = x2 / c2, r1 = -c2 k1, n2 = -(n1 + 3 x1 + 3 k1 x2) / k1.
        const auto& u = in.unknowns;
        EXPECT_EQ(u[4 + 2], u[4 + 1] / m.c[1]);
        EXPECT_EQ(m.r[0], -m.c[1] * m.kmul[0]);
        EXPECT_EQ(u[1], -(u[0] + 3 * u[4] + 3 * m.kmul[0] * u[5]) / m.kmul[0]);
        EXPECT_TRUE(match_prop4(assemble_q(in.system, in.unknowns, false)).has_value());

        const auto plus = prop4_relations(v[0], v[1], v[2], v[3], v[4], v[5], v[6], false);
        EXPECT_TRUE(verify_solution(plus.system, plus.unknowns).ok);
        EXPECT_EQ(solve(plus.system, false).status, SolveStatus::Trivial);
        EXPECT_TRUE(is_trivial(assemble_q(plus.system, plus.unknowns, false)));
    }
}

TEST(QSearch, SolveK1IsTrivial) {
    const auto sys = build_system(1, LineSet::ThreeLines, {{0}, {0}, {}}, {ones(1), ones(1), {}});
    EXPECT_NE(solve_quantum(sys).status, SolveStatus::Nontrivial);
}

TEST(QSearch, SolveQuantumRequiresSigns) {
    const auto sys = build_system(3, LineSet::ThreeLines, kCyclic, {{2, Rational(1, 2), 1}, ones(3), {}});
    EXPECT_THROW(solve_quantum(sys), InvalidMultiplier);
}

TEST(QSearch, NontrivialityProbe) {
    // All factors equal: num == den.
    const auto sys = build_system(3, LineSet::ThreeLines, {{0, 1, 2}, {0, 1, 2}, {}}, {ones(3), ones(3), {}});
    const auto out = solve(sys, false);
    ASSERT_TRUE(out.family);
    EXPECT_FALSE(is_nontrivial(*out.family));
    EXPECT_EQ(out.status, SolveStatus::Trivial);
}

TEST(QSearch, QuantumEnumerationSmallK) {
    for (int k = 1; k <= 3; ++k) {
        EnumerationOptions o;
        o.k = k;
        const auto r = enumerate(o);
        EXPECT_TRUE(r.families.empty()) << k;
        EXPECT_FALSE(r.partial);
        EXPECT_GT(r.cases, 0u);
    }
    EnumerationOptions bad;
    bad.quantum = false;
    EXPECT_THROW(enumerate(bad), DegenerateInput);
}

TEST(QSearch, EnumerationBudgetAndDeterminism) {
    EnumerationOptions o;
    o.k = 3;
    o.budget = 10;
    const auto r = enumerate(o);
    EXPECT_TRUE(r.partial);
    EXPECT_LE(r.cases, 10u);
    o.budget = UINT64_MAX;
    o.threads = 1;
    const auto a = enumerate(o);
    o.threads = 4;
    const auto b = enumerate(o);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.perm_tuples, b.perm_tuples);
}

TEST(QSearch, CanonicalTuplesAreConjugacyRepresentatives) {
    // Pairs of permutations of 3 symbols up to simultaneous conjugation: 36 pairs, and the
    // orbit count is (1/6) sum_g |centralizer(g)|^2 by Burnside = (36 + 3*4 + 2*9)/6 = 11.
    EXPECT_EQ(canonical_perm_tuples(3, LineSet::ThreeLines).size(), 11u);
    EXPECT_EQ(canonical_perm_tuples(1, LineSet::ThreeLines).size(), 1u);
    // Pairs for k = 2: the group is abelian, so all 4 pairs are fixed.
    EXPECT_EQ(canonical_perm_tuples(2, LineSet::ThreeLines).size(), 4u);
}

TEST(QSearch, ClassicalScanK3) {
    std::mt19937_64 rng(oracle::seed() + 3);
    const auto entries = scan_classical_three_lines(3);
    ASSERT_EQ(entries.size(), 36u);
    for (const auto& e : entries) {
        const bool expected = !has_fixed_point(e.perms.s) && !has_fixed_point(e.perms.p) && e.perms.s != e.perms.p;
        EXPECT_EQ(e.nontrivial, expected) << cycle_notation(e.perms.s) << " " << cycle_notation(e.perms.p);
        if (!e.nontrivial) continue;
        ASSERT_TRUE(e.family);
        ASSERT_TRUE(e.q33);
        const auto inst = cancel(e.family->instantiate(draw(rng, e.family->params.size())));
        const auto m = match_q33(inst);
        ASSERT_TRUE(m);
        const auto built = builtin_q33(m->c1, m->c2, m->x, m->y);
        EXPECT_TRUE(same_product(m->inverted ? ratio(FactorProduct::empty(false, Basis::Primed), built) : built, inst,
                                 rng));
    }
    for (int k = 1; k <= 2; ++k)
        for (const auto& e : scan_classical_three_lines(k)) EXPECT_FALSE(e.nontrivial);
}

TEST(QSearch, FamiliesVerify) {
    EnumerationOptions o;
    o.k = 4;
    o.lines = LineSet::FourLines;
    o.budget = 40000;
    const auto r = enumerate(o);
    std::mt19937_64 rng(oracle::seed() + 4);
    for (const auto& f : r.families) {
        const auto& sys = f.family.system;
        for (int t = 0; t < 10; ++t) {
            const auto u = f.family.unknowns_at(draw(rng, f.family.params.size()));
            EXPECT_TRUE(oracle::system_holds(4, sys.perms(), sys.mult().c, sys.mult().kmul, sys.mult().r, u));
        }
        EXPECT_TRUE(is_nontrivial(f.family));
        for (const auto& rep : f.line_reports) EXPECT_TRUE(rep.is_one());
    }
}

TEST(QSearch, FitToSystem) {
    const auto q = builtin_q_prop4(2, 5, -7, 3);
    const auto fit = fit_to_system(q, prop4_perms(), LineSet::FourLines);
    ASSERT_TRUE(fit);
    EXPECT_TRUE(fit->report.ok);
    EXPECT_FALSE(fit_to_system(q, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}, LineSet::FourLines).has_value() &&
                 fit_to_system(q, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}, LineSet::FourLines)->report.ok);
}
