#include "oracles.hpp"

#include "vogel/errors.hpp"
#include "vogel/formula.hpp"
#include "vogel/identity.hpp"
#include "vogel/qsearch.hpp"

#include <gtest/gtest.h>

using namespace vogel;

namespace {

FactorProduct classical_adjoint() { return with_quantum(adjoint_formula(), false); }

Rational dim(const AlgebraPoint& p) {
    const auto r = eval_classical(classical_adjoint(), p.point);
    EXPECT_TRUE(r.finite());
    return r.value;
}

}  // namespace

TEST(Formula, AdjointAtTablePoints) {
    EXPECT_EQ(dim(vogel_point(Family::sl, 5)), 24);
    EXPECT_EQ(dim(vogel_point(Family::exc, 8)), 248);
    EXPECT_EQ(dim(vogel_point(Family::so, 7)), 21);
    EXPECT_EQ(dim(vogel_point(Family::sp, 3)), 21);
}

TEST(Formula, AdjointMatchesDirectSubstitution) {
    std::mt19937_64 rng(oracle::seed());
    for (int i = 0; i < 100; ++i) {
        const Rational a = oracle::rnd(rng), b = oracle::rnd(rng), g = oracle::rnd(rng);
        const auto r = eval_classical(classical_adjoint(), ProjPoint(a, b, g));
        if (!r.finite()) continue;
        EXPECT_EQ(r.value, oracle::adjoint_dim(a, b, g));
    }
}

TEST(Formula, AdjointPositiveOnIntegralRows) {
    for (int n = 2; n <= 12; ++n) EXPECT_EQ(dim(vogel_point(Family::sl, n)), n * n - 1);
    for (int n = 5; n <= 12; ++n) EXPECT_EQ(dim(vogel_point(Family::so, n)), n * (n - 1) / 2);
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(dim(vogel_point(Family::sp, n)), n * (2 * n + 1));
    // G2, D4, F4, E6, E7, E8.
    const std::vector<std::pair<Rational, int>> exc{
        {Rational(-2, 3), 14}, {0, 28}, {1, 52}, {2, 78}, {4, 133}, {8, 248}};
    for (const auto& [n, d] : exc) EXPECT_EQ(dim(vogel_point(Family::exc, n)), d) << n;
}

TEST(Formula, ClassicalScaleInvariance) {
    std::mt19937_64 rng(oracle::seed() + 1);
    const auto f = classical_adjoint();
    for (int i = 0; i < 30; ++i) {
        const Rational a = oracle::rnd(rng), b = oracle::rnd(rng), g = oracle::rnd(rng), s = oracle::rnd(rng);
        EXPECT_EQ(eval_classical(f, ProjPoint(a, b, g)).value, eval_classical(f, ProjPoint(s * a, s * b, s * g)).value);
    }
}

TEST(Formula, SingularKinds) {
    const auto f = classical_adjoint();
    EXPECT_EQ(eval_classical(f, ProjPoint(0, 1, 1)).kind, EvalResult::Kind::Pole);
    // g + 2b + 2a = 0 and a != 0, b != 0, g != 0.
    EXPECT_EQ(eval_classical(f, ProjPoint(1, 1, -4)).kind, EvalResult::Kind::Zero);
    // a = 0 and 2g + 2b + a = 0.
    EXPECT_EQ(eval_classical(f, ProjPoint(0, 1, -1)).kind, EvalResult::Kind::Indeterminate);
}

TEST(Formula, QuantumLimit) {
    const auto f = adjoint_formula();
    const ProjPoint p(-2, 2, 5);
    EXPECT_TRUE(oracle::rel_close(eval_quantum(f, p, 1e-6), 24.0));
    std::mt19937_64 rng(oracle::seed() + 2);
    for (int i = 0; i < 20; ++i) {
        const Triple c{oracle::rnd(rng), oracle::rnd(rng), oracle::rnd(rng)};
        const auto r = eval_classical(classical_adjoint(), ProjPoint(c));
        if (!r.finite()) continue;
        const double want = r.value.get_d();
        const double a = eval_quantum(f, ProjPoint(c), 1e-4), b = eval_quantum(f, ProjPoint(c), 1e-5);
        // Even in x: Richardson extrapolation removes the x^2 term.
        const double extrapolated = (100 * b - a) / 99;
        EXPECT_TRUE(oracle::rel_close(extrapolated, want, 1e-8)) << extrapolated << " vs " << want;
    }
}

TEST(Formula, QuantumMatchesSinhDefinition) {
    const auto f = x2k_adn_formula(1, 1);
    std::mt19937_64 rng(oracle::seed() + 3);
    for (int i = 0; i < 10; ++i) {
        const Triple c{oracle::rnd(rng, 9), oracle::rnd(rng, 9), oracle::rnd(rng, 9)};
        for (double x : {0.01, 0.1, 0.37}) {
            try {
                EXPECT_TRUE(oracle::rel_close(eval_quantum(f, ProjPoint(c), x), oracle::quantum(f, c, x)));
            } catch (const SingularPoint&) {
            }
        }
    }
    EXPECT_THROW(eval_quantum(adjoint_formula(), ProjPoint(0, 1, 1), 0.1), SingularPoint);
    EXPECT_THROW(eval_quantum(classical_adjoint(), ProjPoint(1, 1, 1), 0.1), DegenerateInput);
    EXPECT_EQ(eval_quantum(FactorProduct::empty(true, Basis::Unprimed), ProjPoint(1, 2, 3), 0.3), 1.0);
}

TEST(Formula, X2Dimensions) {
    // dim X2 = d(d-1)/2 - d from the exterior square of the adjoint.
    for (const auto& ap : {vogel_point(Family::sl, 5), vogel_point(Family::so, 7), vogel_point(Family::sp, 3),
                           vogel_point(Family::exc, 8), vogel_point(Family::exc, 1), vogel_point(Family::sl, 4)}) {
        const Rational d = oracle::adjoint_dim(ap.point[0], ap.point[1], ap.point[2]);
        const auto x10 = eval_classical(cancel(with_quantum(x2k_adn_formula(1, 0), false)), ap.point);
        ASSERT_TRUE(x10.finite()) << ap.name();
        EXPECT_EQ(x10.value, d * (d - 3) / 2) << ap.name();
        const auto x01 = eval_classical(cancel(with_quantum(x2k_adn_formula(0, 1), false)), ap.point);
        ASSERT_TRUE(x01.finite()) << ap.name();
        EXPECT_EQ(x01.value, d) << ap.name();
    }
    EXPECT_EQ(eval_classical(cancel(with_quantum(x2k_adn_formula(0, 0), false)), ProjPoint(3, 5, 7)).value, 1);
    EXPECT_THROW(x2k_adn_formula(-1, 0), DegenerateInput);
}

TEST(Formula, CancelExamples) {
    const LinearForm l(1, 1, 0), l2(2, 2, 0), ln(-1, -1, 0);
    const auto c = cancel(FactorProduct({l}, {l2}, false, Basis::Unprimed));
    EXPECT_TRUE(c.is_empty());
    EXPECT_EQ(c.multiplier(), Rational(1, 2));
    const auto q = cancel(FactorProduct({l}, {ln}, true, Basis::Unprimed));
    EXPECT_TRUE(q.is_empty());
    EXPECT_EQ(q.sign(), -1);
    const auto keep = cancel(FactorProduct({l}, {l2}, true, Basis::Unprimed));
    EXPECT_EQ(keep.k(), 1u);
    EXPECT_TRUE(is_trivial(ratio(adjoint_formula(), adjoint_formula())));
    EXPECT_EQ(multiply(adjoint_formula(), FactorProduct::empty(true, Basis::Unprimed)), adjoint_formula());
}

TEST(Formula, CancelPreservesValuesAndIsIdempotent) {
    std::mt19937_64 rng(oracle::seed() + 4);
    const auto f = with_quantum(x2k_adn_formula(2, 1), false);
    const auto cf = cancel(f);
    EXPECT_EQ(cancel(cf), cf);
    for (int i = 0; i < 30; ++i) {
        const ProjPoint p(oracle::rnd(rng), oracle::rnd(rng), oracle::rnd(rng));
        const auto a = eval_classical(f, p);
        if (a.finite()) EXPECT_EQ(eval_classical(cf, p).value, a.value);
    }
    const auto qf = x2k_adn_formula(2, 1);
    const auto qc = cancel(qf);
    EXPECT_EQ(cancel(qc), qc);
    for (int i = 0; i < 10; ++i) {
        const Triple c{oracle::rnd(rng, 9), oracle::rnd(rng, 9), oracle::rnd(rng, 9)};
        try {
            EXPECT_TRUE(oracle::rel_close(eval_quantum(qc, ProjPoint(c), 0.2), oracle::quantum(qf, c, 0.2)));
        } catch (const SingularPoint&) {
        }
    }
}

TEST(Formula, RatioRecoversQ33) {
    const auto q = builtin_q33(2, 3, 1, 1);
    const auto f = in_basis(adjoint_formula(), Basis::Primed);
    const auto qq = with_quantum(q, true);
    EXPECT_EQ(cancel(ratio(multiply(qq, f), f)), qq);
}

TEST(Formula, Mismatch) {
    EXPECT_THROW(multiply(adjoint_formula(), classical_adjoint()), FormulaMismatch);
    EXPECT_THROW(FactorProduct({LinearForm(1, 0, 0)}, {}, false, Basis::Unprimed), DegenerateInput);
    EXPECT_THROW(FactorProduct({LinearForm(1, 0, 0, Basis::Primed)}, {LinearForm(0, 1, 0)}, false, Basis::Primed),
                 BasisMismatch);
}

TEST(Formula, AdjointVersusX01) {
    // Values agree; the factor lists are reported, not required to coincide.
    const auto a = cancel(classical_adjoint());
    const auto x = cancel(with_quantum(x2k_adn_formula(0, 1), false));
    std::mt19937_64 rng(oracle::seed() + 5);
    for (int i = 0; i < 20; ++i) {
        const ProjPoint p(oracle::rnd(rng), oracle::rnd(rng), oracle::rnd(rng));
        const auto va = eval_classical(a, p), vx = eval_classical(x, p);
        if (va.finite() && vx.finite()) EXPECT_EQ(va.value, vx.value);
    }
    RecordProperty("adjoint_factors", static_cast<int>(a.k()));
    RecordProperty("x01_factors", static_cast<int>(x.k()));
}
