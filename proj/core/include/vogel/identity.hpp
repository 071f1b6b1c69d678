#pragma once

// Deciding whether a factor product is identically one (or constant) on a line.
//
// Classical formulas are restricted to the line and expanded as binary forms of degree k;
// the verdict compares coefficient vectors exactly. Quantum formulas use the multiset
// criterion for sinh products: prod sinh(x n_i) / prod sinh(x m_i) == 1 for all x iff the
// n_i coincide with the m_i up to individual signs whose product (times the formula's sign)
// is +1.

#include "vogel/formula.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace vogel {

/// Coefficients (a, b) of a * s + b * t.
using BinaryForm = std::array<Rational, 2>;

/// A line parametrized as s * p0 + t * p1.
struct LineParam {
    LinearForm line;
    ProjPoint p0;
    ProjPoint p1;

    /// Deterministic pair of spanning points: the first two independent cross products of the
    /// line with the coordinate vectors.
    static LineParam of(const LinearForm& line);
    /// Explicit parametrization; throws DegenerateInput unless both points lie on the line and
    /// are distinct.
    static LineParam through(const LinearForm& line, const ProjPoint& p0, const ProjPoint& p1);

    ProjPoint at(const Rational& s, const Rational& t) const;
};

struct Restriction {
    std::vector<BinaryForm> num;
    std::vector<BinaryForm> den;
};

/// Each factor f becomes f(p0) s + f(p1) t. Throws VanishingFactor listing every factor that
/// is identically zero on the line. The formula is converted to the line's basis.
Restriction restrict(const FactorProduct& f, const LineParam& lp);

enum class Verdict { IdenticallyOne, IdenticallyConstant, NotConstant, VanishingFactor };

std::string_view to_string(Verdict v);

struct Witness {
    ProjPoint point;
    Rational value;                     // exact classical value at the point
    std::optional<double> x;            // quantum witnesses: the sampled x
    std::optional<double> quantum_value;
};

/// Pairing of a numerator factor with a denominator factor on the line; `factor` is the ratio
/// num/den of the restricted forms (a sign in the quantum case).
struct FactorMatch {
    std::size_t num;
    std::size_t den;
    Rational factor;
};

struct IdentityReport {
    std::optional<LinearForm> line;  // empty for whole-plane checks
    Verdict verdict;
    Rational constant;  // the constant for IdenticallyOne (1) and IdenticallyConstant
    std::optional<Witness> witness;
    std::vector<FactorMatch> matching;
    std::vector<std::size_t> vanishing_num;
    std::vector<std::size_t> vanishing_den;

    bool is_one() const noexcept { return verdict == Verdict::IdenticallyOne; }
};

inline constexpr std::uint64_t kDefaultSeed = 20211205;

IdentityReport is_one_on_line_classical(const FactorProduct& f, const LinearForm& line,
                                        std::uint64_t seed = kDefaultSeed);
IdentityReport is_one_on_line_quantum(const FactorProduct& f, const LinearForm& line,
                                      std::uint64_t seed = kDefaultSeed);
/// Dispatches on f.quantum().
IdentityReport check_on_line(const FactorProduct& f, const LinearForm& line,
                             std::uint64_t seed = kDefaultSeed);
std::vector<IdentityReport> check_on_lines(const FactorProduct& f,
                                           const std::vector<LinearForm>& lines,
                                           std::uint64_t seed = kDefaultSeed);

/// Whole-plane version: identically one iff cancel() empties the product with multiplier 1.
/// The witness for NotConstant is (1,1,1) when admissible, otherwise a random point.
IdentityReport check_on_plane(const FactorProduct& f, std::uint64_t seed = kDefaultSeed);

/// Samples `samples` random rational points of the line (and five x values per point for
/// quantum formulas) and confirms the symbolic verdict to 1e-9 relative.
bool numeric_crosscheck(const FactorProduct& f, const LinearForm& line, int samples,
                        std::uint64_t seed = kDefaultSeed);

/// Invariance of f under alpha <-> beta and beta <-> gamma: cancel(act(g, f) / f) must be
/// empty with multiplier one for both generators.
bool check_symmetric(const FactorProduct& f);

/// Univariate polynomial, coefficients from degree 0 upwards; no trailing zeros.
using Poly = std::vector<Rational>;

/// A reduced univariate rational function num / den with monic den.
struct UnivariateFunction {
    Poly num;
    Poly den;

    bool is_polynomial() const { return den.size() == 1; }
};

/// The classical formula along the affine family base + N * direction, as a function of N,
/// reduced by the polynomial gcd. Throws DegenerateInput if the denominator vanishes
/// identically along the family.
UnivariateFunction restrict_affine(const FactorProduct& f, const ProjPoint& base,
                                   const ProjPoint& direction);

Poly poly_mul(const Poly& a, const Poly& b);
Rational poly_eval(const Poly& a, const Rational& x);

}  // namespace vogel
