#pragma once

// Constraint systems for non-uniqueness factors and their solution.
//
// Unknowns are the coefficients of the numerator forms num_i = n_i a' + x_i b' + y_i g'
// (primed basis). On the first black line a' = 0 the numerator i is paired with denominator
// i, so den_i = (c_i n_{p(i)}, x_i, y_i) after absorbing multipliers. The equations are
//     x_i = c_i x_{p(i)}          (gamma' = 0 pairing, permutation p)
//     y_i = k_i y_{s(i)}          (beta'  = 0 pairing, permutation s)
//     k_i n_{s(i)} = c_i n_{p(i)}
// and, with the fourth line 3a' - b' = 0 and permutation v,
//     y_i = r_i y_{v(i)}
//     c_i n_{p(i)} + 3 x_i = r_i (n_{v(i)} + 3 x_{v(i)}).
// Unknowns are ordered n_0..n_{k-1}, x_0..x_{k-1}, y_0..y_{k-1}.

#include "vogel/formula.hpp"
#include "vogel/identity.hpp"
#include "vogel/perm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vogel {

enum class LineSet : std::uint8_t { ThreeLines, FourLines };

std::string_view to_string(LineSet s);
/// alpha', beta', gamma' and, for FourLines, 3 alpha' - beta' (all primed).
std::vector<LinearForm> system_lines(LineSet s);

struct MultiplierAssignment {
    std::vector<Rational> c;
    std::vector<Rational> kmul;
    std::vector<Rational> r;  // empty for ThreeLines
};

/// sum coeffs[u] * unknown[u] = 0.
struct Equation {
    std::string label;
    std::vector<Rational> coeffs;
};

class ConstraintSystem {
public:
    int k() const noexcept { return k_; }
    LineSet lines() const noexcept { return lines_; }
    const PermTriple& perms() const noexcept { return perms_; }
    const MultiplierAssignment& mult() const noexcept { return mult_; }
    const std::vector<Equation>& equations() const noexcept { return equations_; }

    std::size_t unknowns() const noexcept { return 3 * static_cast<std::size_t>(k_); }
    static std::string unknown_name(int k, std::size_t u);

    friend ConstraintSystem build_system(int k, LineSet lines, PermTriple perms,
                                         MultiplierAssignment mult);

private:
    int k_ = 0;
    LineSet lines_ = LineSet::ThreeLines;
    PermTriple perms_;
    MultiplierAssignment mult_;
    std::vector<Equation> equations_;
};

/// Validates sizes, bijectivity, nonzero multipliers and the product-one constraints
/// (InvalidMultiplier / DegenerateInput) and instantiates the equations.
ConstraintSystem build_system(int k, LineSet lines, PermTriple perms, MultiplierAssignment mult);

/// The factor product defined by concrete unknown values.
FactorProduct assemble_q(const ConstraintSystem& sys, const std::vector<Rational>& unknowns,
                         bool quantum);

struct SolutionFamily {
    ConstraintSystem system;
    /// Names of the free parameters (the unknowns chosen as free columns).
    std::vector<std::string> params;
    /// unknowns()[u] = sum_j expr[u][j] * param_j.
    std::vector<std::vector<Rational>> expr;
    bool quantum = false;
    bool trivial = false;

    std::vector<Rational> unknowns_at(const std::vector<Rational>& param_values) const;
    FactorProduct instantiate(const std::vector<Rational>& param_values) const;
};

enum class SolveStatus { Nontrivial, Trivial, Infeasible };
std::string_view to_string(SolveStatus s);

struct SolveOutcome {
    SolveStatus status;
    std::optional<SolutionFamily> family;  // set for Nontrivial and Trivial
    std::string reason;
};

/// Nullspace of the (fully instantiated) system. A family whose forms vanish identically,
/// or on one of the system's lines, is reported Infeasible.
SolveOutcome solve(const ConstraintSystem& sys, bool quantum, std::uint64_t seed = kDefaultSeed);
/// solve() for +-1 multipliers; throws InvalidMultiplier otherwise.
SolveOutcome solve_quantum(const ConstraintSystem& sys, std::uint64_t seed = kDefaultSeed);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failed;  // labels of violated equations
};

VerifyReport verify_solution(const ConstraintSystem& sys, const std::vector<Rational>& unknowns);

/// Two independent random instantiations must both survive cancel(). Throws DegenerateFamily
/// when 100 draws never avoid a zero form.
bool is_nontrivial(const SolutionFamily& family, std::uint64_t seed = kDefaultSeed);

struct EnumerationOptions {
    int k = 3;
    LineSet lines = LineSet::ThreeLines;
    bool quantum = true;
    std::uint64_t budget = UINT64_MAX;  // maximum number of sign/perm cases
    unsigned threads = 0;               // 0: hardware concurrency
    std::uint64_t seed = kDefaultSeed;
};

struct FoundFamily {
    std::uint64_t case_index;
    SolutionFamily family;
    std::vector<IdentityReport> line_reports;
};

struct EnumerationResult {
    std::vector<FoundFamily> families;
    std::uint64_t perm_tuples = 0;  // after conjugation dedup
    std::uint64_t cases = 0;        // cases examined
    std::uint64_t total_cases = 0;
    std::uint64_t pruned = 0;  // cases skipped because the three-line part was already trivial
    bool partial = false;
};

/// Quantum enumeration over perm tuples (deduplicated by simultaneous relabeling) and all
/// sign vectors with product one. Throws DegenerateInput when quantum is false.
EnumerationResult enumerate(const EnumerationOptions& opts);

/// Perm tuples with lexicographically minimal images under simultaneous conjugation.
std::vector<PermTriple> canonical_perm_tuples(int k, LineSet lines);

// Closed forms, primed basis.

/// num (1,x,y), (c1c2, c2x, y), (c1, c1c2x, y); den (c1,x,y), (1,c2x,y), (c1c2, c1c2x, y).
FactorProduct builtin_q33(const Rational& c1, const Rational& c2, const Rational& x,
                          const Rational& y, bool quantum = false);
/// With n' = -(n + 3x + 3xp): num (n,x,-y), (n',xp,-y), (n,xp,y), (n',x,y);
/// den (n',x,-y), (n,xp,-y), (n',xp,y), (n,x,y).
FactorProduct builtin_q_prop4(const Rational& n, const Rational& x, const Rational& xp,
                              const Rational& y, bool quantum = false);

struct Q33Match {
    Rational c1, c2, x, y;
    bool inverted;  // F equals 1 / builtin_q33(...)
};
/// Finds parameters with F == builtin_q33 (exactly, after cancellation), up to reordering
/// and rescaling of factors; F is taken classically.
std::optional<Q33Match> match_q33(const FactorProduct& f);

struct Prop4Match {
    Rational n, x, xp, y;
    bool inverted;
};
/// Same for builtin_q_prop4. Quantum F is matched under the +- rule of sinh products.
std::optional<Prop4Match> match_prop4(const FactorProduct& f);

/// Classical three-line analysis over all k!^2 (s, p) pairs. Multipliers are drawn generically
/// from each component of the multiplier torus cut out by cycle products of the pairing
/// permutations (the conditions under which the system has room for non-zero unknowns).
struct ClassicalScanEntry {
    PermTriple perms;
    std::uint64_t components = 0;  // multiplier components examined
    bool nontrivial = false;
    std::optional<SolutionFamily> family;  // first nontrivial family found
    std::optional<Q33Match> q33;           // k == 3 only
};

std::vector<ClassicalScanEntry> scan_classical_three_lines(int k,
                                                           std::uint64_t seed = kDefaultSeed);

/// Reads a factor product as a solution of the system with the given permutations: numerator i
/// supplies (n_i, x_i, y_i), the denominator pairing with it on alpha' = 0 is rescaled to
/// (c_i n_{p(i)}, x_i, y_i) and the multipliers are read off. Empty when no such reading
/// exists; otherwise `report` says whether every equation holds.
struct SystemFit {
    ConstraintSystem system;
    std::vector<Rational> unknowns;
    VerifyReport report;
};
std::optional<SystemFit> fit_to_system(const FactorProduct& f, const PermTriple& perms, LineSet lines);

/// Closed-form solution of the four-line k=4 system: given free values (k1, k3, c2, x1, x2, y3, n1) produce the multipliers
/// and unknowns of the four-line k=4 system with s=(12)(34), p=(14)(23), v=(13)(24).
/// minus_branch selects r1 = -c2 k1 (nontrivial) or r1 = +c2 k1.
struct Prop4Instance {
    ConstraintSystem system;
    std::vector<Rational> unknowns;
};
Prop4Instance prop4_relations(const Rational& k1, const Rational& k3, const Rational& c2,
                              const Rational& x1, const Rational& x2, const Rational& y3,
                              const Rational& n1, bool minus_branch);
PermTriple prop4_perms();

}  // namespace vogel
