#pragma once

// Points and lines of Vogel's projective plane with exact rational coordinates.
//
// Two coordinate systems are used. The unprimed one is (alpha : beta : gamma). The primed one
//     alpha' = alpha + beta,  beta' = 2 alpha + beta,  gamma' = gamma - 2 (alpha + beta)
// turns the sl, so and exc lines into the coordinate lines. Points transform by this map and
// linear forms by its contragredient, so incidence does not depend on the basis.

#include "vogel/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vogel {

enum class Basis : std::uint8_t { Unprimed, Primed };

std::string_view to_string(Basis b);

using Triple = std::array<Rational, 3>;

/// Scales t so that its first nonzero entry is +1. Throws DegenerateInput on the zero triple.
Triple normalized(const Triple& t);

/// A point (alpha : beta : gamma). The stored triple is the representative the caller gave;
/// equality is projective and compares normalized triples.
class ProjPoint {
public:
    ProjPoint(Triple coords, Basis basis = Basis::Unprimed);
    ProjPoint(Rational a, Rational b, Rational c, Basis basis = Basis::Unprimed)
        : ProjPoint(Triple{std::move(a), std::move(b), std::move(c)}, basis) {}

    const Triple& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Basis basis() const noexcept { return basis_; }

    /// Representative with first nonzero coordinate equal to +1.
    Triple canonical() const { return normalized(coords_); }
    ProjPoint scaled(const Rational& factor) const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
    /// Strict weak order on canonical representatives (basis first).
    friend bool operator<(const ProjPoint& a, const ProjPoint& b);

private:
    Triple coords_;
    Basis basis_;
};

/// n*alpha + x*beta + y*gamma. Equality is exact on coefficients; use same_line() for the
/// projective comparison of the lines the forms define.
class LinearForm {
public:
    LinearForm(Triple coeffs, Basis basis = Basis::Unprimed);
    LinearForm(Rational n, Rational x, Rational y, Basis basis = Basis::Unprimed)
        : LinearForm(Triple{std::move(n), std::move(x), std::move(y)}, basis) {}

    const Triple& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Basis basis() const noexcept { return basis_; }

    /// Value at the given representative. Throws BasisMismatch.
    Rational operator()(const ProjPoint& p) const;
    Rational operator()(const Triple& p) const;

    LinearForm scaled(const Rational& factor) const;
    LinearForm operator-() const { return scaled(Rational(-1)); }
    Triple canonical() const { return normalized(coeffs_); }

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator<(const LinearForm& a, const LinearForm& b);

private:
    Triple coeffs_;
    Basis basis_;
};

/// True when f = c * g for some nonzero rational c (same basis required).
bool same_line(const LinearForm& f, const LinearForm& g);
/// The c with f = c * g, or 0 if the forms are not proportional.
Rational proportionality(const LinearForm& f, const LinearForm& g);

ProjPoint to_primed(const ProjPoint& p);
LinearForm to_primed(const LinearForm& f);
ProjPoint to_unprimed(const ProjPoint& p);
LinearForm to_unprimed(const LinearForm& f);
/// Converts if needed; never throws.
ProjPoint in_basis(const ProjPoint& p, Basis b);
LinearForm in_basis(const LinearForm& f, Basis b);

/// Permutation of the three symbols alpha, beta, gamma (indices 0, 1, 2).
/// images()[i] is where symbol i is sent.
class Perm3 {
public:
    constexpr Perm3() : images_{0, 1, 2} {}
    explicit Perm3(std::array<int, 3> images);

    static Perm3 identity() { return Perm3(); }
    /// alpha <-> beta in unprimed coordinates.
    static Perm3 swap_alpha_beta() { return Perm3({1, 0, 2}); }
    /// beta <-> gamma in unprimed coordinates.
    static Perm3 swap_beta_gamma() { return Perm3({0, 2, 1}); }
    static std::vector<Perm3> all();

    const std::array<int, 3>& images() const noexcept { return images_; }
    /// (a * b) acts as b first, then a.
    friend Perm3 operator*(const Perm3& a, const Perm3& b);
    friend bool operator==(const Perm3& a, const Perm3& b) = default;
    std::string str() const;

private:
    std::array<int, 3> images_;
};

/// Permutes coordinates in unprimed terms; primed inputs are converted, acted on and converted
/// back. Incidence is preserved: act(s, f)(act(s, p)) == f(p).
ProjPoint act(const Perm3& perm, const ProjPoint& p);
LinearForm act(const Perm3& perm, const LinearForm& f);

bool incident(const ProjPoint& p, const LinearForm& f);
/// Throws DegenerateInput for projectively equal points, BasisMismatch for mixed bases.
LinearForm line_through(const ProjPoint& p, const ProjPoint& q);
/// Throws DegenerateInput for proportional forms, BasisMismatch for mixed bases.
ProjPoint meet(const LinearForm& f, const LinearForm& g);

/// A line of the twelve-element set, with a short label ("sl", "so", "sp", "exc", "a+g", ...).
struct DistinguishedLine {
    std::string label;
    LinearForm form;
};

/// The sl, so, sp and exc lines together with their images under coordinate permutations.
std::vector<DistinguishedLine> distinguished_lines(Basis basis);
/// Looks up a label of distinguished_lines(). Throws ParseError for unknown labels.
LinearForm distinguished_line(std::string_view label, Basis basis);

enum class Family : std::uint8_t { sl, so, sp, exc };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

/// A Vogel table point. `param` is N for sl(N), so(N), sp(2N) and n for exc(n); `line` is the
/// distinguished line the point actually lies on.
struct AlgebraPoint {
    Family family;
    Rational param;
    ProjPoint point;
    Rational t;
    bool integral;
    LinearForm line;

    std::string name() const;
};

/// Table row: sl(N): (-2, 2, N); so(N): (-2, 4, N-4); sp(2N): (-2, 1, N+2);
/// exc(n): (-2, 2n+4, n+4). Any rational parameter is accepted.
AlgebraPoint vogel_point(Family family, const Rational& param);

/// The line carrying the table points of a family. For exc this is beta = 2(alpha + gamma):
/// the tabulated exc coordinates satisfy it, while gamma = 2(alpha + beta) is its image
/// under beta <-> gamma.
LinearForm family_line(Family family);

}  // namespace vogel
