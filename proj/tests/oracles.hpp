#pragma once

// Reference computations written directly from the defining formulas, kept separate from the
// library code paths they are used to check.

#include "vogel/formula.hpp"
#include "vogel/configs.hpp"
#include "vogel/perm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using vogel::Rational;

inline std::uint64_t seed() {
    const char* s = std::getenv("VOGEL_SEED");
    return s && *s ? std::strtoull(s, nullptr, 10) : 20211205ULL;
}

inline Rational rnd(std::mt19937_64& rng, int bound = 50) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    for (;;) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (q != 0) return q;
    }
}

// -(g+2b+2a)(2g+b+2a)(2g+2b+a) / (a b g), unprimed coordinates.
inline Rational adjoint_dim(const Rational& a, const Rational& b, const Rational& g) {
    return -(g + 2 * b + 2 * a) * (2 * g + b + 2 * a) * (2 * g + 2 * b + a) / (a * b * g);
}

inline Rational dot(const vogel::Triple& f, const vogel::Triple& p) {
    return f[0] * p[0] + f[1] * p[1] + f[2] * p[2];
}

// Primed coordinates of an unprimed point: a' = a+b, b' = 2a+b, g' = g-2(a+b).
inline vogel::Triple primed_point(const vogel::Triple& p) {
    return {p[0] + p[1], 2 * p[0] + p[1], p[2] - 2 * (p[0] + p[1])};
}

// Classical value of F at a point whose coordinates are already in F's basis.
inline Rational classical(const vogel::FactorProduct& f, const vogel::Triple& p) {
    Rational v = f.multiplier();
    for (const auto& l : f.num()) v *= dot(l.coeffs(), p);
    for (const auto& l : f.den()) v /= dot(l.coeffs(), p);
    return v;
}

inline double quantum(const vogel::FactorProduct& f, const vogel::Triple& p, double x) {
    double v = f.sign();
    for (const auto& l : f.num()) v *= std::sinh(x * dot(l.coeffs(), p).get_d());
    for (const auto& l : f.den()) v /= std::sinh(x * dot(l.coeffs(), p).get_d());
    return v;
}

inline bool rel_close(double a, double b, double tol = 1e-9) {
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// A point of the line f(p) = 0 away from the coordinate axes, from two random parameters.
inline vogel::Triple point_on(const vogel::Triple& f, std::mt19937_64& rng) {
    // Two independent solutions of f . p = 0, then a random combination.
    vogel::Triple u, w;
    if (f[0] != 0) {
        u = {-f[1] / f[0], 1, 0};
        w = {-f[2] / f[0], 0, 1};
    } else if (f[1] != 0) {
        u = {1, 0, 0};
        w = {0, -f[2] / f[1], 1};
    } else {
        u = {1, 0, 0};
        w = {0, 1, 0};
    }
    const Rational s = rnd(rng, 997), t = rnd(rng, 997);
    return {s * u[0] + t * w[0], s * u[1] + t * w[1], s * u[2] + t * w[2]};
}

// The constraint equations evaluated directly. unknowns = n_0..n_{k-1}, x_0.., y_0..
inline bool system_holds(int k, const vogel::PermTriple& perms, const std::vector<Rational>& c,
                         const std::vector<Rational>& kk, const std::vector<Rational>& r,
                         const std::vector<Rational>& u) {
    auto n = [&](int i) { return u[i]; };
    auto x = [&](int i) { return u[k + i]; };
    auto y = [&](int i) { return u[2 * k + i]; };
    const auto& s = perms.s;
    const auto& p = perms.p;
    for (int i = 0; i < k; ++i) {
        if (x(i) != c[i] * x(p[i])) return false;
        if (y(i) != kk[i] * y(s[i])) return false;
        if (kk[i] * n(s[i]) != c[i] * n(p[i])) return false;
        if (!perms.v.empty()) {
            const int v = perms.v[i];
            if (y(i) != r[i] * y(v)) return false;
            if (c[i] * n(p[i]) + 3 * x(i) != r[i] * (n(v) + 3 * x(v))) return false;
        }
    }
    return true;
}

// Column conditions of a (p_gamma l_pi) table checked from scratch.
inline bool table_ok(const vogel::ConfigurationTable& t) {
    if (t.p * t.gamma != t.l * t.pi || static_cast<int>(t.columns.size()) != t.l) return false;
    std::vector<int> deg(t.p + 1, 0);
    for (const auto& c : t.columns) {
        if (static_cast<int>(c.size()) != t.pi) return false;
        std::set<int> s(c.begin(), c.end());
        if (static_cast<int>(s.size()) != t.pi) return false;
        for (int v : c) {
            if (v < 1 || v > t.p) return false;
            ++deg[v];
        }
    }
    for (int v = 1; v <= t.p; ++v)
        if (deg[v] != t.gamma) return false;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        for (std::size_t j = i + 1; j < t.columns.size(); ++j) {
            int shared = 0;
            for (int v : t.columns[i]) shared += std::count(t.columns[j].begin(), t.columns[j].end(), v);
            if (shared > 1) return false;
        }
    return true;
}

inline bool coloring_ok(const vogel::ConfigurationTable& t, const vogel::Coloring& c) {
    for (const auto* cls : {&c.black, &c.red, &c.green}) {
        std::vector<int> hits(t.p + 1, 0);
        for (int line : *cls)
            for (int v : t.columns[line - 1]) ++hits[v];
        for (int v = 1; v <= t.p; ++v)
            if (hits[v] != 1) return false;
    }
    return true;
}

// Projective-line multiset of the numerator (or denominator) factors, each normalized.
inline std::multiset<vogel::Triple> line_set(const std::vector<vogel::LinearForm>& forms) {
    std::multiset<vogel::Triple> out;
    for (const auto& f : forms) out.insert(vogel::normalized(f.coeffs()));
    return out;
}

}  // namespace oracle
