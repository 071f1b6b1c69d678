#include "vogel/identity.hpp"

#include "vogel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace vogel {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::IdenticallyOne: return "IdenticallyOne";
        case Verdict::IdenticallyConstant: return "IdenticallyConstant";
        case Verdict::NotConstant: return "NotConstant";
        case Verdict::VanishingFactor: return "VanishingFactor";
    }
    return "?";
}

namespace {

Triple combine(const Rational& s, const Triple& a, const Rational& t, const Triple& b) {
    return {s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]};
}

bool is_zero(const BinaryForm& b) { return b[0] == 0 && b[1] == 0; }

Rational binary_ratio(const BinaryForm& a, const BinaryForm& b) {
    if (a[0] * b[1] != a[1] * b[0]) return 0;
    return b[0] != 0 ? a[0] / b[0] : a[1] / b[1];
}

// Coefficients of prod (a_i s + b_i t), indexed by the power of t.
std::vector<Rational> expand(const std::vector<BinaryForm>& forms) {
    std::vector<Rational> c{1};
    for (const auto& f : forms) {
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i] * f[0];
            next[i + 1] += c[i] * f[1];
        }
        c = std::move(next);
    }
    return c;
}

// Greedy pairing of numerator and denominator forms; pairs(a, b) returns the ratio or 0.
template <class Pairs>
std::vector<FactorMatch> pair_up(const Restriction& r, Pairs pairs) {
    std::vector<FactorMatch> out;
    std::vector<bool> used(r.den.size(), false);
    for (std::size_t i = 0; i < r.num.size(); ++i) {
        for (std::size_t j = 0; j < r.den.size(); ++j) {
            if (used[j]) continue;
            Rational c = pairs(r.num[i], r.den[j]);
            if (c != 0) {
                used[j] = true;
                out.push_back({i, j, std::move(c)});
                break;
            }
        }
    }
    return out;
}

// Sign normalization of a binary form: first nonzero coefficient made positive.
std::pair<BinaryForm, int> sign_normalized(const BinaryForm& b) {
    const int s = b[0] != 0 ? sgn(b[0]) : sgn(b[1]);
    if (s > 0) return {b, 1};
    return {BinaryForm{-b[0], -b[1]}, -1};
}

struct Sample {
    ProjPoint point;
    std::vector<Rational> num_values, den_values;
};

// Random point of the line at which no factor vanishes.
Sample draw_sample(const FactorProduct& f, const LineParam& lp, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const Rational s = random_rational(rng, 1000, false);
        const Rational t = random_rational(rng, 1000, false);
        if (s == 0 && t == 0) continue;
        ProjPoint p = lp.at(s, t);
        Sample out{p, {}, {}};
        bool ok = true;
        for (const auto& l : f.num()) {
            out.num_values.push_back(l(p));
            ok = ok && out.num_values.back() != 0;
        }
        for (const auto& l : f.den()) {
            out.den_values.push_back(l(p));
            ok = ok && out.den_values.back() != 0;
        }
        if (ok) return out;
    }
    throw InternalConsistency("could not find a regular sample point on the line");
}

Rational classical_value(const FactorProduct& f, const Sample& s) {
    Rational v = f.multiplier();
    for (const auto& a : s.num_values) v *= a;
    for (const auto& b : s.den_values) v /= b;
    return v;
}

// Quantum value with x scaled to the size of the factor values.
double quantum_value(const FactorProduct& f, const Sample& s, double scale) {
    double largest = 0.0;
    for (const auto* vals : {&s.num_values, &s.den_values})
        for (const auto& v : *vals) largest = std::max(largest, std::fabs(v.get_d()));
    return eval_quantum(f, s.point, scale / largest);
}

double quantum_x(const Sample& s, double scale) {
    double largest = 0.0;
    for (const auto* vals : {&s.num_values, &s.den_values})
        for (const auto& v : *vals) largest = std::max(largest, std::fabs(v.get_d()));
    return scale / largest;
}

// At a fixed point the sinh product is one for every x iff the value multisets agree up to
// signs with total sign +1.
bool values_match_up_to_sign(const FactorProduct& f, const Sample& s) {
    std::vector<Rational> a, b;
    int sign = f.sign();
    for (const auto& v : s.num_values) {
        a.push_back(abs(v));
        if (v < 0) sign = -sign;
    }
    for (const auto& v : s.den_values) {
        b.push_back(abs(v));
        if (v < 0) sign = -sign;
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b && sign == 1;
}

constexpr double kScales[] = {0.05, 0.2, 0.5, 1.0, 2.0};

IdentityReport vanishing_report(const LinearForm& line, const VanishingFactor& e) {
    IdentityReport r{line, Verdict::VanishingFactor, 0, std::nullopt, {}, {}, {}};
    r.vanishing_num = e.numerator();
    r.vanishing_den = e.denominator();
    return r;
}

}  // namespace

LineParam LineParam::of(const LinearForm& line) {
    std::vector<Triple> cands;
    for (int i = 0; i < 3; ++i) {
        Triple e{0, 0, 0};
        e[i] = 1;
        const auto& c = line.coeffs();
        Triple x{c[1] * e[2] - c[2] * e[1], c[2] * e[0] - c[0] * e[2], c[0] * e[1] - c[1] * e[0]};
        if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
        bool independent = true;
        for (const auto& y : cands) {
            Triple z{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
            if (z[0] == 0 && z[1] == 0 && z[2] == 0) independent = false;
        }
        if (independent) cands.push_back(x);
        if (cands.size() == 2) break;
    }
    return LineParam{line, ProjPoint(cands[0], line.basis()), ProjPoint(cands[1], line.basis())};
}

LineParam LineParam::through(const LinearForm& line, const ProjPoint& p0, const ProjPoint& p1) {
    const ProjPoint a = in_basis(p0, line.basis());
    const ProjPoint b = in_basis(p1, line.basis());
    if (!incident(a, line) || !incident(b, line))
        throw DegenerateInput("LineParam: points must lie on the line");
    if (a == b) throw DegenerateInput("LineParam: points must be distinct");
    return LineParam{line, a, b};
}

ProjPoint LineParam::at(const Rational& s, const Rational& t) const {
    return ProjPoint(combine(s, p0.coords(), t, p1.coords()), line.basis());
}

Restriction restrict(const FactorProduct& formula, const LineParam& lp) {
    const FactorProduct f = in_basis(formula, lp.line.basis());
    Restriction r;
    std::vector<std::size_t> vnum, vden;
    for (std::size_t i = 0; i < f.k(); ++i) {
        r.num.push_back({f.num()[i](lp.p0), f.num()[i](lp.p1)});
        if (is_zero(r.num.back())) vnum.push_back(i);
        r.den.push_back({f.den()[i](lp.p0), f.den()[i](lp.p1)});
        if (is_zero(r.den.back())) vden.push_back(i);
    }
    if (!vnum.empty() || !vden.empty()) throw VanishingFactor(std::move(vnum), std::move(vden));
    return r;
}

IdentityReport is_one_on_line_classical(const FactorProduct& formula, const LinearForm& line,
                                        std::uint64_t seed) {
    const FactorProduct f = in_basis(formula, line.basis());
    const LineParam lp = LineParam::of(line);
    Restriction r;
    try {
        r = restrict(f, lp);
    } catch (const VanishingFactor& e) {
        return vanishing_report(line, e);
    }
    std::vector<Rational> pn = expand(r.num);
    const std::vector<Rational> pd = expand(r.den);
    for (auto& c : pn) c *= f.multiplier();

    IdentityReport rep{line, Verdict::NotConstant, 0, std::nullopt, {}, {}, {}};
    // pn = c * pd for a constant c?
    Rational c = 0;
    bool have_c = false;
    bool proportional = true;
    for (std::size_t i = 0; i < pd.size() && proportional; ++i) {
        if (pd[i] == 0) {
            proportional = pn[i] == 0;
        } else if (!have_c) {
            c = pn[i] / pd[i];
            have_c = true;
        } else {
            proportional = pn[i] == c * pd[i];
        }
    }
    if (proportional && c != 0) {
        rep.constant = c;
        rep.verdict = c == 1 ? Verdict::IdenticallyOne : Verdict::IdenticallyConstant;
        rep.matching = pair_up(r, binary_ratio);
        return rep;
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Sample s = draw_sample(f, lp, rng);
        Rational v = classical_value(f, s);
        if (v != 1) {
            rep.witness = Witness{s.point, std::move(v), std::nullopt, std::nullopt};
            return rep;
        }
    }
    throw InternalConsistency("non-constant restriction but no witness found");
}

IdentityReport is_one_on_line_quantum(const FactorProduct& formula, const LinearForm& line,
                                      std::uint64_t seed) {
    const FactorProduct f = in_basis(formula, line.basis());
    const LineParam lp = LineParam::of(line);
    Restriction r;
    try {
        r = restrict(f, lp);
    } catch (const VanishingFactor& e) {
        return vanishing_report(line, e);
    }
    IdentityReport rep{line, Verdict::NotConstant, 0, std::nullopt, {}, {}, {}};

    std::vector<std::pair<BinaryForm, int>> nn, dd;
    for (const auto& b : r.num) nn.push_back(sign_normalized(b));
    for (const auto& b : r.den) dd.push_back(sign_normalized(b));
    std::vector<FactorMatch> match;
    std::vector<bool> used(dd.size(), false);
    int total = f.sign();
    bool complete = true;
    for (std::size_t i = 0; i < nn.size() && complete; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < dd.size() && !found; ++j) {
            if (used[j] || nn[i].first != dd[j].first) continue;
            used[j] = true;
            found = true;
            const int eps = nn[i].second * dd[j].second;
            total *= eps;
            match.push_back({i, j, Rational(eps)});
        }
        complete = found;
    }
    if (complete) {
        rep.matching = std::move(match);
        rep.constant = total;
        rep.verdict = total == 1 ? Verdict::IdenticallyOne : Verdict::IdenticallyConstant;
        return rep;
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Sample s = draw_sample(f, lp, rng);
        if (values_match_up_to_sign(f, s)) continue;
        for (double scale : kScales) {
            const double q = quantum_value(f, s, scale);
            if (std::fabs(q - 1.0) > 1e-6) {
                rep.witness = Witness{s.point, classical_value(f, s), quantum_x(s, scale), q};
                return rep;
            }
        }
    }
    throw InternalConsistency("non-matching sinh multisets but no witness found");
}

IdentityReport check_on_line(const FactorProduct& f, const LinearForm& line, std::uint64_t seed) {
    return f.quantum() ? is_one_on_line_quantum(f, line, seed)
                       : is_one_on_line_classical(f, line, seed);
}

std::vector<IdentityReport> check_on_lines(const FactorProduct& f,
                                           const std::vector<LinearForm>& lines,
                                           std::uint64_t seed) {
    std::vector<IdentityReport> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(check_on_line(f, l, seed));
    return out;
}

IdentityReport check_on_plane(const FactorProduct& f, std::uint64_t seed) {
    IdentityReport rep{std::nullopt, Verdict::NotConstant, 0, std::nullopt, {}, {}, {}};
    const FactorProduct c = cancel(f);
    if (c.is_empty()) {
        rep.constant = c.multiplier();
        rep.verdict = rep.constant == 1 ? Verdict::IdenticallyOne : Verdict::IdenticallyConstant;
        return rep;
    }
    std::vector<ProjPoint> candidates{ProjPoint(1, 1, 1, f.basis())};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 1000; ++i)
        candidates.emplace_back(random_rational(rng), random_rational(rng), random_rational(rng),
                                f.basis());
    for (const auto& p : candidates) {
        const EvalResult e = eval_classical(f, p);
        if (!e.finite()) continue;
        if (f.quantum()) {
            Sample s{p, {}, {}};
            for (const auto& l : f.num()) s.num_values.push_back(l(p));
            for (const auto& l : f.den()) s.den_values.push_back(l(p));
            if (values_match_up_to_sign(f, s)) continue;
            for (double scale : kScales) {
                const double q = quantum_value(f, s, scale);
                if (std::fabs(q - 1.0) > 1e-6) {
                    rep.witness = Witness{p, e.value, quantum_x(s, scale), q};
                    return rep;
                }
            }
        } else if (e.value != 1) {
            rep.witness = Witness{p, e.value, std::nullopt, std::nullopt};
            return rep;
        }
    }
    throw InternalConsistency("non-trivial product but no witness found");
}

bool numeric_crosscheck(const FactorProduct& formula, const LinearForm& line, int samples,
                        std::uint64_t seed) {
    const FactorProduct f = in_basis(formula, line.basis());
    const IdentityReport rep = check_on_line(f, line, seed);
    if (rep.verdict == Verdict::VanishingFactor) return true;
    const LineParam lp = LineParam::of(line);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    bool deviated = false;
    for (int i = 0; i < samples; ++i) {
        const Sample s = draw_sample(f, lp, rng);
        if (f.quantum()) {
            for (double scale : kScales) {
                const double q = quantum_value(f, s, scale);
                const double target = rep.verdict == Verdict::NotConstant ? 1.0 : rep.constant.get_d();
                const bool close = std::fabs(q - target) <= 1e-9 * std::max(1.0, std::fabs(target));
                if (rep.verdict == Verdict::NotConstant) deviated = deviated || !close;
                else if (!close) return false;
            }
        } else {
            const Rational v = classical_value(f, s);
            if (rep.verdict == Verdict::NotConstant) deviated = deviated || v != 1;
            else if (v != rep.constant) return false;
        }
    }
    return rep.verdict != Verdict::NotConstant || deviated || samples == 0;
}

bool check_symmetric(const FactorProduct& f) {
    for (const Perm3& g : {Perm3::swap_alpha_beta(), Perm3::swap_beta_gamma()})
        if (!is_trivial(ratio(act(g, f), f))) return false;
    return true;
}

namespace {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) return {Poly{}, a};
    Poly q(a.size() - b.size() + 1, Rational(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        const Rational c = a[i + b.size() - 1] / b.back();
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

Rational poly_eval(const Poly& a, const Rational& x) {
    Rational v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
    return v;
}

UnivariateFunction restrict_affine(const FactorProduct& formula, const ProjPoint& base,
                                   const ProjPoint& direction) {
    const FactorProduct f = in_basis(formula, base.basis());
    const ProjPoint d = in_basis(direction, base.basis());
    Poly num{f.multiplier()};
    Poly den{Rational(1)};
    for (std::size_t i = 0; i < f.k(); ++i) {
        Poly a{f.num()[i](base), f.num()[i](d)};
        Poly b{f.den()[i](base), f.den()[i](d)};
        trim(a);
        trim(b);
        num = poly_mul(num, a);
        den = poly_mul(den, b);
    }
    if (den.empty()) throw DegenerateInput("denominator vanishes identically along the family");
    if (num.empty()) return {Poly{}, Poly{Rational(1)}};
    const Poly g = poly_gcd(num, den);
    num = poly_divmod(num, g).first;
    den = poly_divmod(den, g).first;
    const Rational lead = den.back();
    for (auto& c : num) c /= lead;
    for (auto& c : den) c /= lead;
    return {num, den};
}

}  // namespace vogel
