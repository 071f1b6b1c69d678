#include "vogel/qsearch.hpp"

#include "vogel/errors.hpp"
#include "vogel/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace vogel {

std::string_view to_string(LineSet s) {
    return s == LineSet::ThreeLines ? "three-lines" : "four-lines";
}

std::vector<LinearForm> system_lines(LineSet s) {
    std::vector<LinearForm> out{LinearForm(1, 0, 0, Basis::Primed), LinearForm(0, 1, 0, Basis::Primed),
                                LinearForm(0, 0, 1, Basis::Primed)};
    if (s == LineSet::FourLines) out.emplace_back(3, -1, 0, Basis::Primed);
    return out;
}

std::string_view to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Nontrivial: return "nontrivial";
        case SolveStatus::Trivial: return "trivial";
        case SolveStatus::Infeasible: return "infeasible";
    }
    return "?";
}

std::string ConstraintSystem::unknown_name(int k, std::size_t u) {
    static constexpr const char* names[] = {"n", "x", "y"};
    return std::string(names[u / k]) + std::to_string(u % k + 1);
}

namespace {

void check_multipliers(const std::vector<Rational>& m, int k, const char* name) {
    if (static_cast<int>(m.size()) != k)
        throw InvalidMultiplier(std::string(name) + " must have " + std::to_string(k) + " entries");
    Rational prod = 1;
    for (const auto& q : m) {
        if (q == 0) throw InvalidMultiplier(std::string(name) + " has a zero entry");
        prod *= q;
    }
    if (prod != 1) throw InvalidMultiplier(std::string("product of ") + name + " is " + to_string(prod) + ", not 1");
}

std::string idx(int i) { return std::to_string(i + 1); }

}  // namespace

ConstraintSystem build_system(int k, LineSet lines, PermTriple perms, MultiplierAssignment mult) {
    if (k < 1) throw DegenerateInput("k must be at least 1");
    const bool four = lines == LineSet::FourLines;
    auto check_perm = [k](const Perm& p, const char* name) {
        if (static_cast<int>(p.size()) != k || !is_permutation(p))
            throw DegenerateInput(std::string(name) + " is not a permutation of size " + std::to_string(k));
    };
    check_perm(perms.s, "s");
    check_perm(perms.p, "p");
    if (four) check_perm(perms.v, "v");
    else if (!perms.v.empty()) throw DegenerateInput("v given for a three-line system");
    check_multipliers(mult.c, k, "c");
    check_multipliers(mult.kmul, k, "k");
    if (four) check_multipliers(mult.r, k, "r");
    else if (!mult.r.empty()) throw InvalidMultiplier("r given for a three-line system");

    ConstraintSystem sys;
    sys.k_ = k;
    sys.lines_ = lines;
    sys.perms_ = std::move(perms);
    sys.mult_ = std::move(mult);
    const auto& s = sys.perms_.s;
    const auto& p = sys.perms_.p;
    const auto& v = sys.perms_.v;
    const auto& c = sys.mult_.c;
    const auto& km = sys.mult_.kmul;
    const auto& r = sys.mult_.r;
    const std::size_t u = 3 * static_cast<std::size_t>(k);
    auto N = [](int i) { return static_cast<std::size_t>(i); };
    auto X = [k](int i) { return static_cast<std::size_t>(k + i); };
    auto Y = [k](int i) { return static_cast<std::size_t>(2 * k + i); };
    auto add = [&](std::string label, std::initializer_list<std::pair<std::size_t, Rational>> terms) {
        Equation e{std::move(label), std::vector<Rational>(u, Rational(0))};
        for (const auto& [col, coef] : terms) e.coeffs[col] += coef;
        sys.equations_.push_back(std::move(e));
    };
    for (int i = 0; i < k; ++i)
        add("x" + idx(i) + " = c" + idx(i) + " x" + idx(p[i]), {{X(i), 1}, {X(p[i]), -c[i]}});
    for (int i = 0; i < k; ++i)
        add("y" + idx(i) + " = k" + idx(i) + " y" + idx(s[i]), {{Y(i), 1}, {Y(s[i]), -km[i]}});
    for (int i = 0; i < k; ++i)
        add("k" + idx(i) + " n" + idx(s[i]) + " = c" + idx(i) + " n" + idx(p[i]),
            {{N(s[i]), km[i]}, {N(p[i]), -c[i]}});
    if (four) {
        for (int i = 0; i < k; ++i)
            add("y" + idx(i) + " = r" + idx(i) + " y" + idx(v[i]), {{Y(i), 1}, {Y(v[i]), -r[i]}});
        for (int i = 0; i < k; ++i)
            add("c" + idx(i) + " n" + idx(p[i]) + " + 3 x" + idx(i) + " = r" + idx(i) + " (n" + idx(v[i]) +
                    " + 3 x" + idx(v[i]) + ")",
                {{N(p[i]), c[i]}, {X(i), 3}, {N(v[i]), -r[i]}, {X(v[i]), -3 * r[i]}});
    }
    return sys;
}

FactorProduct assemble_q(const ConstraintSystem& sys, const std::vector<Rational>& u, bool quantum) {
    const int k = sys.k();
    if (u.size() != sys.unknowns()) throw DegenerateInput("wrong number of unknown values");
    std::vector<LinearForm> num, den;
    for (int i = 0; i < k; ++i) {
        num.emplace_back(u[i], u[k + i], u[2 * k + i], Basis::Primed);
        den.emplace_back(sys.mult().c[i] * u[sys.perms().p[i]], u[k + i], u[2 * k + i], Basis::Primed);
    }
    return FactorProduct(std::move(num), std::move(den), quantum, Basis::Primed);
}

std::vector<Rational> SolutionFamily::unknowns_at(const std::vector<Rational>& values) const {
    if (values.size() != params.size()) throw DegenerateInput("wrong number of parameter values");
    std::vector<Rational> out(expr.size(), Rational(0));
    for (std::size_t u = 0; u < expr.size(); ++u)
        for (std::size_t j = 0; j < values.size(); ++j)
            if (expr[u][j] != 0) out[u] += expr[u][j] * values[j];
    return out;
}

FactorProduct SolutionFamily::instantiate(const std::vector<Rational>& values) const {
    return assemble_q(system, unknowns_at(values), quantum);
}

VerifyReport verify_solution(const ConstraintSystem& sys, const std::vector<Rational>& unknowns) {
    if (unknowns.size() != sys.unknowns()) throw DegenerateInput("wrong number of unknown values");
    VerifyReport rep;
    for (const auto& e : sys.equations()) {
        Rational acc = 0;
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            if (e.coeffs[u] != 0) acc += e.coeffs[u] * unknowns[u];
        if (acc != 0) {
            rep.ok = false;
            rep.failed.push_back(e.label);
        }
    }
    return rep;
}

namespace {

bool has_zero_form(const SolutionFamily& fam, const std::vector<Rational>& u) {
    const int k = fam.system.k();
    for (int i = 0; i < k; ++i) {
        const bool xy_zero = u[k + i] == 0 && u[2 * k + i] == 0;
        if (xy_zero && (u[i] == 0 || u[fam.system.perms().p[i]] == 0)) return true;
    }
    return false;
}

FactorProduct draw_instance(const SolutionFamily& fam, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Rational> vals;
        for (std::size_t j = 0; j < fam.params.size(); ++j) vals.push_back(random_rational(rng, 1000));
        auto u = fam.unknowns_at(vals);
        if (!has_zero_form(fam, u)) return assemble_q(fam.system, u, fam.quantum);
    }
    throw DegenerateFamily("no instantiation without zero factors in 100 draws");
}

// Structural emptiness: some factor is the zero form for every parameter value.
bool symbolically_zero_form(const SolutionFamily& fam) {
    const int k = fam.system.k();
    auto zero_row = [&](std::size_t u) {
        return std::all_of(fam.expr[u].begin(), fam.expr[u].end(), [](const Rational& q) { return q == 0; });
    };
    for (int i = 0; i < k; ++i) {
        const bool xy = zero_row(k + i) && zero_row(2 * k + i);
        if (xy && (zero_row(i) || zero_row(fam.system.perms().p[i]))) return true;
    }
    return false;
}

struct Classified {
    SolveOutcome outcome;
    bool prunable;  // a subsystem with more equations cannot do better
};

Classified classify(const ConstraintSystem& sys, bool quantum, std::uint64_t seed) {
    Matrix m(sys.equations().size(), sys.unknowns());
    for (std::size_t i = 0; i < sys.equations().size(); ++i)
        for (std::size_t j = 0; j < sys.unknowns(); ++j) m(i, j) = sys.equations()[i].coeffs[j];
    Nullspace ns = nullspace(std::move(m));
    if (ns.basis.empty()) return {{SolveStatus::Infeasible, std::nullopt, "only the zero solution"}, true};

    SolutionFamily fam{sys, {}, {}, quantum, false};
    for (auto col : ns.free_columns) fam.params.push_back(ConstraintSystem::unknown_name(sys.k(), col));
    fam.expr.assign(sys.unknowns(), std::vector<Rational>(ns.basis.size(), Rational(0)));
    for (std::size_t j = 0; j < ns.basis.size(); ++j)
        for (std::size_t u = 0; u < sys.unknowns(); ++u) fam.expr[u][j] = ns.basis[j][u];
    if (symbolically_zero_form(fam))
        return {{SolveStatus::Infeasible, std::nullopt, "some factor is identically zero"}, true};

    std::mt19937_64 rng(seed);
    const auto lines = system_lines(sys.lines());
    int survivors = 0;
    for (int round = 0; round < 2; ++round) {
        FactorProduct q = cancel(draw_instance(fam, rng));
        if (q.is_empty()) {
            if (q.multiplier() != 1)
                return {{SolveStatus::Infeasible, std::nullopt, "cancels to a constant other than one"}, false};
            continue;
        }
        ++survivors;
        for (const auto& rep : check_on_lines(q, lines, seed)) {
            if (rep.is_one()) continue;
            const std::string why = rep.verdict == Verdict::VanishingFactor
                                        ? "a surviving factor vanishes on a system line"
                                        : "not identically one on a system line";
            return {{SolveStatus::Infeasible, std::nullopt, why}, false};
        }
    }
    if (survivors < 2) {
        fam.trivial = true;
        return {{SolveStatus::Trivial, std::move(fam), "cancels to one"}, true};
    }
    return {{SolveStatus::Nontrivial, std::move(fam), ""}, false};
}

}  // namespace

SolveOutcome solve(const ConstraintSystem& sys, bool quantum, std::uint64_t seed) {
    try {
        return classify(sys, quantum, seed).outcome;
    } catch (const DegenerateFamily& e) {
        return {SolveStatus::Infeasible, std::nullopt, e.what()};
    }
}

SolveOutcome solve_quantum(const ConstraintSystem& sys, std::uint64_t seed) {
    auto unit = [](const std::vector<Rational>& m) {
        return std::all_of(m.begin(), m.end(), [](const Rational& q) { return q == 1 || q == -1; });
    };
    if (!unit(sys.mult().c) || !unit(sys.mult().kmul) || !unit(sys.mult().r))
        throw InvalidMultiplier("quantum systems need multipliers equal to +1 or -1");
    return solve(sys, true, seed);
}

bool is_nontrivial(const SolutionFamily& family, std::uint64_t seed) {
    if (family.params.empty()) throw DegenerateFamily("family has no free parameters");
    std::mt19937_64 rng(seed);
    for (int round = 0; round < 2; ++round)
        if (cancel(draw_instance(family, rng)).is_empty()) return false;
    return true;
}

// ---------------------------------------------------------------------------------------------
// Enumeration

std::vector<PermTriple> canonical_perm_tuples(int k, LineSet lines) {
    const auto perms = all_perms(k);
    const bool four = lines == LineSet::FourLines;
    std::vector<std::pair<Perm, Perm>> conj;  // (tau, tau^-1)
    for (const auto& t : perms) conj.emplace_back(t, inverse(t));
    auto c = [](const std::pair<Perm, Perm>& t, const Perm& x) { return compose(t.first, compose(x, t.second)); };
    std::vector<PermTriple> out;
    for (const auto& s : perms)
        for (const auto& p : perms) {
            // prune on the (s, p) prefix first
            bool pair_min = true;
            for (const auto& t : conj) {
                const Perm cs = c(t, s);
                if (cs < s || (cs == s && c(t, p) < p)) {
                    pair_min = false;
                    break;
                }
            }
            if (!pair_min) continue;
            if (!four) {
                out.push_back({s, p, {}});
                continue;
            }
            for (const auto& v : perms) {
                bool minimal = true;
                for (const auto& t : conj) {
                    const Perm cs = c(t, s), cp = c(t, p);
                    if (cs == s && cp == p && c(t, v) < v) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) out.push_back({s, p, v});
            }
        }
    return out;
}

namespace {

std::vector<std::vector<Rational>> sign_vectors(int k) {
    std::vector<std::vector<Rational>> out;
    for (unsigned bits = 0; bits < (1u << k); ++bits) {
        if (__builtin_popcount(bits) % 2) continue;
        std::vector<Rational> v;
        for (int i = 0; i < k; ++i) v.emplace_back((bits >> i) & 1 ? -1 : 1);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

EnumerationResult enumerate(const EnumerationOptions& o) {
    if (!o.quantum)
        throw DegenerateInput("exhaustive enumeration needs quantum (+-1) multipliers; classical "
                              "multipliers form a continuum");
    if (o.k < 1 || o.k > 6) throw DegenerateInput("k must be between 1 and 6");
    const bool four = o.lines == LineSet::FourLines;
    const auto tuples = canonical_perm_tuples(o.k, o.lines);
    const auto signs = sign_vectors(o.k);
    const std::uint64_t S = signs.size();
    const std::uint64_t per_tuple = S * S * (four ? S : 1);

    EnumerationResult res;
    res.perm_tuples = tuples.size();
    res.total_cases = per_tuple * tuples.size();
    res.partial = o.budget < res.total_cases;
    const std::uint64_t limit = std::min(o.budget, res.total_cases);

    // Groups of tuples sharing (s, p): the three-line part is solved once per group.
    std::vector<std::size_t> group_start;
    for (std::size_t t = 0; t < tuples.size(); ++t)
        if (t == 0 || tuples[t].s != tuples[t - 1].s || tuples[t].p != tuples[t - 1].p)
            group_start.push_back(t);
    group_start.push_back(tuples.size());
    const std::size_t groups = group_start.size() - 1;

    std::vector<std::vector<FoundFamily>> found(groups);
    std::vector<std::uint64_t> examined(groups, 0), pruned(groups, 0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t g; (g = next.fetch_add(1)) < groups;) {
            try {
                const std::size_t t0 = group_start[g], t1 = group_start[g + 1];
                if (t0 * per_tuple >= limit) continue;
                const Perm& s = tuples[t0].s;
                const Perm& p = tuples[t0].p;
                for (std::uint64_t ci = 0; ci < S; ++ci)
                    for (std::uint64_t ki = 0; ki < S; ++ki) {
                        bool skip = false;
                        if (four) {
                            const auto base = build_system(o.k, LineSet::ThreeLines, {s, p, {}},
                                                           {signs[ci], signs[ki], {}});
                            try {
                                skip = classify(base, true, o.seed).prunable;
                            } catch (const DegenerateFamily&) {
                                skip = true;
                            }
                        }
                        for (std::size_t t = t0; t < t1; ++t)
                            for (std::uint64_t ri = 0; ri < (four ? S : 1); ++ri) {
                                const std::uint64_t index =
                                    t * per_tuple + (ci * S + ki) * (four ? S : 1) + ri;
                                if (index >= limit) continue;
                                ++examined[g];
                                if (skip) {
                                    ++pruned[g];
                                    continue;
                                }
                                MultiplierAssignment m{signs[ci], signs[ki], {}};
                                if (four) m.r = signs[ri];
                                const auto sys = build_system(o.k, o.lines, tuples[t], std::move(m));
                                SolveOutcome out = solve(sys, true, o.seed ^ index);
                                if (out.status != SolveStatus::Nontrivial) continue;
                                std::mt19937_64 rng(o.seed + index);
                                std::vector<Rational> vals;
                                for (std::size_t j = 0; j < out.family->params.size(); ++j)
                                    vals.push_back(random_rational(rng, 1000));
                                auto reports = check_on_lines(cancel(out.family->instantiate(vals)),
                                                              system_lines(o.lines), o.seed);
                                found[g].push_back({index, std::move(*out.family), std::move(reports)});
                            }
                    }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned nthreads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, std::max<std::size_t>(groups, 1)));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t g = 0; g < groups; ++g) {
        res.cases += examined[g];
        res.pruned += pruned[g];
        for (auto& f : found[g]) res.families.push_back(std::move(f));
    }
    std::sort(res.families.begin(), res.families.end(),
              [](const FoundFamily& a, const FoundFamily& b) { return a.case_index < b.case_index; });
    return res;
}

// ---------------------------------------------------------------------------------------------
// Closed forms

FactorProduct builtin_q33(const Rational& c1, const Rational& c2, const Rational& x, const Rational& y,
                          bool quantum) {
    if (c1 == 0 || c2 == 0) throw DegenerateInput("c1 and c2 must be nonzero");
    const auto P = Basis::Primed;
    const Rational c12 = c1 * c2;
    return FactorProduct({LinearForm(1, x, y, P), LinearForm(c12, c2 * x, y, P), LinearForm(c1, c12 * x, y, P)},
                         {LinearForm(c1, x, y, P), LinearForm(1, c2 * x, y, P), LinearForm(c12, c12 * x, y, P)},
                         quantum, P);
}

FactorProduct builtin_q_prop4(const Rational& n, const Rational& x, const Rational& xp, const Rational& y,
                              bool quantum) {
    const auto P = Basis::Primed;
    const Rational np = -(n + 3 * x + 3 * xp);
    return FactorProduct({LinearForm(n, x, -y, P), LinearForm(np, xp, -y, P), LinearForm(n, xp, y, P),
                          LinearForm(np, x, y, P)},
                         {LinearForm(np, x, -y, P), LinearForm(n, xp, -y, P), LinearForm(np, xp, y, P),
                          LinearForm(n, x, y, P)},
                         quantum, P);
}

namespace {

FactorProduct inverse_of(const FactorProduct& f) {
    return FactorProduct(f.den(), f.num(), f.quantum(), f.basis(), f.sign(), 1 / f.scalar());
}

}  // namespace

std::optional<Q33Match> match_q33(const FactorProduct& input) {
    if (input.k() != 3) return std::nullopt;
    const FactorProduct base = in_basis(with_quantum(input, false), Basis::Primed);
    for (bool inverted : {false, true}) {
        const FactorProduct f = inverted ? inverse_of(base) : base;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                if (a == b) continue;
                const auto& fa = f.num()[a];
                const auto& fb = f.num()[b];
                if (fa[0] == 0 || fb[0] == 0) continue;
                const Rational x = fa[1] / fa[0], y = fa[2] / fa[0];
                const Rational u = fb[1] / fb[0], w = fb[2] / fb[0];
                if (x == 0 || y == 0 || u == 0 || w == 0) continue;
                const Rational c1 = x / u;
                const Rational c2 = y / (w * c1);
                if (is_trivial(ratio(f, builtin_q33(c1, c2, x, y)))) return Q33Match{c1, c2, x, y, inverted};
            }
    }
    return std::nullopt;
}

namespace {

// Coefficient rows of the eight builtin_q_prop4 forms as linear maps of (n, x, xp, y).
using FormMap = std::array<std::array<int, 4>, 3>;

const std::array<FormMap, 8>& prop4_maps() {
    static const std::array<FormMap, 8> maps = [] {
        const std::array<int, 4> n{1, 0, 0, 0}, np{-1, -3, -3, 0}, x{0, 1, 0, 0}, xp{0, 0, 1, 0},
            y{0, 0, 0, 1}, my{0, 0, 0, -1};
        return std::array<FormMap, 8>{FormMap{n, x, my}, FormMap{np, xp, my}, FormMap{n, xp, y}, FormMap{np, x, y},
                                      FormMap{np, x, my}, FormMap{n, xp, my}, FormMap{np, xp, y}, FormMap{n, x, y}};
    }();
    return maps;
}

// Solves M_a theta = la f_a, M_b theta = lb f_b. With fixed_scales the l's are the given signs;
// otherwise la = 1 and lb is an unknown. Returns theta when the solution is unique.
std::optional<std::array<Rational, 4>> solve_two(const FormMap& ma, const LinearForm& fa, const FormMap& mb,
                                                 const LinearForm& fb, bool fixed_scales, int la, int lb) {
    const std::size_t cols = fixed_scales ? 5 : 6;  // theta (4), [lb], rhs
    Matrix m(6, cols);
    for (int r = 0; r < 3; ++r) {
        for (int j = 0; j < 4; ++j) m(r, j) = ma[r][j];
        m(r, cols - 1) = la * fa[r];
        for (int j = 0; j < 4; ++j) m(3 + r, j) = mb[r][j];
        if (fixed_scales) m(3 + r, cols - 1) = lb * fb[r];
        else m(3 + r, 4) = -fb[r];
    }
    const auto piv = rref(m);
    if (!piv.empty() && piv.back() == cols - 1) return std::nullopt;  // inconsistent
    if (piv.size() != cols - 1) return std::nullopt;                  // not unique
    std::array<Rational, 4> theta;
    for (int j = 0; j < 4; ++j) theta[j] = m(j, cols - 1);
    return theta;
}

}  // namespace

std::optional<Prop4Match> match_prop4(const FactorProduct& input) {
    if (input.k() != 4) return std::nullopt;
    const FactorProduct base = in_basis(input, Basis::Primed);
    const bool q = base.quantum();
    const auto& maps = prop4_maps();
    for (bool inverted : {false, true}) {
        const FactorProduct f = inverted ? inverse_of(base) : base;
        for (std::size_t sa = 0; sa < 8; ++sa)
            for (std::size_t b = 1; b < 4; ++b)
                for (std::size_t sb = 0; sb < 8; ++sb) {
                    if (sb == sa) continue;
                    for (int signs = 0; signs < (q ? 4 : 1); ++signs) {
                        const int la = signs & 1 ? -1 : 1, lb = signs & 2 ? -1 : 1;
                        auto theta = solve_two(maps[sa], f.num()[0], maps[sb], f.num()[b], q, la, lb);
                        if (!theta) continue;
                        const auto& t = *theta;
                        FactorProduct g = [&]() -> FactorProduct {
                            try {
                                return builtin_q_prop4(t[0], t[1], t[2], t[3], q);
                            } catch (const Error&) {
                                return FactorProduct::empty(q, Basis::Primed);
                            }
                        }();
                        if (g.is_empty()) continue;
                        if (is_trivial(ratio(f, g))) return Prop4Match{t[0], t[1], t[2], t[3], inverted};
                    }
                }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------------------------
// Classical three-line scan

namespace {

std::vector<std::vector<int>> cycles_of(const Perm& p) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            c.push_back(static_cast<int>(j));
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string rref_key(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rows[i][j]);
    const auto piv = rref(m);
    std::string key;
    for (std::size_t i = 0; i < piv.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) key += m(i, j).get_str() + ",";
        key += ";";
    }
    return key;
}

Rational pow_rational(const Rational& t, long long e) {
    Rational out = 1;
    const Rational base = e < 0 ? 1 / t : t;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
    return out;
}

}  // namespace

std::vector<ClassicalScanEntry> scan_classical_three_lines(int k, std::uint64_t seed) {
    if (k < 1 || k > 4) throw DegenerateInput("classical scan supports 1 <= k <= 4");
    const std::size_t V = 2 * static_cast<std::size_t>(k);  // c_0..c_{k-1}, k_0..k_{k-1}
    std::vector<ClassicalScanEntry> out;
    std::mt19937_64 rng(seed);
    for (const auto& s : all_perms(k))
        for (const auto& p : all_perms(k)) {
            ClassicalScanEntry entry;
            entry.perms = {s, p, {}};
            std::vector<std::vector<long long>> cyc;
            for (const auto& c : cycles_of(p)) {
                std::vector<long long> row(V, 0);
                for (int i : c) row[i] += 1;
                cyc.push_back(row);
            }
            for (const auto& c : cycles_of(s)) {
                std::vector<long long> row(V, 0);
                for (int i : c) row[k + i] += 1;
                cyc.push_back(row);
            }
            const Perm pinv = inverse(p);
            for (const auto& c : cycles_of(compose(s, pinv))) {
                std::vector<long long> row(V, 0);
                for (int j : c) {
                    const int i = pinv[j];
                    row[i] += 1;
                    row[k + i] -= 1;
                }
                cyc.push_back(row);
            }
            std::vector<long long> gc(V, 0), gk(V, 0);
            for (int i = 0; i < k; ++i) gc[i] = gk[k + i] = 1;

            std::set<std::string> seen;
            for (std::uint64_t subset = 0; subset < (1ull << cyc.size()) && !entry.nontrivial; ++subset) {
                std::vector<std::vector<long long>> rows{gc, gk};
                for (std::size_t j = 0; j < cyc.size(); ++j)
                    if (subset >> j & 1) rows.push_back(cyc[j]);
                if (!seen.insert(rref_key(rows, V)).second) continue;
                const auto basis = integer_kernel_basis(rows, V);
                for (std::uint64_t sg = 0; sg < (1ull << V) && !entry.nontrivial; ++sg) {
                    bool ok = true;
                    for (const auto& row : rows) {
                        long long parity = 0;
                        for (std::size_t v = 0; v < V; ++v)
                            if ((sg >> v & 1) && (row[v] % 2 != 0)) ++parity;
                        if (parity % 2) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    ++entry.components;
                    std::vector<Rational> mult(V);
                    for (std::size_t v = 0; v < V; ++v) mult[v] = (sg >> v & 1) ? -1 : 1;
                    for (const auto& b : basis) {
                        std::uniform_int_distribution<int> d(2, 97);
                        Rational t(d(rng), d(rng));
                        t.canonicalize();
                        for (std::size_t v = 0; v < V; ++v)
                            if (b[v] != 0) mult[v] *= pow_rational(t, b[v]);
                    }
                    MultiplierAssignment m{{mult.begin(), mult.begin() + k}, {mult.begin() + k, mult.end()}, {}};
                    const auto sys = build_system(k, LineSet::ThreeLines, entry.perms, std::move(m));
                    SolveOutcome res = solve(sys, false, seed ^ (subset * 131 + sg));
                    if (res.status != SolveStatus::Nontrivial) continue;
                    entry.nontrivial = true;
                    if (k == 3) {
                        std::vector<Rational> vals;
                        for (std::size_t j = 0; j < res.family->params.size(); ++j)
                            vals.push_back(random_rational(rng, 1000));
                        entry.q33 = match_q33(res.family->instantiate(vals));
                    }
                    entry.family = std::move(res.family);
                }
            }
            out.push_back(std::move(entry));
        }
    return out;
}

std::optional<SystemFit> fit_to_system(const FactorProduct& input, const PermTriple& perms, LineSet lines) {
    const FactorProduct f = in_basis(input, Basis::Primed);
    const int k = static_cast<int>(f.k());
    const bool four = lines == LineSet::FourLines;
    if (k == 0 || static_cast<int>(perms.s.size()) != k || static_cast<int>(perms.p.size()) != k ||
        (four && static_cast<int>(perms.v.size()) != k))
        return std::nullopt;
    std::vector<Rational> n(k), x(k), y(k), dn(k);
    std::vector<bool> used(k, false);
    for (int i = 0; i < k; ++i) {
        const auto& a = f.num()[i];
        n[i] = a[0];
        x[i] = a[1];
        y[i] = a[2];
        if (x[i] == 0 && y[i] == 0) return std::nullopt;
        bool found = false;
        for (int j = 0; j < k && !found; ++j) {
            const auto& b = f.den()[j];
            if (used[j] || x[i] * b[2] != y[i] * b[1]) continue;
            const Rational lambda = x[i] != 0 ? Rational(x[i] / b[1]) : Rational(y[i] / b[2]);
            if (lambda == 0) continue;
            used[j] = found = true;
            dn[i] = lambda * b[0];
        }
        if (!found) return std::nullopt;
    }
    MultiplierAssignment m;
    for (int i = 0; i < k; ++i) {
        if (n[perms.p[i]] == 0) return std::nullopt;
        m.c.push_back(dn[i] / n[perms.p[i]]);
    }
    for (int i = 0; i < k; ++i) {
        const int si = perms.s[i];
        if (n[si] != 0) m.kmul.push_back(dn[i] / n[si]);
        else if (y[si] != 0) m.kmul.push_back(y[i] / y[si]);
        else return std::nullopt;
    }
    if (four)
        for (int i = 0; i < k; ++i) {
            const int vi = perms.v[i];
            const Rational base = n[vi] + 3 * x[vi];
            if (base != 0) m.r.push_back((dn[i] + 3 * x[i]) / base);
            else if (y[vi] != 0) m.r.push_back(y[i] / y[vi]);
            else return std::nullopt;
        }
    try {
        auto sys = build_system(k, lines, perms, std::move(m));
        std::vector<Rational> u = n;
        u.insert(u.end(), x.begin(), x.end());
        u.insert(u.end(), y.begin(), y.end());
        VerifyReport rep = verify_solution(sys, u);
        return SystemFit{std::move(sys), std::move(u), std::move(rep)};
    } catch (const InvalidMultiplier&) {
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------------------------
// Four-line k=4 relations

PermTriple prop4_perms() { return {{1, 0, 3, 2}, {3, 2, 1, 0}, {2, 3, 0, 1}}; }

Prop4Instance prop4_relations(const Rational& k1, const Rational& k3, const Rational& c2, const Rational& x1,
                              const Rational& x2_in, const Rational& y3, const Rational& n1, bool minus_branch) {
    if (k1 == 0 || k3 == 0 || c2 == 0) throw InvalidMultiplier("k1, k3 and c2 must be nonzero");
    const Rational c1 = c2 * k1 * k3, c3 = 1 / c2, c4 = 1 / (c2 * k1 * k3);
    const Rational k2 = 1 / k1, k4 = 1 / k3;
    const Rational r1 = minus_branch ? Rational(-c2 * k1) : Rational(c2 * k1);
    const Rational r2 = r1 * k3 / k1, r3 = 1 / r1, r4 = k1 / (r1 * k3);
    const Rational x2 = minus_branch ? x2_in : Rational(x1 / k1);
    const Rational x3 = x2 / c2, x4 = x1 / (c2 * k1 * k3);
    const Rational y1 = r1 * y3, y2 = y1 / k1, y4 = y3 / k3;
    const Rational n2 = minus_branch ? Rational(-(n1 + 3 * x1 + 3 * k1 * x2) / k1) : Rational(n1 / k1);
    const Rational n3 = n1 / (k1 * c2), n4 = n2 * k1 / (c2 * k1 * k3);
    auto sys = build_system(4, LineSet::FourLines, prop4_perms(), {{c1, c2, c3, c4}, {k1, k2, k3, k4}, {r1, r2, r3, r4}});
    return {std::move(sys), {n1, n2, n3, n4, x1, x2, x3, x4, y1, y2, y3, y4}};
}

}  // namespace vogel
