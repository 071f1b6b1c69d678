#include "vogel/formula.hpp"

#include "vogel/errors.hpp"

#include <cmath>
#include <numbers>

namespace vogel {

FactorProduct::FactorProduct(std::vector<LinearForm> num, std::vector<LinearForm> den,
                             bool quantum, Basis basis, int sign, Rational scalar)
    : num_(std::move(num)),
      den_(std::move(den)),
      quantum_(quantum),
      basis_(basis),
      sign_(sign),
      scalar_(std::move(scalar)) {
    if (num_.size() != den_.size())
        throw DegenerateInput("numerator and denominator need the same number of factors");
    if (sign_ != 1 && sign_ != -1) throw DegenerateInput("sign must be +1 or -1");
    if (scalar_ <= 0) throw DegenerateInput("scalar must be positive");
    if (quantum_ && scalar_ != 1)
        throw DegenerateInput("quantum formulas admit no scalar beyond the sign");
    for (const auto* list : {&num_, &den_})
        for (const auto& f : *list)
            if (f.basis() != basis_) throw BasisMismatch("factor basis differs from formula basis");
}

FactorProduct with_quantum(const FactorProduct& f, bool quantum) {
    if (quantum && f.scalar() != 1)
        throw DegenerateInput("cannot read a formula with a non-unit scalar as quantum");
    return FactorProduct(f.num(), f.den(), quantum, f.basis(), f.sign(), f.scalar());
}

FactorProduct in_basis(const FactorProduct& f, Basis basis) {
    if (f.basis() == basis) return f;
    std::vector<LinearForm> num, den;
    for (const auto& l : f.num()) num.push_back(in_basis(l, basis));
    for (const auto& l : f.den()) den.push_back(in_basis(l, basis));
    return FactorProduct(std::move(num), std::move(den), f.quantum(), basis, f.sign(), f.scalar());
}

FactorProduct act(const Perm3& perm, const FactorProduct& f) {
    std::vector<LinearForm> num, den;
    for (const auto& l : f.num()) num.push_back(act(perm, l));
    for (const auto& l : f.den()) den.push_back(act(perm, l));
    return FactorProduct(std::move(num), std::move(den), f.quantum(), f.basis(), f.sign(),
                         f.scalar());
}

std::string_view to_string(EvalResult::Kind kind) {
    switch (kind) {
        case EvalResult::Kind::Finite: return "finite";
        case EvalResult::Kind::Zero: return "zero";
        case EvalResult::Kind::Pole: return "pole";
        case EvalResult::Kind::Indeterminate: return "indeterminate";
    }
    return "?";
}

EvalResult eval_classical(const FactorProduct& f, const ProjPoint& point) {
    const ProjPoint p = in_basis(point, f.basis());
    EvalResult r{EvalResult::Kind::Finite, f.multiplier(), {}, {}};
    Rational den = 1;
    for (std::size_t i = 0; i < f.k(); ++i) {
        const Rational a = f.num()[i](p);
        const Rational b = f.den()[i](p);
        if (a == 0) r.vanishing_num.push_back(i);
        else r.value *= a;
        if (b == 0) r.vanishing_den.push_back(i);
        else den *= b;
    }
    const bool zero = !r.vanishing_num.empty();
    const bool pole = !r.vanishing_den.empty();
    if (zero && pole) r.kind = EvalResult::Kind::Indeterminate;
    else if (zero) r.kind = EvalResult::Kind::Zero;
    else if (pole) r.kind = EvalResult::Kind::Pole;
    if (r.kind != EvalResult::Kind::Finite) r.value = 0;
    else r.value /= den;
    return r;
}

namespace {

// log|sinh(z)| for z != 0 without overflow.
double log_abs_sinh(double z) {
    const double a = std::fabs(z);
    if (a < 1.0) return std::log(std::sinh(a));
    return a + std::log1p(-std::exp(-2.0 * a)) - std::numbers::ln2;
}

}  // namespace

double eval_quantum(const FactorProduct& f, const ProjPoint& point, double x) {
    if (!f.quantum()) throw DegenerateInput("eval_quantum needs a quantum formula");
    if (x == 0.0) throw DegenerateInput("eval_quantum: x must be nonzero");
    const ProjPoint p = in_basis(point, f.basis());
    double log_mag = 0.0;
    int sign = f.sign();
    for (std::size_t i = 0; i < f.k(); ++i) {
        const Rational a = f.num()[i](p);
        if (a == 0)
            throw SingularPoint("numerator factor " + std::to_string(i) + " vanishes at the point",
                                true, i);
        const Rational b = f.den()[i](p);
        if (b == 0)
            throw SingularPoint(
                "denominator factor " + std::to_string(i) + " vanishes at the point", false, i);
        const double za = x * a.get_d();
        const double zb = x * b.get_d();
        log_mag += log_abs_sinh(za) - log_abs_sinh(zb);
        if ((za < 0) != (zb < 0)) sign = -sign;
    }
    return sign * std::exp(log_mag);
}

FactorProduct adjoint_formula() {
    const Rational q(1, 4), h(1, 2);
    auto L = [](Rational a, Rational b, Rational c) { return LinearForm(a, b, c, Basis::Unprimed); };
    std::vector<LinearForm> num = {L(h, h, q), L(h, q, h), L(q, h, h)};
    std::vector<LinearForm> den = {L(q, 0, 0), L(0, q, 0), L(0, 0, q)};
    return FactorProduct(std::move(num), std::move(den), true, Basis::Unprimed, -1);
}

FactorProduct x2k_adn_formula(int k, int n) {
    if (k < 0 || n < 0) throw DegenerateInput("x2k_adn_formula: k and n must be non-negative");
    std::vector<LinearForm> num, den;
    // Each factor a*alpha + b*beta + c*gamma is stored divided by four.
    auto push = [](std::vector<LinearForm>& out, Rational a, Rational b, Rational c, int times) {
        for (int t = 0; t < times; ++t)
            out.emplace_back(a / 4, b / 4, c / 4, Basis::Unprimed);
    };
    for (int i = 0; i < k; ++i) {
        push(num, i - 2, -2, 0, 2);      // (alpha (i-2) - 2 beta)^2
        push(num, i - 2, 0, -2, 2);      // (alpha (i-2) - 2 gamma)^2
        push(num, -(i - 2), 1, 1, 2);    // (beta + gamma - alpha (i-2))^2
        push(den, i + 1, 0, 0, 2);       // (alpha (i+1))^2
        push(den, -(i - 1), 1, 0, 2);    // (beta - alpha (i-1))^2
        push(den, -(i - 1), 0, 1, 2);    // (gamma - alpha (i-1))^2
    }
    for (int i = 0; i <= n; ++i) {
        const int j = i + k;
        push(num, j - 2, -2, 0, 1);
        push(num, j - 2, 0, -2, 1);
        push(num, -(j - 2), 1, 1, 1);
        push(den, j + 1, 0, 0, 1);
        push(den, -(j - 1), 1, 0, 1);
        push(den, -(j - 1), 0, 1, 1);
    }
    for (int i = 1; i <= 2 * k + n; ++i) {
        push(num, i - 3, -1, -2, 1);
        push(num, i - 3, -2, -1, 1);
        push(num, i - 5, -2, -2, 1);
        push(den, i - 2, -2, 0, 1);
        push(den, i - 2, 0, -2, 1);
        push(den, -(i - 2), 1, 1, 1);
    }
    push(num, 1, 1, 0, 1);
    push(num, 1, 0, 1, 1);
    push(num, n + 1, 0, 0, 1);
    push(den, 2, 2, 0, 1);
    push(den, 2, 0, 2, 1);
    push(den, 2, 1, 1, 1);
    push(num, 3 * k + n - 4, -2, -2, 1);
    push(num, 3 * k + 2 * n - 3, -2, -2, 1);
    push(den, 3, 2, 2, 1);
    push(den, 4, 2, 2, 1);
    return FactorProduct(std::move(num), std::move(den), true, Basis::Unprimed);
}

namespace {

void require_compatible(const FactorProduct& f, const FactorProduct& g) {
    if (f.quantum() != g.quantum())
        throw FormulaMismatch("cannot combine classical and quantum formulas");
    if (f.basis() != g.basis()) throw FormulaMismatch("cannot combine formulas in different bases");
}

}  // namespace

FactorProduct multiply(const FactorProduct& f, const FactorProduct& g) {
    require_compatible(f, g);
    auto num = f.num();
    auto den = f.den();
    num.insert(num.end(), g.num().begin(), g.num().end());
    den.insert(den.end(), g.den().begin(), g.den().end());
    return FactorProduct(std::move(num), std::move(den), f.quantum(), f.basis(),
                         f.sign() * g.sign(), f.scalar() * g.scalar());
}

FactorProduct ratio(const FactorProduct& f, const FactorProduct& g) {
    require_compatible(f, g);
    auto num = f.num();
    auto den = f.den();
    num.insert(num.end(), g.den().begin(), g.den().end());
    den.insert(den.end(), g.num().begin(), g.num().end());
    return FactorProduct(std::move(num), std::move(den), f.quantum(), f.basis(),
                         f.sign() * g.sign(), f.scalar() / g.scalar());
}

FactorProduct cancel(const FactorProduct& f) {
    std::vector<LinearForm> num;
    std::vector<bool> used(f.k(), false);
    Rational mult = f.multiplier();
    for (const auto& a : f.num()) {
        bool removed = false;
        for (std::size_t j = 0; j < f.k() && !removed; ++j) {
            if (used[j]) continue;
            const auto& b = f.den()[j];
            if (f.quantum()) {
                if (a == b) {
                    removed = true;
                } else if (a == -b) {
                    removed = true;
                    mult = -mult;
                }
            } else {
                const Rational c = proportionality(a, b);
                if (c != 0) {
                    removed = true;
                    mult *= c;
                }
            }
            if (removed) used[j] = true;
        }
        if (!removed) num.push_back(a);
    }
    std::vector<LinearForm> den;
    for (std::size_t j = 0; j < f.k(); ++j)
        if (!used[j]) den.push_back(f.den()[j]);
    const int sign = mult < 0 ? -1 : 1;
    return FactorProduct(std::move(num), std::move(den), f.quantum(), f.basis(), sign,
                         mult * sign);
}

bool is_trivial(const FactorProduct& f) {
    const FactorProduct c = cancel(f);
    return c.is_empty() && c.multiplier() == 1;
}

}  // namespace vogel
