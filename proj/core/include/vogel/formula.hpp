#pragma once

// Universal (quantum) dimension formulas written as ratios of products of linear forms.

#include "vogel/plane.hpp"

#include <cstddef>
#include <vector>

namespace vogel {

/// multiplier * prod num_i / prod den_i, or in the quantum reading
/// sign * prod sinh(x num_i) / prod sinh(x den_i).
///
/// The multiplier is sign * scalar with scalar > 0. Quantum formulas only ever carry a sign;
/// scalars appear when classical cancellation folds proportional factors together.
class FactorProduct {
public:
    /// Throws DegenerateInput when |num| != |den| and BasisMismatch when a form is in
    /// another basis.
    FactorProduct(std::vector<LinearForm> num, std::vector<LinearForm> den, bool quantum,
                  Basis basis, int sign = 1, Rational scalar = 1);

    static FactorProduct empty(bool quantum, Basis basis) { return {{}, {}, quantum, basis}; }

    const std::vector<LinearForm>& num() const noexcept { return num_; }
    const std::vector<LinearForm>& den() const noexcept { return den_; }
    bool quantum() const noexcept { return quantum_; }
    Basis basis() const noexcept { return basis_; }
    int sign() const noexcept { return sign_; }
    const Rational& scalar() const noexcept { return scalar_; }
    Rational multiplier() const { return sign_ * scalar_; }
    std::size_t k() const noexcept { return num_.size(); }
    bool is_empty() const noexcept { return num_.empty(); }

    friend bool operator==(const FactorProduct&, const FactorProduct&) = default;

private:
    std::vector<LinearForm> num_;
    std::vector<LinearForm> den_;
    bool quantum_;
    Basis basis_;
    int sign_;
    Rational scalar_;
};

/// Same factors with the quantum flag replaced. The classical view of a quantum formula is its
/// x -> 0 limit, since sinh(c x) / sinh(d x) -> c / d and both sides have k factors.
FactorProduct with_quantum(const FactorProduct& f, bool quantum);
FactorProduct in_basis(const FactorProduct& f, Basis basis);
/// Applies the coordinate permutation to every factor.
FactorProduct act(const Perm3& perm, const FactorProduct& f);

struct EvalResult {
    enum class Kind { Finite, Zero, Pole, Indeterminate };
    Kind kind;
    Rational value;  // meaningful for Finite only
    std::vector<std::size_t> vanishing_num;
    std::vector<std::size_t> vanishing_den;

    bool finite() const noexcept { return kind == Kind::Finite; }
};

std::string_view to_string(EvalResult::Kind kind);

/// Exact classical value at p (converted to the formula's basis). Independent of the
/// representative of p. Singular points are reported through EvalResult::kind.
EvalResult eval_classical(const FactorProduct& f, const ProjPoint& p);

/// sign * prod sinh(x num_i(p)) / prod sinh(x den_i(p)) at the representative p as given.
/// Requires a quantum formula (DegenerateInput otherwise) and x != 0; throws SingularPoint
/// naming the first vanishing factor.
double eval_quantum(const FactorProduct& f, const ProjPoint& p, double x);

/// The adjoint quantum dimension:
///   -sinh[x: (g+2b+2a)/4 (2g+b+2a)/4 (2g+2b+a)/4 / (a/4 b/4 g/4)].
FactorProduct adjoint_formula();

/// Quantum dimension of the Cartan product of X2^k and ad^n (unprimed, 1/4 stored in the
/// coefficients). Throws DegenerateInput for negative k or n.
FactorProduct x2k_adn_formula(int k, int n);

/// Concatenates factor lists; quantum flags and bases must match (FormulaMismatch).
FactorProduct multiply(const FactorProduct& f, const FactorProduct& g);
/// f / g as a factor product.
FactorProduct ratio(const FactorProduct& f, const FactorProduct& g);

/// Removes numerator/denominator pairs that cancel. Classical: proportional pairs, with the
/// ratio folded into the multiplier. Quantum: pairs equal up to sign, flipping the sign.
/// Factor order of survivors is preserved; the result is idempotent under cancel().
FactorProduct cancel(const FactorProduct& f);

/// cancel() leaves no factors and a multiplier of one.
bool is_trivial(const FactorProduct& f);

}  // namespace vogel
