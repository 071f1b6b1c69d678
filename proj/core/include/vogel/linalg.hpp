#pragma once

#include "vogel/rational.hpp"

#include <cstddef>
#include <vector>

namespace vogel {

/// Dense row-major rational matrix.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rational(0)) {}

    Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix& m);

struct Nullspace {
    /// Basis vectors (each of length cols); one per free column.
    std::vector<std::vector<Rational>> basis;
    /// The free column that indexes each basis vector (its entry there is 1).
    std::vector<std::size_t> free_columns;
};

Nullspace nullspace(Matrix m);

/// Integer matrix variant used by the exponent-lattice computations; entries must stay small.
std::vector<std::vector<long long>> integer_kernel_basis(const std::vector<std::vector<long long>>& rows,
                                                         std::size_t cols);

}  // namespace vogel
