#include "vogel/linalg.hpp"

#include <numeric>

namespace vogel {

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Nullspace nullspace(Matrix m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Nullspace ns;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        ns.basis.push_back(std::move(v));
        ns.free_columns.push_back(free);
    }
    return ns;
}

std::vector<std::vector<long long>> integer_kernel_basis(
    const std::vector<std::vector<long long>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rows[i][j]);
    const Nullspace ns = nullspace(std::move(m));
    std::vector<std::vector<long long>> out;
    for (const auto& v : ns.basis) {
        Integer l = 1;
        for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
        std::vector<long long> iv;
        for (const auto& q : v) {
            const Integer z = q.get_num() * (l / q.get_den());
            iv.push_back(z.get_si());
        }
        out.push_back(std::move(iv));
    }
    return out;
}

}  // namespace vogel
