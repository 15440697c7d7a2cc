// Exact Gaussian elimination over a field: rank, inverse, nullspace bases.
// Pivoting is first-nonzero, so all outputs are deterministic functions of
// the input. Row operations skip zero multipliers, which matters for the
// large sparse systems coming out of the hom solvers.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mfwild/matrix.hpp"

namespace mfwild {

namespace detail {

/// In-place forward elimination; returns pivot column per pivot row.
/// Rows are reordered so row r has its pivot in pivots[r].
template <class K>
std::vector<size_t> echelonize(std::vector<std::vector<K>>& rows, size_t ncols) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
        size_t sel = rows.size();
        for (size_t i = r; i < rows.size(); ++i)
            if (!is_zero_value(rows[i][col])) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        K inv = rows[r][col].inv();
        for (size_t j = col; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
        for (size_t i = r + 1; i < rows.size(); ++i) {
            const K f = rows[i][col];
            if (is_zero_value(f)) continue;
            rows[i][col] = K(0);
            for (size_t j = col + 1; j < ncols; ++j) {
                if (is_zero_value(rows[r][j])) continue;
                rows[i][j] -= f * rows[r][j];
            }
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

/// Back-substitution to reduced row echelon form.
template <class K>
void back_substitute(std::vector<std::vector<K>>& rows, const std::vector<size_t>& pivots, size_t ncols) {
    for (size_t r = pivots.size(); r-- > 0;) {
        size_t col = pivots[r];
        for (size_t i = 0; i < r; ++i) {
            const K f = rows[i][col];
            if (is_zero_value(f)) continue;
            rows[i][col] = K(0);
            for (size_t j = col + 1; j < ncols; ++j) {
                if (is_zero_value(rows[r][j])) continue;
                rows[i][j] -= f * rows[r][j];
            }
        }
    }
}

}  // namespace detail

/// Basis of {x : rows * x = 0}, one vector per free column, in reduced
/// echelon normal form (free coordinate = 1).
template <class K>
std::vector<std::vector<K>> nullspace_basis(std::vector<std::vector<K>> rows, size_t ncols) {
    std::vector<size_t> pivots = detail::echelonize(rows, ncols);
    detail::back_substitute(rows, pivots, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(ncols, K(0));
        v[free] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
size_t mat_rank(const Matrix<K>& m) {
    std::vector<std::vector<K>> rows(m.rows(), std::vector<K>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return detail::echelonize(rows, m.cols()).size();
}

template <class K>
bool is_invertible(const Matrix<K>& m) {
    return m.rows() == m.cols() && mat_rank(m) == m.rows();
}

template <class K>
std::optional<Matrix<K>> mat_inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    size_t n = m.rows();
    std::vector<std::vector<K>> rows(n, std::vector<K>(2 * n, K(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
        rows[i][n + i] = K(1);
    }
    std::vector<size_t> pivots = detail::echelonize(rows, 2 * n);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    detail::back_substitute(rows, pivots, 2 * n);
    Matrix<K> inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
    return inv;
}

/// Rank of the span of a set of vectors.
template <class K>
size_t span_rank(std::vector<std::vector<K>> vecs, size_t ncols) {
    return detail::echelonize(vecs, ncols).size();
}

}  // namespace mfwild
