// Shared test helpers: matrix literals, comparisons, deterministic random
// generators.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "iepg/core.hpp"
#include "iepg/graphs.hpp"

namespace testsup {

inline iepg::SymMatrix make_sym(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    iepg::Matrix raw(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) raw(i, j) = rows[i][j];
    return iepg::SymMatrix::mirrored(raw);
}

inline double max_entry_diff(const iepg::SymMatrix& a, const iepg::SymMatrix& b) {
    double worst = 0.0;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

inline double max_entry_diff(const iepg::Matrix& a, const iepg::Matrix& b) {
    double worst = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

// Random symmetric matrix with entries in [-10, 10].
inline iepg::SymMatrix random_sym(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    iepg::SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, dist(rng));
    return m;
}

// Random orthogonal matrix via Gram-Schmidt on a random square matrix.
inline iepg::Matrix random_orthogonal(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    iepg::Matrix q(n, n);
    for (int col = 0; col < n; ++col) {
        std::vector<double> v(n);
        for (int row = 0; row < n; ++row) v[row] = dist(rng);
        for (int prev = 0; prev < col; ++prev) {
            double dot = 0.0;
            for (int row = 0; row < n; ++row) dot += v[row] * q(row, prev);
            for (int row = 0; row < n; ++row) v[row] -= dot * q(row, prev);
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-8) { --col; continue; }  // retry a degenerate draw
        for (int row = 0; row < n; ++row) q(row, col) = v[row] / norm;
    }
    return q;
}

inline iepg::SymMatrix permute_sym(const iepg::SymMatrix& m, const std::vector<int>& perm) {
    iepg::SymMatrix out(m.order());
    for (int i = 0; i < m.order(); ++i)
        for (int j = i; j < m.order(); ++j) out.set(i, j, m(perm[i], perm[j]));
    return out;
}

// Rank by Gaussian elimination with partial pivoting; the independent
// cross-check for the SVD-based nullity.
inline int gauss_rank(iepg::Matrix m, double rel_tol) {
    const int rows = m.rows(), cols = m.cols();
    double biggest = m.max_abs();
    if (biggest == 0.0) return 0;
    const double thr = rel_tol * biggest;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = rank;
        for (int row = rank + 1; row < rows; ++row)
            if (std::abs(m(row, col)) > std::abs(m(pivot, col))) pivot = row;
        if (std::abs(m(pivot, col)) <= thr) continue;
        for (int c2 = 0; c2 < cols; ++c2) std::swap(m(pivot, c2), m(rank, c2));
        for (int row = rank + 1; row < rows; ++row) {
            const double f = m(row, col) / m(rank, col);
            for (int c2 = col; c2 < cols; ++c2) m(row, c2) -= f * m(rank, c2);
        }
        ++rank;
    }
    return rank;
}

}  // namespace testsup
