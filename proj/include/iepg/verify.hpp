// verify.hpp — independent checking machinery: a cyclic-Jacobi symmetric
// eigensolver, realization reports, interlacing tests, the strong-spectral-
// property nullity test, and a characteristic-polynomial oracle for small
// orders.
#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "iepg/core.hpp"
#include "iepg/graphs.hpp"

namespace iepg {

// ---------------------------------------------------------------------------
// Symmetric eigensolver (cyclic Jacobi rotations, deterministic sweep order).
// ---------------------------------------------------------------------------

struct EigenSystem {
    std::vector<double> values;  // descending
    Matrix vectors;              // column k is a unit eigenvector for values[k]
};

inline EigenSystem eig_system(const SymMatrix& m) {
    const int n = m.order();
    Matrix a = m.dense();
    Matrix v = Matrix::identity(n);

    double fro = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fro += a(i, j) * a(i, j);
    fro = std::sqrt(fro);
    const double stop = 1e-14 * std::max(fro, 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (std::sqrt(off) <= stop) break;
        if (sweep == 99) throw ConvergenceFailure("Jacobi eigensolver did not converge in 100 sweeps");

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(idx[k], idx[k]);
        for (int row = 0; row < n; ++row) out.vectors(row, k) = v(row, idx[k]);
    }
    return out;
}

inline Spectrum eig_symmetric(const SymMatrix& m) {
    if (m.order() == 0) throw InvalidArgument("eigensolver needs order >= 1");
    return Spectrum(eig_system(m).values);
}

// ---------------------------------------------------------------------------
// Realization report.
// ---------------------------------------------------------------------------

struct RealizationReport {
    bool spectrum_ok = false;
    double max_eig_residual = 0.0;
    bool pattern_ok = false;
    std::vector<std::pair<int, int>> missing_edges;
    std::vector<std::pair<int, int>> spurious_edges;
    std::optional<double> row_sum_constant;
    std::string notes;

    bool all_ok() const { return spectrum_ok && pattern_ok; }
};

inline RealizationReport check_realization(const SymMatrix& m, const GraphSpec& g,
                                           const Spectrum& lambda,
                                           const ToleranceProfile& tol = {}) {
    if (m.order() != g.n() || static_cast<std::size_t>(m.order()) != lambda.size())
        throw InvalidArgument("matrix order, graph order and spectrum length must agree");

    RealizationReport rep;

    const Spectrum achieved = eig_symmetric(m);
    double residual = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        residual = std::max(residual, std::abs(achieved[i] - lambda[i]));
    rep.max_eig_residual = residual;
    rep.spectrum_ok = residual <= tol.spec_tol * lambda.scale();

    const GraphSpec realized = pattern_of(m, tol);
    for (const auto& e : g.edges())
        if (!realized.edges().count(e)) rep.missing_edges.push_back(e);
    for (const auto& e : realized.edges())
        if (!g.edges().count(e)) rep.spurious_edges.push_back(e);
    rep.pattern_ok = rep.missing_edges.empty() && rep.spurious_edges.empty();

    const std::vector<double> rs = m.row_sums();
    const auto [lo, hi] = std::minmax_element(rs.begin(), rs.end());
    if (*hi - *lo <= tol.spec_tol * std::max(1.0, m.max_abs())) rep.row_sum_constant = rs.front();

    rep.notes = std::string("spectrum ") + (rep.spectrum_ok ? "matches" : "differs") +
                "; pattern " + (rep.pattern_ok ? "matches" : "differs");
    return rep;
}

// ---------------------------------------------------------------------------
// Interlacing: lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{n-1} >= lambda_n.
// Inputs sorted descending. slack loosens the non-strict chain only; used
// when both sides come out of floating-point eigensolves with tied values.
// ---------------------------------------------------------------------------

inline bool check_interlacing(std::span<const double> lambda, std::span<const double> mu,
                              bool strict, double slack = 0.0) {
    if (mu.size() + 1 != lambda.size())
        throw InvalidArgument("interlacing needs exactly n-1 inner values for n outer ones");
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (strict) {
            if (!(lambda[i] > mu[i] && mu[i] > lambda[i + 1])) return false;
        } else {
            if (!(lambda[i] >= mu[i] - slack && mu[i] >= lambda[i + 1] - slack)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Singular values by one-sided (Hestenes) Jacobi; full relative accuracy on
// the large values and absolute accuracy ~eps*||M|| on the tiny ones, which
// is what the rank decisions need.
// ---------------------------------------------------------------------------

inline std::vector<double> singular_values(const Matrix& m) {
    Matrix w = m;
    const int rows = w.rows(), cols = w.cols();

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool converged = true;
        for (int i = 0; i < cols - 1; ++i) {
            for (int j = i + 1; j < cols; ++j) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (int k = 0; k < rows; ++k) {
                    alpha += w(k, i) * w(k, i);
                    beta += w(k, j) * w(k, j);
                    gamma += w(k, i) * w(k, j);
                }
                if (gamma == 0.0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
                converged = false;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                double t = 1.0 / (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
                if (zeta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = c * t;
                for (int k = 0; k < rows; ++k) {
                    const double wki = w(k, i), wkj = w(k, j);
                    w(k, i) = c * wki - s * wkj;
                    w(k, j) = s * wki + c * wkj;
                }
            }
        }
        if (converged) break;
        if (sweep == 59) throw ConvergenceFailure("one-sided Jacobi did not converge in 60 sweeps");
    }

    std::vector<double> sigma(cols, 0.0);
    for (int j = 0; j < cols; ++j) {
        double norm2 = 0.0;
        for (int k = 0; k < rows; ++k) norm2 += w(k, j) * w(k, j);
        sigma[j] = std::sqrt(norm2);
    }
    std::sort(sigma.begin(), sigma.end(), std::greater<>{});
    return sigma;
}

// ---------------------------------------------------------------------------
// Strong spectral property: A has the SSP iff the only symmetric X with
// AX - XA = 0, X vanishing on the diagonal and on the support of A, is X = 0.
// Free unknowns are X_ij over the zero off-diagonal positions of A; the
// commutator is antisymmetric, so only its strict upper triangle constrains.
// ---------------------------------------------------------------------------

struct SspVerdict {
    bool has_ssp = false;
    int nullity = 0;
    double smallest_retained_singular_value = 0.0;
};

inline SspVerdict check_ssp(const SymMatrix& a, const ToleranceProfile& tol = {}) {
    const int n = a.order();
    const double zero_thr = tol.zero_tol * std::max(1.0, a.max_abs());

    std::vector<std::pair<int, int>> unknowns;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(a(i, j)) <= zero_thr) unknowns.push_back({i, j});

    const int f = static_cast<int>(unknowns.size());
    if (f == 0) return SspVerdict{true, 0, 0.0};

    Matrix sys(n * (n - 1) / 2, f);
    int eq = 0;
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q, ++eq) {
            for (int u = 0; u < f; ++u) {
                const auto [i, j] = unknowns[u];
                double coef = 0.0;
                if (q == j) coef += a(p, i);
                if (q == i) coef += a(p, j);
                if (p == i) coef -= a(j, q);
                if (p == j) coef -= a(i, q);
                sys(eq, u) = coef;
            }
        }
    }

    const std::vector<double> sigma = singular_values(sys);
    SspVerdict out;
    if (sigma.front() <= 1e-300) {
        out.nullity = f;
        out.smallest_retained_singular_value = 0.0;
    } else {
        const double thr = tol.rank_tol * sigma.front();
        double smallest_kept = sigma.front();
        for (double s : sigma) {
            if (s < thr) ++out.nullity;
            else smallest_kept = s;
        }
        out.smallest_retained_singular_value = smallest_kept;
    }
    out.has_ssp = out.nullity == 0;
    return out;
}

// ---------------------------------------------------------------------------
// q(K_n - e): least number of distinct eigenvalues over the pattern class.
// ---------------------------------------------------------------------------

inline int q_kn_minus_edge(int n) {
    if (n < 2) throw InvalidArgument("q formula needs n >= 2");
    if (n == 2) return 1;
    if (n == 3) return 3;
    return 2;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial oracle (Faddeev-LeVerrier), orders <= 8 only.
// Returns monic coefficients c with p(t) = sum_i c[i] * t^(n-i), c[0] = 1.
// ---------------------------------------------------------------------------

inline std::vector<double> charpoly_oracle(const SymMatrix& m) {
    const int n = m.order();
    if (n < 1 || n > 8) throw InvalidArgument("characteristic polynomial oracle handles orders 1..8");

    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    Matrix b = Matrix::identity(n);
    const Matrix& a = m.dense();
    for (int k = 1; k <= n; ++k) {
        const Matrix mk = a * b;
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        c[k] = -tr / k;
        b = mk;
        for (int i = 0; i < n; ++i) b(i, i) += c[k];
    }
    return c;
}

namespace detail {

inline double horner(std::span<const double> c, double x) {
    double acc = 0.0;
    for (double ci : c) acc = acc * x + ci;
    return acc;
}

inline double horner_abs(std::span<const double> c, double x) {
    double acc = 0.0;
    const double ax = std::abs(x);
    for (double ci : c) acc = acc * ax + std::abs(ci);
    return acc;
}

}  // namespace detail

// All roots (with multiplicity, ascending) of a monic polynomial whose roots
// are known to be real: the critical points of p interlace its roots, so
// recursion on p' isolates every root into a monotone bracket; critical
// points where p itself (relatively) vanishes are multiple roots.
inline std::vector<double> real_roots_monic(const std::vector<double>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    if (d <= 0) return {};
    if (c[0] != 1.0) throw InvalidArgument("root finder expects a monic coefficient list");
    if (d == 1) return {-c[1]};

    std::vector<double> dc(d);
    for (int i = 0; i < d; ++i) dc[i] = c[i] * (d - i) / d;
    std::vector<double> crit = real_roots_monic(dc);

    std::vector<std::pair<double, int>> distinct;  // value, multiplicity in p'
    for (double r : crit) {
        if (!distinct.empty() && std::abs(r - distinct.back().first) <=
                                     1e-9 * std::max(1.0, std::abs(distinct.back().first)))
            ++distinct.back().second;
        else
            distinct.push_back({r, 1});
    }

    double bound = 0.0;
    for (int i = 1; i <= d; ++i) bound = std::max(bound, std::abs(c[i]));
    bound += 1.0;

    std::vector<double> roots;
    std::vector<char> is_root(distinct.size(), 0);
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        const double r = distinct[i].first;
        if (std::abs(detail::horner(c, r)) <= 1e-8 * std::max(1.0, detail::horner_abs(c, r))) {
            is_root[i] = 1;
            for (int copies = 0; copies <= distinct[i].second; ++copies) roots.push_back(r);
        }
    }

    std::vector<double> pts{-bound};
    for (const auto& [r, mult] : distinct) pts.push_back(r);
    pts.push_back(bound);

    for (std::size_t seg = 0; seg + 1 < pts.size(); ++seg) {
        const bool left_root = seg >= 1 && is_root[seg - 1];
        const bool right_root = seg + 2 <= pts.size() - 1 && is_root[seg];
        if (left_root || right_root) continue;
        double x0 = pts[seg], x1 = pts[seg + 1];
        double f0 = detail::horner(c, x0), f1 = detail::horner(c, x1);
        if (f0 == 0.0) { roots.push_back(x0); continue; }
        if (f1 == 0.0) { roots.push_back(x1); continue; }
        if ((f0 > 0) == (f1 > 0)) continue;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (x0 + x1);
            const double fm = detail::horner(c, mid);
            if (fm == 0.0) { x0 = x1 = mid; break; }
            if ((fm > 0) == (f0 > 0)) { x0 = mid; f0 = fm; }
            else x1 = mid;
        }
        roots.push_back(0.5 * (x0 + x1));
    }

    if (static_cast<int>(roots.size()) != d)
        throw ConvergenceFailure("real-root extraction found " + std::to_string(roots.size()) +
                                 " roots for degree " + std::to_string(d));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace iepg
