// constructions.hpp — the matrix-building algorithms: closed forms for the
// basis matrix R and its inverse, the complete-graph realization with its
// diagonal-arrangement search, the bordered construction from interlacing
// data, Smith gluing, and the composite clique-plus-cluster realizations.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iepg/core.hpp"
#include "iepg/graphs.hpp"
#include "iepg/verify.hpp"

namespace iepg {

// ---------------------------------------------------------------------------
// Closed forms. R has first row all ones and row i = (1,...,1,-(i-1),0,...,0)
// with m-i+1 leading ones; its inverse has harmonic-product columns. Columns
// of R are eigenvectors of every realization R*D*R^{-1}.
// ---------------------------------------------------------------------------

inline Matrix r_matrix(int m) {
    if (m < 2) throw InvalidArgument("basis matrix needs order >= 2");
    Matrix r(m, m);
    for (int j = 0; j < m; ++j) r(0, j) = 1.0;
    for (int i = 1; i < m; ++i) {
        for (int j = 0; j < m - i; ++j) r(i, j) = 1.0;
        r(i, m - i) = -static_cast<double>(i);
    }
    return r;
}

inline Matrix r_inverse(int m) {
    if (m < 2) throw InvalidArgument("basis matrix needs order >= 2");
    Matrix s(m, m);
    std::vector<double> lead(m);  // shared column prefix
    lead[0] = 1.0 / m;
    for (int p = 1; p < m; ++p)
        lead[p] = 1.0 / (static_cast<double>(m - p + 1) * (m - p));
    for (int p = 0; p < m; ++p) s(p, 0) = lead[p];
    for (int j = 1; j < m; ++j) {
        for (int p = 0; p <= m - j - 1; ++p) s(p, j) = lead[p];
        s(m - j, j) = -1.0 / (j + 1);
    }
    return s;
}

// x_p = R * e_p (1-based p, 2 <= p <= m): m-p+1 ones, then -(m-p+1), then
// p-2 zeros.
inline std::vector<double> eigvec_for_position(int m, int p) {
    if (m < 2 || p < 2 || p > m) throw InvalidArgument("eigenvector position must satisfy 2 <= p <= m");
    std::vector<double> x(m, 0.0);
    const int ones = m - p + 1;
    for (int t = 0; t < ones; ++t) x[t] = 1.0;
    x[ones] = -static_cast<double>(ones);
    return x;
}

inline std::vector<double> unit_eigvec_for_position(int m, int p) {
    std::vector<double> x = eigvec_for_position(m, p);
    const int ones = m - p + 1;
    const double norm = std::sqrt(static_cast<double>(ones) * (ones + 1));
    for (double& v : x) v /= norm;
    return x;
}

// ---------------------------------------------------------------------------
// Complete-graph realization.
// ---------------------------------------------------------------------------

struct Pin {
    int position = 0;  // 1-based diagonal index, 2 <= position <= order
    double value = 0.0;
};

struct CompleteRealization {
    SymMatrix matrix;
    std::vector<double> diag_order;             // the diagonal of D actually used
    std::vector<std::vector<double>> eigvecs;   // eigvecs[p-1] = R * e_p, p = 1..m
};

namespace detail {

// A = R * diag(d) * R^{-1} via the closed form: above the diagonal the matrix
// is constant along columns (a_ij = a_1j), and a_jj = a_1j + d[m-j].
inline SymMatrix assemble_complete(std::span<const double> d, const Matrix& rinv) {
    const int m = static_cast<int>(d.size());
    std::vector<double> row1(m, 0.0);
    for (int j = 0; j < m; ++j) {
        double acc = 0.0;
        for (int t = 0; t < m; ++t) acc += d[t] * rinv(t, j);
        row1[j] = acc;
    }
    SymMatrix a(m);
    a.set(0, 0, row1[0]);
    for (int j = 1; j < m; ++j) {
        a.set(j, j, row1[j] + d[m - j]);
        for (int i = 0; i < j; ++i) a.set(i, j, row1[j]);
    }
    return a;
}

inline bool offdiagonals_nonzero(const SymMatrix& a, const ToleranceProfile& tol) {
    const double thr = tol.zero_tol * std::max(1.0, a.max_abs());
    for (int j = 1; j < a.order(); ++j)
        if (std::abs(a(0, j)) <= thr) return false;
    return true;
}

}  // namespace detail

// Builds A = R * D * R^{-1} with the diagonal of D a permutation of the given
// multiset: position 1 holds a maximal non-pinned value, every pin is
// honored, and the first arrangement (descending order of the remaining
// values, then lexicographically downward) making every off-diagonal entry
// exceed the zero threshold wins. Capped at 10000 evaluated arrangements.
inline CompleteRealization complete_realize(const Spectrum& values, std::span<const Pin> pins,
                                            const ToleranceProfile& tol = {}) {
    const int m = static_cast<int>(values.size());
    if (values.distinct_count(tol) < 2)
        throw FewerThanTwoDistinct("realization over a complete graph requires at least two distinct eigenvalues");
    const double eq_thr = tol.zero_tol * values.scale();

    std::vector<double> pool = values.values();  // descending
    std::vector<char> is_pinned(m + 1, 0);
    std::vector<double> pinned_value(m + 1, 0.0);
    for (const Pin& pin : pins) {
        if (pin.position < 2 || pin.position > m)
            throw PinConflict("pin position must lie in 2.." + std::to_string(m));
        if (is_pinned[pin.position]) throw PinConflict("two pins target the same diagonal position");
        auto best = pool.end();
        double best_gap = 0.0;
        for (auto it = pool.begin(); it != pool.end(); ++it) {
            const double gap = std::abs(*it - pin.value);
            if (best == pool.end() || gap < best_gap) { best = it; best_gap = gap; }
        }
        if (best == pool.end() || best_gap > eq_thr)
            throw PinConflict("pinned value is not a member of the spectrum");
        pool.erase(best);
        is_pinned[pin.position] = 1;
        pinned_value[pin.position] = pin.value;
    }
    if (pool.empty()) throw PinConflict("pins leave no value for diagonal position 1");

    const double d1 = pool.front();
    pool.erase(pool.begin());

    if (is_pinned[2]) {
        if (std::abs(pinned_value[2] - d1) <= eq_thr)
            throw PinConflict("pin forces equal values at diagonal positions 1 and 2");
    } else {
        const bool second_exists =
            std::any_of(pool.begin(), pool.end(), [&](double v) { return std::abs(v - d1) > eq_thr; });
        if (!second_exists)
            throw PinConflict("pins leave no value distinct from the leading one for position 2");
    }

    std::vector<int> free_pos;  // 0-based positions 1..m-1 not pinned
    for (int pos = 2; pos <= m; ++pos)
        if (!is_pinned[pos]) free_pos.push_back(pos - 1);

    const Matrix rinv = r_inverse(m);
    std::vector<double> arrangement = pool;  // descending start
    std::vector<double> d(m);
    constexpr int kAttemptCap = 10000;
    int attempts = 0;

    while (true) {
        ++attempts;
        d[0] = d1;
        for (int pos = 2; pos <= m; ++pos)
            if (is_pinned[pos]) d[pos - 1] = pinned_value[pos];
        for (std::size_t idx = 0; idx < free_pos.size(); ++idx) d[free_pos[idx]] = arrangement[idx];

        if (std::abs(d[1] - d1) > eq_thr) {
            SymMatrix a = detail::assemble_complete(d, rinv);
            if (detail::offdiagonals_nonzero(a, tol)) {
                CompleteRealization out{std::move(a), d, {}};
                const Matrix r = r_matrix(m);
                out.eigvecs.resize(m);
                for (int p = 0; p < m; ++p) {
                    out.eigvecs[p].resize(m);
                    for (int row = 0; row < m; ++row) out.eigvecs[p][row] = r(row, p);
                }
                return out;
            }
        }

        if (attempts >= kAttemptCap)
            throw SearchExhausted("no diagonal arrangement passed the nonzero test within " +
                                  std::to_string(kAttemptCap) + " attempts");
        if (!std::prev_permutation(arrangement.begin(), arrangement.end()))
            throw SearchExhausted("every diagonal arrangement leaves some off-diagonal entry zero");
    }
}

// ---------------------------------------------------------------------------
// Bordered construction from interlacing data.
// ---------------------------------------------------------------------------

// diag = mus, corner = sum(targets) - sum(mus), and
// b_i^2 = -prod_j(mu_i - lambda_j) / prod_{j != i}(mu_i - mu_j).
// signs, when nonempty, gives the sign of each border entry (+1/-1).
inline BorderedMatrix bordered_realize(const Spectrum& targets, std::span<const double> mus,
                                       std::span<const int> signs = {},
                                       const ToleranceProfile& tol = {}) {
    const int m = static_cast<int>(targets.size());
    if (static_cast<int>(mus.size()) != m - 1)
        throw InvalidArgument("bordered construction needs exactly m-1 inner values");
    if (!all_finite(mus)) throw InvalidArgument("inner values must be finite");
    if (!signs.empty() && static_cast<int>(signs.size()) != m - 1)
        throw InvalidArgument("sign policy must provide one sign per border entry");
    for (int s : signs)
        if (s != 1 && s != -1) throw InvalidArgument("sign policy entries must be +1 or -1");

    const double scale = std::max(targets.scale(), scale_of(mus));
    for (std::size_t i = 0; i < mus.size(); ++i)
        for (std::size_t j = i + 1; j < mus.size(); ++j)
            if (std::abs(mus[i] - mus[j]) <= tol.zero_tol * scale)
                throw DuplicateMu("inner values must be pairwise distinct");
    if (!check_interlacing(targets.values(), mus, false))
        throw InterlacingViolated("inner values must interlace the target spectrum");

    BorderedMatrix out;
    out.diag.assign(mus.begin(), mus.end());
    double trace_targets = 0.0, trace_mus = 0.0;
    for (double v : targets.values()) trace_targets += v;
    for (double v : mus) trace_mus += v;
    out.corner = trace_targets - trace_mus;

    const double rad_floor = -tol.spec_tol * scale * scale;
    out.border.resize(mus.size());
    for (std::size_t i = 0; i < mus.size(); ++i) {
        double num = 1.0, den = 1.0;
        for (double lam : targets.values()) num *= mus[i] - lam;
        for (std::size_t j = 0; j < mus.size(); ++j)
            if (j != i) den *= mus[i] - mus[j];
        double b2 = -num / den;
        if (b2 < 0.0) {
            if (b2 < rad_floor)
                throw NegativeRadicand("border entry squared came out negative; inner values are inconsistent");
            b2 = 0.0;
        }
        const int sign = signs.empty() ? 1 : signs[i];
        out.border[i] = sign * std::sqrt(b2);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Smith gluing: C = [A1, b*u^T; u*b^T, B] where A = [A1, b; b^T, mu] and
// (mu, u) is a unit eigenpair of B. The glued spectrum is
// spectrum(A) + spectrum(B) - one copy of mu, and is verified here.
// ---------------------------------------------------------------------------

inline SymMatrix smith_glue(const SymMatrix& a, const SymMatrix& b, std::span<const double> u,
                            const ToleranceProfile& tol = {}) {
    const int na = a.order(), nb = b.order();
    if (na < 1 || nb < 1) throw InvalidArgument("glue operands must be nonempty");
    if (static_cast<int>(u.size()) != nb)
        throw InvalidArgument("glue vector length must equal the order of the second matrix");

    double norm2 = 0.0;
    for (double v : u) norm2 += v * v;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12)
        throw NotUnit("glue vector must have unit Euclidean norm");

    const double mu = a(na - 1, na - 1);
    double resid = 0.0;
    for (int row = 0; row < nb; ++row) {
        double acc = 0.0;
        for (int col = 0; col < nb; ++col) acc += b(row, col) * u[col];
        resid = std::max(resid, std::abs(acc - mu * u[row]));
    }
    if (resid > tol.spec_tol * std::max(1.0, b.max_abs()))
        throw EigenpairMismatch("the corner value of the first matrix is not an eigenvalue of the second along the glue vector");

    SymMatrix c(na + nb - 1);
    for (int i = 0; i + 1 < na; ++i)
        for (int j = i; j + 1 < na; ++j) c.set(i, j, a(i, j));
    for (int i = 0; i + 1 < na; ++i)
        for (int j = 0; j < nb; ++j) c.set(i, na - 1 + j, a(i, na - 1) * u[j]);
    for (int i = 0; i < nb; ++i)
        for (int j = i; j < nb; ++j) c.set(na - 1 + i, na - 1 + j, b(i, j));

    std::vector<double> expected = eig_symmetric(a).values();
    const std::vector<double> eb = eig_symmetric(b).values();
    std::size_t drop = 0;
    for (std::size_t i = 1; i < eb.size(); ++i)
        if (std::abs(eb[i] - mu) < std::abs(eb[drop] - mu)) drop = i;
    for (std::size_t i = 0; i < eb.size(); ++i)
        if (i != drop) expected.push_back(eb[i]);

    if (!spectrum_equal(Spectrum(expected), eig_symmetric(c), tol))
        throw SpectrumMismatch("glued matrix failed its spectrum identity");
    return c;
}

// ---------------------------------------------------------------------------
// Partition selection for the composite realizations.
// ---------------------------------------------------------------------------

enum class PartitionVariant { interlace, complete };
enum class HypothesisStatus { SatisfiesTheorem, SatisfiesRelaxed, Fails };

struct PartitionChoice {
    std::vector<double> lambda1;  // construction order; lambda1[0] leads, lambda1[1] sits second
    std::vector<double> lambda2;  // multiset remainder, descending
    std::vector<double> mus;      // interlace variant only
    double a = 0.0;               // corner / pinned value
};

struct RealizeOptions {
    std::vector<double> mus;      // override the inner values (interlace path)
    std::vector<double> lambda1;  // override the partition selection
    std::vector<int> signs;       // override the border sign policy
    int u_sign = 1;               // orientation of the glue eigenvector
};

// Feasibility gate. The verbatim hypotheses ask for enough distinct values
// plus two values of multiplicity >= 2; anything weaker that still admits a
// partition is reported as relaxed and left to the construction itself.
inline HypothesisStatus check_hypotheses(const Spectrum& lambda, int n, int k,
                                         PartitionVariant variant,
                                         const ToleranceProfile& tol = {}) {
    if (static_cast<int>(lambda.size()) != n)
        throw InvalidArgument("spectrum length must equal the graph order n");
    if (n - k < 2 || k < 2) throw InvalidArgument("parameters must satisfy k >= 2 and n - k >= 2");

    const int distinct = lambda.distinct_count(tol);
    int heavy = 0;
    for (int s : lambda.group_sizes(tol))
        if (s >= 2) ++heavy;

    if (variant == PartitionVariant::interlace) {
        if (distinct < n - k + 1) return HypothesisStatus::Fails;
        if (heavy >= 2) return HypothesisStatus::SatisfiesTheorem;
        return HypothesisStatus::SatisfiesRelaxed;
    }
    if (distinct < 2) return HypothesisStatus::Fails;
    if (distinct >= 3 && heavy >= 2) return HypothesisStatus::SatisfiesTheorem;
    return HypothesisStatus::SatisfiesRelaxed;
}

namespace detail {

// Removes one pool copy per requested value (tolerant match); the leftovers
// are the multiset remainder.
inline std::vector<double> remove_sub_multiset(const Spectrum& lambda,
                                               std::span<const double> take, double eq_thr,
                                               const char* what) {
    std::vector<double> pool = lambda.values();
    for (double v : take) {
        auto best = pool.end();
        double best_gap = 0.0;
        for (auto it = pool.begin(); it != pool.end(); ++it) {
            const double gap = std::abs(*it - v);
            if (best == pool.end() || gap < best_gap) { best = it; best_gap = gap; }
        }
        if (best == pool.end() || best_gap > eq_thr)
            throw InvalidArgument(std::string(what) + " must be a sub-multiset of the spectrum");
        pool.erase(best);
    }
    return pool;
}

inline int distinct_count_of(std::span<const double> xs, double eq_thr) {
    std::vector<double> v(xs.begin(), xs.end());
    std::sort(v.begin(), v.end(), std::greater<>{});
    int groups = v.empty() ? 0 : 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] - v[i] > eq_thr) ++groups;
    return groups;
}

inline bool separated_from(double a, std::span<const double> xs, double sep_thr) {
    return std::all_of(xs.begin(), xs.end(),
                       [&](double v) { return std::abs(a - v) > sep_thr; });
}

}  // namespace detail

// variation > 0 selects the next deterministic fallback: extra quarter-gap
// nudges of the last inner value (interlace) or the next corner candidate
// (complete). The composite realizations walk it when the diagonal
// arrangement search comes back empty-handed.
inline PartitionChoice choose_partition(const Spectrum& lambda, int n, int k,
                                        PartitionVariant variant,
                                        const ToleranceProfile& tol = {},
                                        const RealizeOptions& opt = {}, int variation = 0) {
    if (static_cast<int>(lambda.size()) != n)
        throw InvalidArgument("spectrum length must equal the graph order n");
    if (n - k < 2 || k < 2) throw InvalidArgument("parameters must satisfy k >= 2 and n - k >= 2");
    const int m1 = n - k + 1;
    const double eq_thr = tol.zero_tol * lambda.scale();
    const double sep_thr = tol.spec_tol * lambda.scale();

    PartitionChoice pc;

    if (!opt.lambda1.empty()) {
        if (static_cast<int>(opt.lambda1.size()) != m1)
            throw InvalidArgument("partition override must select exactly n-k+1 values");
        pc.lambda1 = opt.lambda1;
        std::sort(pc.lambda1.begin(), pc.lambda1.end(), std::greater<>{});
        pc.lambda2 = detail::remove_sub_multiset(lambda, pc.lambda1, eq_thr, "the partition override");
    } else if (variant == PartitionVariant::interlace) {
        const std::vector<double> reps = lambda.distinct_values(tol);
        if (static_cast<int>(reps.size()) < m1)
            throw Infeasible("the interlacing partition requires at least n-k+1 = " +
                             std::to_string(m1) + " distinct spectrum values; got " +
                             std::to_string(reps.size()));
        pc.lambda1.assign(reps.begin(), reps.begin() + m1);
        pc.lambda2 = detail::remove_sub_multiset(lambda, pc.lambda1, eq_thr, "the partition");
        // The remainder should offer two distinct values whenever some unused
        // representative can be traded in; otherwise pinned positions beyond
        // the second may become unfillable downstream.
        if (k >= 3 && detail::distinct_count_of(pc.lambda2, eq_thr) < 2 &&
            static_cast<int>(reps.size()) > m1) {
            pc.lambda1[m1 - 1] = reps[m1];
            std::sort(pc.lambda1.begin(), pc.lambda1.end(), std::greater<>{});
            pc.lambda2 = detail::remove_sub_multiset(lambda, pc.lambda1, eq_thr, "the partition");
        }
    } else {
        if (lambda.distinct_count(tol) < 2)
            throw Infeasible("the partition requires at least two distinct spectrum values");
        std::vector<double> l1(lambda.values().begin(), lambda.values().begin() + m1);
        std::vector<double> l2(lambda.values().begin() + m1, lambda.values().end());
        if (detail::distinct_count_of(l1, eq_thr) < 2) {
            std::swap(l1.back(), l2.back());
            std::sort(l1.begin(), l1.end(), std::greater<>{});
            std::sort(l2.begin(), l2.end(), std::greater<>{});
        } else if (l2.size() >= 2 && detail::distinct_count_of(l2, eq_thr) < 2) {
            const double w = l2.front();
            int above = 0;
            for (double x : l1)
                if (x - w > eq_thr) ++above;
            if (above >= 2) {
                for (int idx = static_cast<int>(l1.size()) - 1; idx >= 0; --idx) {
                    if (l1[idx] - w > eq_thr) {
                        std::swap(l1[idx], l2.back());
                        break;
                    }
                }
                std::sort(l1.begin(), l1.end(), std::greater<>{});
                std::sort(l2.begin(), l2.end(), std::greater<>{});
            }
        }
        pc.lambda1 = std::move(l1);
        pc.lambda2 = std::move(l2);
    }
    std::sort(pc.lambda2.begin(), pc.lambda2.end(), std::greater<>{});

    if (variant == PartitionVariant::interlace) {
        // lambda1 must be strictly decreasing for the interlacing step.
        for (std::size_t i = 1; i < pc.lambda1.size(); ++i)
            if (pc.lambda1[i - 1] - pc.lambda1[i] <= eq_thr)
                throw Infeasible("the interlacing partition needs strictly decreasing selected values");

        double sum1 = 0.0;
        for (double v : pc.lambda1) sum1 += v;

        if (!opt.mus.empty()) {
            if (static_cast<int>(opt.mus.size()) != n - k)
                throw InvalidArgument("inner-value override must supply exactly n-k values");
            pc.mus = opt.mus;
            if (!check_interlacing(pc.lambda1, pc.mus, true))
                throw InterlacingViolated("overridden inner values must strictly interlace the selected partition");
            double summ = 0.0;
            for (double v : pc.mus) summ += v;
            pc.a = sum1 - summ;
            if (!detail::separated_from(pc.a, pc.lambda2, sep_thr))
                throw SeparationFailed("the corner value induced by the overridden inner values collides with a remaining eigenvalue");
        } else {
            pc.mus.resize(m1 - 1);
            for (int j = 0; j + 1 < m1; ++j) pc.mus[j] = 0.5 * (pc.lambda1[j] + pc.lambda1[j + 1]);
            double gap = pc.lambda1[0] - pc.lambda1[1];
            for (int j = 1; j + 1 < m1; ++j) gap = std::min(gap, pc.lambda1[j] - pc.lambda1[j + 1]);

            for (int t = 0; t < variation; ++t) pc.mus.back() -= gap / 4.0;
            bool done = false;
            for (int iter = variation; iter <= 64; ++iter) {
                double summ = 0.0;
                for (double v : pc.mus) summ += v;
                pc.a = sum1 - summ;
                if (detail::separated_from(pc.a, pc.lambda2, sep_thr)) { done = true; break; }
                pc.mus.back() -= gap / 4.0;
            }
            if (!done || !check_interlacing(pc.lambda1, pc.mus, true))
                throw SeparationFailed("could not separate the corner value from the remaining eigenvalues");
        }
    } else {
        // corner = (1/m1)(lead - second) + second, with the second value
        // chosen as the largest one that keeps the corner clear of lambda2.
        const double lead = pc.lambda1.front();
        bool chosen = false;
        int skipped = 0;
        for (std::size_t t = 1; t < pc.lambda1.size(); ++t) {
            const double second = pc.lambda1[t];
            if (lead - second <= eq_thr) continue;
            if (t > 1 && pc.lambda1[t - 1] - second <= eq_thr) continue;  // same value again
            const double a = (lead - second) / m1 + second;
            if (!detail::separated_from(a, pc.lambda2, sep_thr)) continue;
            if (skipped < variation) { ++skipped; continue; }
            std::vector<double> arranged{lead, second};
            for (std::size_t q = 1; q < pc.lambda1.size(); ++q)
                if (q != t) arranged.push_back(pc.lambda1[q]);
            pc.lambda1 = std::move(arranged);
            pc.a = a;
            chosen = true;
            break;
        }
        if (!chosen) {
            if (detail::distinct_count_of(pc.lambda1, eq_thr) < 2)
                throw Infeasible("the selected partition needs two distinct leading values");
            throw SeparationFailed("every choice of the second leading value lands the corner on a remaining eigenvalue");
        }
    }

    return pc;
}

// ---------------------------------------------------------------------------
// Composite realizations. Both build A and B, glue them along the corner
// eigenpair, and then verify spectrum and pattern before returning; a result
// that fails its own verification is never handed back.
// ---------------------------------------------------------------------------

namespace detail {

inline void validate_family_parameters(int n, int k, int r) {
    if (n - k < 2)
        throw InvalidArgument("the cluster needs at least two vertices (n - k >= 2)");
    if (r == 1)
        throw InvalidArgument("attachment size r = 1 is not realizable here: the glue eigenvector would need k-1 trailing zeros, which the eigenvector family does not provide");
    if (r < 2 || r > k) throw InvalidArgument("attachment size must satisfy 2 <= r <= k");
}

inline SymMatrix finish_realization(const SymMatrix& m, const GraphSpec& target,
                                    const Spectrum& lambda, const ToleranceProfile& tol) {
    const RealizationReport rep = check_realization(m, target, lambda, tol);
    if (!rep.spectrum_ok)
        throw SpectrumMismatch("construction failed spectrum verification (max residual " +
                               std::to_string(rep.max_eig_residual) + ")");
    if (!rep.pattern_ok)
        throw PatternMismatch("construction failed pattern verification (" +
                              std::to_string(rep.missing_edges.size()) + " missing, " +
                              std::to_string(rep.spurious_edges.size()) + " spurious edges)");
    return m;
}

}  // namespace detail

// Clique of order k plus an independent cluster of n-k vertices attached to
// r clique vertices. Bordered block for the cluster, complete block for the
// clique, glued along the corner value pinned at position k-r+2.
inline SymMatrix clique_cluster_realize(const Spectrum& lambda, int n, int k, int r,
                                        const ToleranceProfile& tol = {},
                                        const RealizeOptions& opt = {}) {
    detail::validate_family_parameters(n, k, r);
    if (check_hypotheses(lambda, n, k, PartitionVariant::interlace, tol) == HypothesisStatus::Fails)
        throw Infeasible("realization over a clique with a cluster requires at least n-k+1 = " +
                         std::to_string(n - k + 1) + " distinct eigenvalues; got " +
                         std::to_string(lambda.distinct_count(tol)));
    if (opt.u_sign != 1 && opt.u_sign != -1) throw InvalidArgument("glue orientation must be +1 or -1");

    // The corner value can resonate with the remainder so that the forced
    // diagonal arrangement has a zero off-diagonal; different inner values
    // dissolve it, so walk the deterministic fallbacks unless the caller
    // fixed the inner values.
    for (int variation = 0;; ++variation) {
        try {
            const PartitionChoice pc =
                choose_partition(lambda, n, k, PartitionVariant::interlace, tol, opt, variation);

            const BorderedMatrix bord = bordered_realize(Spectrum(pc.lambda1), pc.mus, opt.signs, tol);
            const SymMatrix a = assemble_bordered(bord);

            std::vector<double> gamma = pc.lambda2;
            gamma.push_back(pc.a);
            const Pin pin{k - r + 2, pc.a};
            const CompleteRealization b = complete_realize(Spectrum(gamma), {&pin, 1}, tol);

            std::vector<double> u = unit_eigvec_for_position(k, k - r + 2);
            if (opt.u_sign == -1)
                for (double& v : u) v = -v;

            const SymMatrix m = smith_glue(a, b.matrix, u, tol);
            return detail::finish_realization(m, build_clique_cluster(n, k, r, false), lambda, tol);
        } catch (const SearchExhausted&) {
            if (!opt.mus.empty() || variation >= 64) throw;
        } catch (const SeparationFailed&) {
            if (!opt.mus.empty() || variation >= 64) throw;
        }
    }
}

// Same family but with the cluster itself carrying a clique: both blocks are
// complete-graph realizations, the first of order n-k+1 whose corner entry
// equals (1/(n-k+1))(lead - second) + second by construction.
inline SymMatrix cluster_clique_realize(const Spectrum& lambda, int n, int k, int r,
                                        const ToleranceProfile& tol = {},
                                        const RealizeOptions& opt = {}) {
    detail::validate_family_parameters(n, k, r);
    if (!opt.mus.empty())
        throw InvalidArgument("inner-value overrides do not apply to the clustered-clique construction");
    if (check_hypotheses(lambda, n, k, PartitionVariant::complete, tol) == HypothesisStatus::Fails)
        throw Infeasible("realization with a clustered clique requires at least two distinct eigenvalues");
    if (opt.u_sign != 1 && opt.u_sign != -1) throw InvalidArgument("glue orientation must be +1 or -1");

    // Walking the corner candidates plays the same role as the inner-value
    // nudge on the interlacing path; the partition override stays honored
    // since candidates are drawn from the selected values.
    for (int variation = 0;; ++variation) {
        try {
            const PartitionChoice pc =
                choose_partition(lambda, n, k, PartitionVariant::complete, tol, opt, variation);

            const Pin second_pin{2, pc.lambda1[1]};
            const CompleteRealization a =
                complete_realize(Spectrum(pc.lambda1), {&second_pin, 1}, tol);

            std::vector<double> gamma = pc.lambda2;
            gamma.push_back(pc.a);
            const Pin corner_pin{k - r + 2, pc.a};
            const CompleteRealization b = complete_realize(Spectrum(gamma), {&corner_pin, 1}, tol);

            std::vector<double> u = unit_eigvec_for_position(k, k - r + 2);
            if (opt.u_sign == -1)
                for (double& v : u) v = -v;

            const SymMatrix m = smith_glue(a.matrix, b.matrix, u, tol);
            return detail::finish_realization(m, build_clique_cluster(n, k, r, true), lambda, tol);
        } catch (const SearchExhausted&) {
            if (variation >= 64) throw;
        } catch (const SeparationFailed&) {
            if (variation >= 64) throw;
        }
    }
}

// K_n minus one edge. For n >= 4 this is the clique-plus-cluster family with
// k = r = n-2; n = 3 is the bordered path construction, possible exactly when
// all three eigenvalues are distinct.
inline SymMatrix kn_minus_edge_realize(const Spectrum& lambda, int n,
                                       const ToleranceProfile& tol = {},
                                       const RealizeOptions& opt = {}) {
    if (n < 3) throw InvalidArgument("removing an edge needs n >= 3");
    if (static_cast<int>(lambda.size()) != n)
        throw InvalidArgument("spectrum length must equal the graph order n");
    if (lambda.distinct_count(tol) < 3)
        throw TooFewDistinct(n == 3
                                 ? "a 3-vertex complete graph minus an edge requires exactly three distinct eigenvalues"
                                 : "a complete graph minus an edge requires at least three distinct eigenvalues");

    if (n == 3) {
        if (!opt.lambda1.empty())
            throw InvalidArgument("no partition choice applies when n = 3");
        std::vector<double> mus = opt.mus;
        if (mus.empty())
            mus = {0.5 * (lambda[0] + lambda[1]), 0.5 * (lambda[1] + lambda[2])};
        const BorderedMatrix bord = bordered_realize(lambda, mus, opt.signs, tol);
        const SymMatrix m = assemble_bordered(bord);
        return detail::finish_realization(m, build_kn_minus_edge(3), lambda, tol);
    }
    return clique_cluster_realize(lambda, n, n - 2, n - 2, tol, opt);
}

// K_i joined to (K_j union K_{n-i-j}): the clustered-clique family with
// clique order n-j and attachment size i.
inline SymMatrix join_realize(const Spectrum& lambda, int n, int i, int j,
                              const ToleranceProfile& tol = {},
                              const RealizeOptions& opt = {}) {
    if (j < 1 || j > n - 2) throw InvalidArgument("join family needs 1 <= j <= n-2");
    if (i < 1 || i > n - j - 1) throw InvalidArgument("join family needs 1 <= i <= n-j-1");
    if (j < 2)
        throw InvalidArgument("realization needs a cluster of at least two vertices (j >= 2)");
    return cluster_clique_realize(lambda, n, n - j, i, tol, opt);
}

}  // namespace iepg
