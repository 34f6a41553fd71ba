// core.hpp — shared domain types: spectra, dense/symmetric matrices,
// tolerance policy, bordered matrices, and the error taxonomy.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iepg {

// ---------------------------------------------------------------------------
// Errors. exit_code() matches the CLI contract: 2 = infeasible input or
// violated construction precondition, 3 = numerical/search/verification
// failure, 4 = I/O or parse failure.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual int exit_code() const noexcept { return 2; }
};

class FeasibilityError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

class NumericError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

class IoError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

struct InvalidArgument final : FeasibilityError { using FeasibilityError::FeasibilityError; };
struct FewerThanTwoDistinct final : FeasibilityError { using FeasibilityError::FeasibilityError; };
struct TooFewDistinct final : FeasibilityError { using FeasibilityError::FeasibilityError; };
struct Infeasible final : FeasibilityError { using FeasibilityError::FeasibilityError; };
struct PinConflict final : FeasibilityError { using FeasibilityError::FeasibilityError; };
struct InterlacingViolated final : FeasibilityError { using FeasibilityError::FeasibilityError; };
struct DuplicateMu final : FeasibilityError { using FeasibilityError::FeasibilityError; };
struct EigenpairMismatch final : FeasibilityError { using FeasibilityError::FeasibilityError; };
struct NotUnit final : FeasibilityError { using FeasibilityError::FeasibilityError; };
struct NotInFamily final : FeasibilityError { using FeasibilityError::FeasibilityError; };

struct SearchExhausted final : NumericError { using NumericError::NumericError; };
struct SeparationFailed final : NumericError { using NumericError::NumericError; };
struct NegativeRadicand final : NumericError { using NumericError::NumericError; };
struct PatternMismatch final : NumericError { using NumericError::NumericError; };
struct SpectrumMismatch final : NumericError { using NumericError::NumericError; };
struct ConvergenceFailure final : NumericError { using NumericError::NumericError; };

class ParseError final : public IoError {
public:
    ParseError(const std::string& msg, int line, int column)
        : IoError(msg + " (line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
private:
    int line_;
    int column_;
};

// ---------------------------------------------------------------------------
// Tolerances. All comparisons are scale-relative: thresholds get multiplied
// by max(1, magnitude of the data involved).
// ---------------------------------------------------------------------------

struct ToleranceProfile {
    double spec_tol = 1e-8;   // relative eigenvalue agreement
    double zero_tol = 1e-10;  // pattern zero threshold
    double rank_tol = 1e-9;   // singular-value cutoff for nullity decisions

    void validate() const {
        if (!(spec_tol > 2.3e-16) || !(zero_tol > 0.0) || !(rank_tol > 0.0))
            throw InvalidArgument("tolerances must be strictly positive and spec_tol above machine epsilon");
    }
};

inline double scale_of(std::span<const double> xs) {
    double m = 1.0;
    for (double x : xs) m = std::max(m, std::abs(x));
    return m;
}

inline bool all_finite(std::span<const double> xs) {
    return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

// ---------------------------------------------------------------------------
// Dense matrices. Matrix is a plain row-major rectangular array; SymMatrix
// wraps a square Matrix and keeps entries[i][j] == entries[j][i] exactly by
// writing both halves through set().
// ---------------------------------------------------------------------------

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw InvalidArgument("matrix dimensions must be nonnegative");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw InvalidArgument("matrix product dimension mismatch");
        Matrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int t = 0; t < cols_; ++t) {
                const double v = (*this)(i, t);
                if (v == 0.0) continue;
                for (int j = 0; j < rhs.cols_; ++j) out(i, j) += v * rhs(t, j);
            }
        return out;
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    std::span<const double> data() const { return a_; }

private:
    int rows_, cols_;
    std::vector<double> a_;
};

class SymMatrix {
public:
    explicit SymMatrix(int n = 0) : m_(n, n) {
        if (n < 0) throw InvalidArgument("matrix order must be nonnegative");
    }

    // Builds from a square array; the strict upper triangle is authoritative
    // and is mirrored onto the lower one. Rejects non-finite entries and
    // asymmetry beyond tol.zero_tol relative to the largest entry.
    static SymMatrix mirrored(const Matrix& src, const ToleranceProfile& tol = {}) {
        if (src.rows() != src.cols()) throw InvalidArgument("symmetric matrix must be square");
        if (!all_finite(src.data())) throw InvalidArgument("matrix entries must be finite");
        const double thr = tol.zero_tol * std::max(1.0, src.max_abs());
        SymMatrix out(src.rows());
        for (int i = 0; i < src.rows(); ++i) {
            out.m_(i, i) = src(i, i);
            for (int j = i + 1; j < src.cols(); ++j) {
                if (std::abs(src(i, j) - src(j, i)) > thr)
                    throw InvalidArgument("matrix is not symmetric at entry (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                out.m_(i, j) = src(i, j);
                out.m_(j, i) = src(i, j);
            }
        }
        return out;
    }

    int order() const { return m_.rows(); }

    double operator()(int i, int j) const { return m_(i, j); }

    void set(int i, int j, double v) {
        if (!std::isfinite(v)) throw InvalidArgument("matrix entries must be finite");
        m_(i, j) = v;
        m_(j, i) = v;
    }

    const Matrix& dense() const { return m_; }

    double max_abs() const { return m_.max_abs(); }

    // M(i): principal submatrix with row and column i (0-based) removed.
    SymMatrix principal_submatrix_removing(int idx) const {
        const int n = order();
        if (idx < 0 || idx >= n) throw InvalidArgument("submatrix index out of range");
        SymMatrix out(n - 1);
        for (int i = 0, ii = 0; i < n; ++i) {
            if (i == idx) continue;
            for (int j = i, jj = ii; j < n; ++j) {
                if (j == idx) continue;
                out.set(ii, jj, m_(i, j));
                ++jj;
            }
            ++ii;
        }
        return out;
    }

    std::vector<double> row_sums() const {
        const int n = order();
        std::vector<double> s(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s[i] += m_(i, j);
        return s;
    }

private:
    Matrix m_;
};

// ---------------------------------------------------------------------------
// Spectrum: a nonempty multiset of finite reals, held sorted descending
// (stable among exact ties). Distinctness groups values whose gap is at most
// zero_tol * scale.
// ---------------------------------------------------------------------------

class Spectrum {
public:
    explicit Spectrum(std::vector<double> vals) : values_(std::move(vals)) {
        if (values_.empty()) throw InvalidArgument("spectrum must hold at least one value");
        if (!all_finite(values_)) throw InvalidArgument("spectrum values must be finite");
        std::stable_sort(values_.begin(), values_.end(), std::greater<>{});
    }

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    double scale() const { return std::max(1.0, std::max(std::abs(values_.front()), std::abs(values_.back()))); }

    int distinct_count(const ToleranceProfile& tol = {}) const {
        const double thr = tol.zero_tol * scale();
        int groups = 1;
        for (std::size_t i = 1; i < values_.size(); ++i)
            if (values_[i - 1] - values_[i] > thr) ++groups;
        return groups;
    }

    int multiplicity(double v, const ToleranceProfile& tol = {}) const {
        const double thr = tol.zero_tol * scale();
        int count = 0;
        for (double x : values_)
            if (std::abs(x - v) <= thr) ++count;
        return count;
    }

    // Descending list with one representative per distinctness group.
    std::vector<double> distinct_values(const ToleranceProfile& tol = {}) const {
        const double thr = tol.zero_tol * scale();
        std::vector<double> reps{values_.front()};
        for (std::size_t i = 1; i < values_.size(); ++i)
            if (values_[i - 1] - values_[i] > thr) reps.push_back(values_[i]);
        return reps;
    }

    // Multiplicity of each distinct_values() representative, same order.
    std::vector<int> group_sizes(const ToleranceProfile& tol = {}) const {
        const double thr = tol.zero_tol * scale();
        std::vector<int> sizes{1};
        for (std::size_t i = 1; i < values_.size(); ++i) {
            if (values_[i - 1] - values_[i] > thr) sizes.push_back(1);
            else ++sizes.back();
        }
        return sizes;
    }

private:
    std::vector<double> values_;
};

// True iff both spectra have the same length and, compared entrywise after
// the descending sort, differ nowhere by more than spec_tol * max(1, |s1|).
inline bool spectrum_equal(const Spectrum& s1, const Spectrum& s2, const ToleranceProfile& tol = {}) {
    if (s1.size() != s2.size()) return false;
    const double thr = tol.spec_tol * s1.scale();
    for (std::size_t i = 0; i < s1.size(); ++i)
        if (std::abs(s1[i] - s2[i]) > thr) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Bordered matrix: diag(mu_1..mu_{n-1}) with a dense last row/column b and
// corner a. Its off-diagonal support is a star centered at the last vertex
// whenever every b_i is nonzero.
// ---------------------------------------------------------------------------

struct BorderedMatrix {
    std::vector<double> diag;    // mu_1 .. mu_{n-1}
    std::vector<double> border;  // b_1 .. b_{n-1}
    double corner = 0.0;         // a
};

inline SymMatrix assemble_bordered(const BorderedMatrix& b) {
    if (b.diag.size() != b.border.size())
        throw InvalidArgument("bordered matrix needs matching diagonal and border lengths");
    if (!all_finite(b.diag) || !all_finite(b.border) || !std::isfinite(b.corner))
        throw InvalidArgument("bordered matrix entries must be finite");
    const int n = static_cast<int>(b.diag.size()) + 1;
    SymMatrix out(n);
    for (int i = 0; i + 1 < n; ++i) {
        out.set(i, i, b.diag[i]);
        out.set(i, n - 1, b.border[i]);
    }
    out.set(n - 1, n - 1, b.corner);
    return out;
}

}  // namespace iepg
