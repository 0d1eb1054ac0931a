#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "recol/fp.hpp"

namespace recol {

/// Dense matrix over GF(p), row-major. Entries are always kept reduced to
/// [0, p). Dimensions at desk scale (tens, not thousands); no attempt at
/// asymptotically fast elimination.
class Mat {
  public:
    Mat() : rows_(0), cols_(0), field_{2} {}
    Mat(std::size_t rows, std::size_t cols, FieldSpec f)
        : rows_(rows), cols_(cols), field_(f), a_(rows * cols, 0) {}

    static Mat identity(std::size_t n, FieldSpec f) {
        Mat m(n, n, f);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Mat zero(std::size_t rows, std::size_t cols, FieldSpec f) { return Mat(rows, cols, f); }

    static Mat from_rows(std::size_t rows, std::size_t cols, FieldSpec f,
                         std::vector<std::uint32_t> entries) {
        Mat m(rows, cols, f);
        if (entries.size() != rows * cols)
            throw std::invalid_argument("Mat::from_rows: entry count mismatch");
        for (auto& e : entries) e %= f.p;
        m.a_ = std::move(entries);
        return m;
    }

    static Mat col_vector(FieldSpec f, std::vector<std::uint32_t> entries) {
        const std::size_t n = entries.size();
        return from_rows(n, 1, f, std::move(entries));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldSpec field() const { return field_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    const std::vector<std::uint32_t>& entries() const { return a_; }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? 1u : 0u)) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
    }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
        return r;
    }

    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: dimension mismatch");
        Mat r(rows_, o.cols_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint32_t v = at(i, k);
                if (!v) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(v, o.at(k, j)));
            }
        return r;
    }

    Mat scaled(std::uint32_t c) const {
        Mat r = *this;
        for (auto& v : r.a_) v = field_.mul(v, c);
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Mat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Mat r(nr, nc, field_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
        return r;
    }

    Mat col(std::size_t c) const { return submatrix(0, c, rows_, 1); }

    static Mat hstack(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
        Mat r(a.rows_, a.cols_ + b.cols_, a.field_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    static Mat vstack(const Mat& a, const Mat& b) {
        if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: col mismatch");
        Mat r(a.rows_ + b.rows_, a.cols_, a.field_);
        std::copy(a.a_.begin(), a.a_.end(), r.a_.begin());
        std::copy(b.a_.begin(), b.a_.end(), r.a_.begin() + a.a_.size());
        return r;
    }

    /// Block diagonal of two matrices (direct sum of linear maps).
    static Mat block_diag(const Mat& a, const Mat& b) {
        Mat r(a.rows_ + b.rows_, a.cols_ + b.cols_, a.field_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return r;
    }

    std::vector<std::uint32_t> row_vec(std::size_t r) const {
        return std::vector<std::uint32_t>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    }

  private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Mat: shape mismatch");
    }

    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<std::uint32_t> a_;
};

struct RrefResult {
    Mat rref;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

inline RrefResult rref(Mat m) {
    const FieldSpec f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pr, j));
        const std::uint32_t inv = f.inv(m.at(pr, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(pr, j) = f.mul(m.at(pr, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || m.at(i, c) == 0) continue;
            const std::uint32_t factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(pr, j)));
        }
        pivots.push_back(c);
        ++pr;
    }
    return RrefResult{std::move(m), std::move(pivots)};
}

struct SolveResult {
    std::size_t rank = 0;
    std::vector<Mat> kernel_basis;   // column vectors spanning {x : Ax = 0}
    std::optional<Mat> particular;   // solves Ax = b when b given and consistent
};

/// Row-reduce [A | b] and read off rank, kernel basis and a particular
/// solution. Exact over GF(p): either a solution exists or provably not.
inline SolveResult rref_solve(const Mat& a, const std::optional<Mat>& b = std::nullopt) {
    const FieldSpec f = a.field();
    Mat work = a;
    if (b) {
        if (b->rows() != a.rows()) throw std::invalid_argument("rref_solve: rhs row mismatch");
        work = Mat::hstack(a, *b);
    }
    RrefResult rr = rref(work);
    // pivots within the coefficient block only
    std::vector<std::size_t> pivots;
    for (std::size_t p : rr.pivot_cols)
        if (p < a.cols()) pivots.push_back(p);

    SolveResult out;
    out.rank = pivots.size();

    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        Mat v(a.cols(), 1, f);
        v.at(c, 0) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v.at(pivots[i], 0) = f.neg(rr.rref.at(i, c));
        out.kernel_basis.push_back(std::move(v));
    }

    if (b) {
        const bool consistent =
            std::none_of(rr.pivot_cols.begin(), rr.pivot_cols.end(),
                         [&](std::size_t p) { return p >= a.cols(); });
        if (consistent) {
            Mat x(a.cols(), b->cols(), f);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                for (std::size_t j = 0; j < b->cols(); ++j)
                    x.at(pivots[i], j) = rr.rref.at(i, a.cols() + j);
            out.particular = std::move(x);
        }
    }
    return out;
}

inline std::optional<Mat> invert(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert: non-square input");
    if (a.rows() == 0) return Mat(0, 0, a.field());
    RrefResult rr = rref(Mat::hstack(a, Mat::identity(a.rows(), a.field())));
    if (rr.rank() < a.rows()) return std::nullopt;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (rr.pivot_cols[i] != i) return std::nullopt;
    return rr.rref.submatrix(0, a.cols(), a.rows(), a.cols());
}

inline std::size_t rank_of(const Mat& a) { return rref(a).rank(); }

/// Incremental row space: insert vectors, query membership, reduce against the
/// span. Backbone of ideal saturation, trace and image computations.
class RowSpan {
  public:
    explicit RowSpan(std::size_t width, FieldSpec f) : width_(width), field_(f) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    /// Reduce v against the current basis (in place of a copy).
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::uint32_t c = v[pivots_[i]];
            if (!c) continue;
            for (std::size_t j = 0; j < width_; ++j)
                v[j] = field_.sub(v[j], field_.mul(c, rows_[i][j]));
        }
        return v;
    }

    bool contains(const std::vector<std::uint32_t>& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
    }

    /// Returns true if v enlarged the span.
    bool insert(std::vector<std::uint32_t> v) {
        v = reduce(std::move(v));
        std::size_t piv = width_;
        for (std::size_t j = 0; j < width_; ++j)
            if (v[j]) { piv = j; break; }
        if (piv == width_) return false;
        const std::uint32_t inv = field_.inv(v[piv]);
        for (auto& x : v) x = field_.mul(x, inv);
        // keep basis fully reduced
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::uint32_t c = rows_[i][piv];
            if (!c) continue;
            for (std::size_t j = 0; j < width_; ++j)
                rows_[i][j] = field_.sub(rows_[i][j], field_.mul(c, v[j]));
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    const std::vector<std::vector<std::uint32_t>>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::vector<std::size_t> free_columns() const {
        std::vector<bool> piv(width_, false);
        for (std::size_t p : pivots_) piv[p] = true;
        std::vector<std::size_t> free;
        for (std::size_t j = 0; j < width_; ++j)
            if (!piv[j]) free.push_back(j);
        return free;
    }

    /// Coordinates of v mod the span, in the free-column coordinate system.
    std::vector<std::uint32_t> coords_mod(const std::vector<std::uint32_t>& v) const {
        auto r = reduce(v);
        std::vector<std::uint32_t> out;
        for (std::size_t j : free_columns()) out.push_back(r[j]);
        return out;
    }

  private:
    std::size_t width_;
    FieldSpec field_;
    std::vector<std::vector<std::uint32_t>> rows_;  // reduced, pivot-sorted
    std::vector<std::size_t> pivots_;
};

}  // namespace recol
