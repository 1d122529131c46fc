#ifndef CABCODE_LINALG_HPP
#define CABCODE_LINALG_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "field.hpp"

namespace cabcode {

/// Dense row-major matrix of field-element representations.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const Field& f, const std::vector<std::vector<std::uint32_t>>& rows) {
        if (rows.empty()) throw BadRange("matrix needs at least one row");
        Matrix m(f, rows.size(), rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw BadRange("ragged rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
        }
        return m;
    }

    const Field& field() const { return *f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<std::uint32_t> row(std::size_t r) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    Matrix transposed() const {
        Matrix t(*f_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.f_ != b.f_) throw MixedFields("matrices over different fields");
        if (a.cols_ != b.rows_) throw BadRange("matrix product shape mismatch");
        const Field& f = *a.f_;
        Matrix r(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                std::uint32_t aik = a.at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    std::uint32_t bkj = b.at(k, j);
                    if (bkj) r.at(i, j) = f.addv(r.at(i, j), f.mulv(aik, bkj));
                }
            }
        return r;
    }

    std::vector<std::uint32_t> apply_row(const std::vector<std::uint32_t>& x) const {
        // x * M for a row vector x.
        if (x.size() != rows_) throw BadRange("row-vector length mismatch");
        std::vector<std::uint32_t> y(cols_, 0);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (x[r] == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c)
                if (at(r, c)) y[c] = f_->addv(y[c], f_->mulv(x[r], at(r, c)));
        }
        return y;
    }

    /// In-place Gauss-Jordan to reduced row echelon form. With
    /// reverse = false pivots are leftmost leading entries; with
    /// reverse = true columns are scanned right to left so pivots sit on the
    /// trailing nonzero positions instead. Returns pivot column indices in
    /// processing order.
    std::vector<std::size_t> rref(bool reverse = false) {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t step = 0; step < cols_ && r < rows_; ++step) {
            std::size_t c = reverse ? cols_ - 1 - step : step;
            std::size_t sel = rows_;
            for (std::size_t rr = r; rr < rows_; ++rr)
                if (at(rr, c) != 0) { sel = rr; break; }
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t cc = 0; cc < cols_; ++cc) std::swap(at(r, cc), at(sel, cc));
            std::uint32_t inv = f_->invv(at(r, c));
            for (std::size_t cc = 0; cc < cols_; ++cc) at(r, cc) = f_->mulv(at(r, cc), inv);
            for (std::size_t rr = 0; rr < rows_; ++rr) {
                if (rr == r || at(rr, c) == 0) continue;
                std::uint32_t factor = at(rr, c);
                for (std::size_t cc = 0; cc < cols_; ++cc)
                    at(rr, cc) = f_->subv(at(rr, cc), f_->mulv(factor, at(r, cc)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix copy = *this;
        return copy.rref().size();
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw SingularBasis("inverse of a non-square matrix");
        Matrix aug(*f_, rows_, 2 * cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
            aug.at(r, cols_ + r) = 1;
        }
        aug.rref();
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (aug.at(r, c) != (r == c ? 1u : 0u)) throw SingularBasis("matrix is singular");
        Matrix inv(*f_, rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
        return inv;
    }

    /// Rows spanning the right kernel {x : M x^T = 0}.
    Matrix kernel() const {
        Matrix copy = *this;
        std::vector<std::size_t> pivots = copy.rref();
        std::vector<char> is_pivot(cols_, 0);
        for (std::size_t c : pivots) is_pivot[c] = 1;
        std::size_t dim = cols_ - pivots.size();
        Matrix ker(*f_, dim, cols_);
        if (dim == 0) return ker;
        std::size_t out = 0;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            ker.at(out, free) = 1;
            for (std::size_t pr = 0; pr < pivots.size(); ++pr)
                ker.at(out, pivots[pr]) = f_->negv(copy.at(pr, free));
            ++out;
        }
        return ker;
    }

    std::string csv() const {
        std::ostringstream os;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) os << ",";
                os << at(r, c);
            }
            os << "\n";
        }
        return os.str();
    }

private:
    const Field* f_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

inline std::uint32_t dot(const Field& f, const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) throw BadRange("dot product length mismatch");
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] && b[k]) s = f.addv(s, f.mulv(a[k], b[k]));
    return s;
}

inline std::vector<std::uint32_t> pointwise(const Field& f, const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) throw BadRange("pointwise product length mismatch");
    std::vector<std::uint32_t> r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = f.mulv(a[k], b[k]);
    return r;
}

} // namespace cabcode

#endif
