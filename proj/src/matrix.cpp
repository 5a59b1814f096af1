#include "epkit/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace epkit {

namespace {

std::string shape_str(const MatrixQ& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw ShapeError("entry count does not match dimensions");
}

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeError("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatrixQ MatrixQ::diagonal(const std::vector<GaussianRational>& diag) {
    MatrixQ m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

bool MatrixQ::is_zero() const {
    for (const auto& x : entries_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool MatrixQ::is_real() const {
    for (const auto& x : entries_) {
        if (!x.is_real()) return false;
    }
    return true;
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

MatrixQ MatrixQ::adjoint() const {
    MatrixQ out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
    return out;
}

bool MatrixQ::is_self_adjoint() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i).conj()) return false;
    return true;
}

MatrixQ MatrixQ::column(std::size_t j) const { return block(0, j, rows_, 1); }

MatrixQ MatrixQ::select_columns(const std::vector<std::size_t>& cols) const {
    MatrixQ out(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols.size(); ++k) out(i, k) = (*this)(i, cols[k]);
    return out;
}

MatrixQ MatrixQ::select_rows(const std::vector<std::size_t>& rows) const {
    MatrixQ out(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(rows[k], j);
    return out;
}

MatrixQ MatrixQ::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw ShapeError("block out of range for " + shape_str(*this));
    MatrixQ out(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    return out;
}

MatrixQ MatrixQ::hcat(const MatrixQ& lhs, const MatrixQ& rhs) {
    if (lhs.rows_ != rhs.rows_) throw ShapeError("hcat of " + shape_str(lhs) + " and " + shape_str(rhs));
    MatrixQ out(lhs.rows_, lhs.cols_ + rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t j = 0; j < lhs.cols_; ++j) out(i, j) = lhs(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, lhs.cols_ + j) = rhs(i, j);
    }
    return out;
}

MatrixQ MatrixQ::vcat(const MatrixQ& top, const MatrixQ& bottom) {
    if (top.cols_ != bottom.cols_) throw ShapeError("vcat of " + shape_str(top) + " and " + shape_str(bottom));
    MatrixQ out(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.entries_.begin(), top.entries_.end(), out.entries_.begin());
    std::copy(bottom.entries_.begin(), bottom.entries_.end(),
              out.entries_.begin() + static_cast<std::ptrdiff_t>(top.entries_.size()));
    return out;
}

MatrixQ MatrixQ::direct_sum(const MatrixQ& lhs, const MatrixQ& rhs) {
    MatrixQ out(lhs.rows_ + rhs.rows_, lhs.cols_ + rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t j = 0; j < lhs.cols_; ++j) out(i, j) = lhs(i, j);
    for (std::size_t i = 0; i < rhs.rows_; ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(lhs.rows_ + i, lhs.cols_ + j) = rhs(i, j);
    return out;
}

MatrixQ& MatrixQ::operator+=(const MatrixQ& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("sum of " + shape_str(*this) + " and " + shape_str(rhs));
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

MatrixQ& MatrixQ::operator-=(const MatrixQ& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("difference of " + shape_str(*this) + " and " + shape_str(rhs));
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

MatrixQ& MatrixQ::operator*=(const GaussianRational& scalar) {
    for (auto& x : entries_) x *= scalar;
    return *this;
}

MatrixQ operator*(const MatrixQ& lhs, const MatrixQ& rhs) {
    if (lhs.cols_ != rhs.rows_) throw ShapeError("product of " + shape_str(lhs) + " and " + shape_str(rhs));
    MatrixQ out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const GaussianRational& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const GaussianRational& b = rhs(k, j);
                if (!b.is_zero()) out(i, j) += a * b;
            }
        }
    }
    return out;
}

MatrixQ operator-(MatrixQ x) {
    for (auto& v : x.entries_) v = -v;
    return x;
}

MatrixQ product(std::initializer_list<std::reference_wrapper<const MatrixQ>> factors) {
    if (factors.size() == 0) throw ShapeError("empty product has no inferable shape");
    auto it = factors.begin();
    MatrixQ acc = it->get();
    for (++it; it != factors.end(); ++it) acc = acc * it->get();
    return acc;
}

std::string MatrixQ::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MatrixQ& m) { return os << m.to_string(); }

}  // namespace epkit
