#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "epkit/exactnum.hpp"

namespace epkit {

/// Raised when operand shapes are incompatible.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over the Gaussian rationals. Zero dimensions are legal.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols);
    MatrixQ(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
    /// Row-list literal; every row must have the same length.
    MatrixQ(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static MatrixQ identity(std::size_t n);
    static MatrixQ zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static MatrixQ diagonal(const std::vector<GaussianRational>& diag);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] bool empty() const { return entries_.empty(); }

    GaussianRational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    [[nodiscard]] const std::vector<GaussianRational>& entries() const { return entries_; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_real() const;

    [[nodiscard]] MatrixQ transpose() const;
    /// Entrywise conjugate of the transpose.
    [[nodiscard]] MatrixQ adjoint() const;
    [[nodiscard]] bool is_self_adjoint() const;

    [[nodiscard]] MatrixQ column(std::size_t j) const;
    [[nodiscard]] MatrixQ select_columns(const std::vector<std::size_t>& cols) const;
    [[nodiscard]] MatrixQ select_rows(const std::vector<std::size_t>& rows) const;
    [[nodiscard]] MatrixQ block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

    /// [lhs | rhs]
    static MatrixQ hcat(const MatrixQ& lhs, const MatrixQ& rhs);
    /// [top ; bottom]
    static MatrixQ vcat(const MatrixQ& top, const MatrixQ& bottom);
    /// Block diagonal lhs ⊕ rhs.
    static MatrixQ direct_sum(const MatrixQ& lhs, const MatrixQ& rhs);

    MatrixQ& operator+=(const MatrixQ& rhs);
    MatrixQ& operator-=(const MatrixQ& rhs);
    MatrixQ& operator*=(const GaussianRational& scalar);

    friend MatrixQ operator+(MatrixQ lhs, const MatrixQ& rhs) { return lhs += rhs; }
    friend MatrixQ operator-(MatrixQ lhs, const MatrixQ& rhs) { return lhs -= rhs; }
    friend MatrixQ operator*(const MatrixQ& lhs, const MatrixQ& rhs);
    friend MatrixQ operator*(MatrixQ lhs, const GaussianRational& s) { return lhs *= s; }
    friend MatrixQ operator*(const GaussianRational& s, MatrixQ rhs) { return rhs *= s; }
    friend MatrixQ operator-(MatrixQ x);

    friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> entries_;
};

/// Left-to-right product; shapes are checked at every step.
MatrixQ product(std::initializer_list<std::reference_wrapper<const MatrixQ>> factors);

std::ostream& operator<<(std::ostream& os, const MatrixQ& m);

}  // namespace epkit
