#include "epkit/linalg.hpp"

namespace epkit {

RrefResult rref(const MatrixQ& a) {
    MatrixQ r = a;
    std::vector<std::size_t> pivots;
    const std::size_t rows = r.rows();
    const std::size_t cols = r.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t sel = lead;
        while (sel < rows && r(sel, col).is_zero()) ++sel;
        if (sel == rows) continue;
        if (sel != lead) {
            for (std::size_t j = col; j < cols; ++j) std::swap(r(sel, j), r(lead, j));
        }
        const GaussianRational inv = GaussianRational(1) / r(lead, col);
        for (std::size_t j = col; j < cols; ++j) r(lead, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || r(i, col).is_zero()) continue;
            const GaussianRational factor = r(i, col);
            for (std::size_t j = col; j < cols; ++j) {
                if (!r(lead, j).is_zero()) r(i, j) -= factor * r(lead, j);
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const MatrixQ& a) { return rref(a).pivots.size(); }

Subspace Subspace::span(const MatrixQ& generators) {
    const std::size_t n = generators.rows();
    auto [reduced, pivots] = rref(generators.transpose());
    MatrixQ rows = reduced.block(0, 0, pivots.size(), n);
    return Subspace(n, rows.transpose());
}

Subspace kernel(const MatrixQ& a) {
    const std::size_t m = a.cols();
    auto [r, pivots] = rref(a);
    std::vector<bool> is_pivot(m, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    MatrixQ basis(m, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(f, k) = 1;
        for (std::size_t row = 0; row < pivots.size(); ++row) basis(pivots[row], k) = -r(row, f);
    }
    return Subspace::span(basis);
}

Subspace range(const MatrixQ& a) { return Subspace::span(a); }

Subspace row_space(const MatrixQ& a) { return Subspace::span(a.transpose()); }

Subspace left_kernel(const MatrixQ& a) { return kernel(a.transpose()); }

namespace {

void require_same_ambient(const Subspace& lhs, const Subspace& rhs) {
    if (lhs.ambient_dim() != rhs.ambient_dim()) {
        throw ShapeError("subspaces live in different ambient spaces (" + std::to_string(lhs.ambient_dim()) +
                         " vs " + std::to_string(rhs.ambient_dim()) + ")");
    }
}

}  // namespace

bool subspace_equal(const Subspace& lhs, const Subspace& rhs) {
    require_same_ambient(lhs, rhs);
    return lhs == rhs;
}

bool subspace_includes(const Subspace& outer, const Subspace& inner) {
    require_same_ambient(outer, inner);
    if (inner.dim() > outer.dim()) return false;
    return rank(MatrixQ::hcat(outer.basis(), inner.basis())) == outer.dim();
}

FullRankFactorization full_rank_factorize(const MatrixQ& a) {
    auto [r, pivots] = rref(a);
    const std::size_t k = pivots.size();
    return {a.select_columns(pivots), r.block(0, 0, k, a.cols()), k};
}

bool has_full_column_rank(const MatrixQ& a) { return rank(a) == a.cols(); }
bool has_full_row_rank(const MatrixQ& a) { return rank(a) == a.rows(); }

namespace {

std::optional<MatrixQ> solve_right(const MatrixQ& a, const MatrixQ& y) {
    if (a.rows() != y.rows()) throw ShapeError("solve A·X = Y with incompatible row counts");
    const std::size_t m = a.cols();
    auto [r, pivots] = rref(MatrixQ::hcat(a, y));
    if (!pivots.empty() && pivots.back() >= m) return std::nullopt;
    MatrixQ x(m, y.cols());
    for (std::size_t row = 0; row < pivots.size(); ++row)
        for (std::size_t j = 0; j < y.cols(); ++j) x(pivots[row], j) = r(row, m + j);
    return x;
}

}  // namespace

std::optional<MatrixQ> solve_exists(const MatrixQ& a, const MatrixQ& y, Side side) {
    if (side == Side::right) return solve_right(a, y);
    if (a.cols() != y.cols()) throw ShapeError("solve Z·A = Y with incompatible column counts");
    auto zt = solve_right(a.transpose(), y.transpose());
    if (!zt) return std::nullopt;
    return zt->transpose();
}

bool solution_is_unique(const MatrixQ& a, Side side) {
    return side == Side::right ? has_full_column_rank(a) : has_full_row_rank(a);
}

std::optional<MatrixQ> solve_sandwich(const MatrixQ& left, const MatrixQ& right, const MatrixQ& y) {
    // (L Z R)_{ij} = sum_{k,l} L_ik Z_kl R_lj ; unknown vec(Z) in row-major order.
    const std::size_t n = left.rows();
    const std::size_t p = left.cols();
    const std::size_t q = right.rows();
    const std::size_t m = right.cols();
    if (y.rows() != n || y.cols() != m) throw ShapeError("solve L·Z·R = Y with incompatible shapes");
    MatrixQ system(n * m, p * q);
    MatrixQ rhs(n * m, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            rhs(i * m + j, 0) = y(i, j);
            for (std::size_t k = 0; k < p; ++k) {
                if (left(i, k).is_zero()) continue;
                for (std::size_t l = 0; l < q; ++l) system(i * m + j, k * q + l) = left(i, k) * right(l, j);
            }
        }
    }
    auto vec = solve_right(system, rhs);
    if (!vec) return std::nullopt;
    MatrixQ z(p, q);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) z(k, l) = (*vec)(k * q + l, 0);
    return z;
}

bool is_invertible(const MatrixQ& a) { return a.is_square() && rank(a) == a.rows(); }

MatrixQ inverse(const MatrixQ& a) {
    if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    auto [r, pivots] = rref(MatrixQ::hcat(a, MatrixQ::identity(n)));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw ArithmeticError("matrix is singular");
    return r.block(0, n, n, n);
}

MatrixQ kron_left_mult(const MatrixQ& a) {
    if (!a.is_square()) throw ShapeError("left multiplication operator needs a square matrix");
    const std::size_t n = a.rows();
    MatrixQ out(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i * n + j, k * n + j) = a(i, k);
    return out;
}

}  // namespace epkit
