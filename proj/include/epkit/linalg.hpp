#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "epkit/matrix.hpp"

namespace epkit {

struct RrefResult {
    MatrixQ reduced;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Exact reduced row-echelon form.
RrefResult rref(const MatrixQ& a);

std::size_t rank(const MatrixQ& a);

/// Linear subspace of an ambient coordinate space, stored in canonical form:
/// the basis columns are the transposed nonzero rows of the RREF of any
/// spanning set, so equal subspaces compare equal structurally.
class Subspace {
public:
    /// Span of the columns of `generators`.
    static Subspace span(const MatrixQ& generators);
    static Subspace zero(std::size_t ambient_dim) { return span(MatrixQ(ambient_dim, 0)); }

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
    [[nodiscard]] std::size_t dim() const { return basis_.cols(); }
    [[nodiscard]] const MatrixQ& basis() const { return basis_; }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace(std::size_t ambient_dim, MatrixQ basis) : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

    std::size_t ambient_dim_ = 0;
    MatrixQ basis_;
};

/// N(A) = {x : A x = 0}.
Subspace kernel(const MatrixQ& a);
/// R(A) = A·(column space).
Subspace range(const MatrixQ& a);
/// Right ideal image {x A}, coordinatized as column vectors (span of the rows of A).
Subspace row_space(const MatrixQ& a);
/// Left annihilator {x : x A = 0}, coordinatized as column vectors.
Subspace left_kernel(const MatrixQ& a);

/// True iff the subspaces coincide. Throws ShapeError on ambient mismatch.
bool subspace_equal(const Subspace& lhs, const Subspace& rhs);
/// True iff `inner` ⊆ `outer`. Throws ShapeError on ambient mismatch.
bool subspace_includes(const Subspace& outer, const Subspace& inner);

/// A = B·C with B of full column rank and C of full row rank.
struct FullRankFactorization {
    MatrixQ b;  // n×r
    MatrixQ c;  // r×m
    std::size_t rank = 0;
};

/// B = pivot columns of A, C = nonzero rows of rref(A).
FullRankFactorization full_rank_factorize(const MatrixQ& a);

inline MatrixQ conj_transpose(const MatrixQ& a) { return a.adjoint(); }

bool has_full_column_rank(const MatrixQ& a);
bool has_full_row_rank(const MatrixQ& a);

enum class Side {
    left,   // solve Z·A = Y for Z
    right,  // solve A·X = Y for X
};

/// Some exact solution of the requested system, or nullopt when none exists.
std::optional<MatrixQ> solve_exists(const MatrixQ& a, const MatrixQ& y, Side side);

/// True iff solve_exists(a, ·, side) can have at most one solution.
bool solution_is_unique(const MatrixQ& a, Side side);

/// Some Z with L·Z·R = Y, or nullopt when none exists.
std::optional<MatrixQ> solve_sandwich(const MatrixQ& left, const MatrixQ& right, const MatrixQ& y);

bool is_invertible(const MatrixQ& a);
/// Throws ArithmeticError for singular input, ShapeError for non-square input.
MatrixQ inverse(const MatrixQ& a);

/// Matrix of x ↦ a·x on M_n in the row-major entry basis (n²×n²).
MatrixQ kron_left_mult(const MatrixQ& a);

}  // namespace epkit
