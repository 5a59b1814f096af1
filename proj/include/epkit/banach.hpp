#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "epkit/matrix.hpp"

namespace epkit::banach {

using FloatMatrix = Eigen::MatrixXcd;

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ℓ_p norm on C^n, p ∈ {1, 2, ∞}, optionally split into blocks X_1 ⊕_p X_2 ⊕_p ...
///
/// Every block carries the same ℓ_p norm as the outer sum, so the composed
/// norm is the ℓ_p norm of the whole vector; block_dims only fixes the block
/// projections I_1 ⊕ 0 and 0 ⊕ I_2.
struct PNorm {
    enum class Kind { one, two, inf };

    Kind p = Kind::two;
    std::optional<std::vector<std::size_t>> block_dims;

    static PNorm one() { return {Kind::one, std::nullopt}; }
    static PNorm two() { return {Kind::two, std::nullopt}; }
    static PNorm inf() { return {Kind::inf, std::nullopt}; }
    /// Accepts "1", "2", "inf".
    static PNorm parse(std::string_view text);

    [[nodiscard]] std::string label() const;
    /// Throws std::invalid_argument when block_dims does not sum to n.
    void validate(std::size_t n) const;
};

/// Composed norm of a vector: inner block norms, then the outer p-sum.
double vector_norm(const Eigen::VectorXcd& x, const PNorm& norm);

/// Induced operator norm. p=1: max column sum; p=∞: max row sum;
/// p=2: largest singular value by power iteration on repeated squares of A*A
/// (relative tol 1e-12).
/// Throws ConvergenceError if the iteration stalls.
double op_norm(const FloatMatrix& a, const PNorm& norm);

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
FloatMatrix expm(const FloatMatrix& a);

FloatMatrix to_float_matrix(const MatrixQ& a);

enum class Verdict { hermitian, not_hermitian, inconclusive };

std::string_view to_string(Verdict v);

struct HermitianCheckOptions {
    std::size_t grid = 1024;
    double t_max = 2.0 * std::numbers::pi;
    double tol_pass = 1e-9;
    double tol_fail = 1e-6;
};

/// Grid evaluation of max_t |‖exp(itA)‖ − 1| over a symmetric uniform grid on [−t_max, t_max].
struct HermitianCheckReport {
    double max_deviation = 0.0;
    double t_at_max = 0.0;
    std::size_t grid_size = 0;
    double t_max = 0.0;
    double tol_pass = 0.0;
    double tol_fail = 0.0;
    Verdict verdict = Verdict::inconclusive;
};

/// |‖exp(itA)‖ − 1| at a single t.
double norm_deviation(const FloatMatrix& a, const PNorm& norm, double t);

/// Parallel over grid points; the reduction is order-independent, so the
/// report equals hermitian_check_serial bit for bit.
HermitianCheckReport hermitian_check(const FloatMatrix& a, const PNorm& norm, const HermitianCheckOptions& opts = {});

/// Serial reference implementation.
HermitianCheckReport hermitian_check_serial(const FloatMatrix& a, const PNorm& norm,
                                            const HermitianCheckOptions& opts = {});

struct HermitianIdempotentResult {
    bool idempotent = false;                 // exact A·A = A
    std::optional<bool> self_adjoint;        // exact, p=2 only
    HermitianCheckReport report;
    bool cross_check_agrees = true;          // p=2: float verdict matches self-adjointness

    [[nodiscard]] bool inconclusive() const { return idempotent && report.verdict == Verdict::inconclusive; }
    [[nodiscard]] bool holds() const {
        return idempotent && report.verdict == Verdict::hermitian && self_adjoint.value_or(true);
    }
};

HermitianIdempotentResult is_hermitian_idempotent(const MatrixQ& a, const PNorm& norm,
                                                  const HermitianCheckOptions& opts = {});

}  // namespace epkit::banach
