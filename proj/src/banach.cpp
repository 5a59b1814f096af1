#include "epkit/banach.hpp"

#include <cmath>
#include <exception>

#include "epkit/parallel.hpp"

namespace epkit::banach {

namespace {

constexpr double kPowerTol = 1e-12;
constexpr int kPowerMaxIter = 64;

double max_col_sum(const FloatMatrix& a) {
    double best = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) best = std::max(best, a.col(j).cwiseAbs().sum());
    return best;
}

double max_row_sum(const FloatMatrix& a) {
    double best = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) best = std::max(best, a.row(i).cwiseAbs().sum());
    return best;
}

double spectral_norm(const FloatMatrix& a) {
    const Eigen::Index n = a.cols();
    if (n == 0 || a.rows() == 0) return 0.0;
    const FloatMatrix gram = a.adjoint() * a;
    if (gram.cwiseAbs().maxCoeff() == 0.0) return 0.0;

    // Power iteration on G^(2^k): each step squares the previous power, and
    // the Rayleigh quotient of its dominant column estimates λ_max(G).
    FloatMatrix power = gram / gram.norm();
    double lambda = -1.0;
    for (int it = 0; it < kPowerMaxIter; ++it) {
        Eigen::Index col = 0;
        power.colwise().norm().maxCoeff(&col);
        const Eigen::VectorXcd x = power.col(col).normalized();
        const double next = x.dot(gram * x).real();
        if (lambda >= 0.0 && std::abs(next - lambda) <= kPowerTol * std::abs(next)) return std::sqrt(std::max(next, 0.0));
        lambda = next;
        power = power * power;
        const double scale = power.norm();
        if (!(scale > 0.0) || !std::isfinite(scale)) break;
        power /= scale;
    }
    throw ConvergenceError("power iteration did not converge");
}

HermitianCheckReport reduce(const std::vector<double>& deviations, const std::vector<double>& ts,
                            const HermitianCheckOptions& opts) {
    HermitianCheckReport rep;
    rep.grid_size = opts.grid;
    rep.t_max = opts.t_max;
    rep.tol_pass = opts.tol_pass;
    rep.tol_fail = opts.tol_fail;
    for (std::size_t k = 0; k < deviations.size(); ++k) {
        if (k == 0 || deviations[k] > rep.max_deviation) {
            rep.max_deviation = deviations[k];
            rep.t_at_max = ts[k];
        }
    }
    if (rep.max_deviation <= opts.tol_pass)
        rep.verdict = Verdict::hermitian;
    else if (rep.max_deviation >= opts.tol_fail)
        rep.verdict = Verdict::not_hermitian;
    else
        rep.verdict = Verdict::inconclusive;
    return rep;
}

std::vector<double> grid_points(const HermitianCheckOptions& opts) {
    if (opts.grid < 2) throw std::invalid_argument("hermitian check needs a grid of at least 2 points");
    if (!(opts.tol_pass < opts.tol_fail)) throw std::invalid_argument("tol_pass must be below tol_fail");
    std::vector<double> ts(opts.grid);
    const double step = 2.0 * opts.t_max / static_cast<double>(opts.grid - 1);
    for (std::size_t k = 0; k < opts.grid; ++k) ts[k] = -opts.t_max + step * static_cast<double>(k);
    ts.back() = opts.t_max;
    return ts;
}

void require_square(const FloatMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("operator norm of a non-square matrix");
}

}  // namespace

PNorm PNorm::parse(std::string_view text) {
    if (text == "1") return one();
    if (text == "2") return two();
    if (text == "inf") return inf();
    throw std::invalid_argument("unsupported norm '" + std::string(text) + "' (expected 1, 2 or inf)");
}

std::string PNorm::label() const {
    switch (p) {
        case Kind::one: return "1";
        case Kind::two: return "2";
        case Kind::inf: return "inf";
    }
    return "?";
}

void PNorm::validate(std::size_t n) const {
    if (!block_dims) return;
    std::size_t total = 0;
    for (auto d : *block_dims) total += d;
    if (total != n) throw std::invalid_argument("block dimensions do not sum to the ambient dimension");
}

double vector_norm(const Eigen::VectorXcd& x, const PNorm& norm) {
    std::vector<std::size_t> blocks = norm.block_dims.value_or(std::vector<std::size_t>{static_cast<std::size_t>(x.size())});
    norm.validate(static_cast<std::size_t>(x.size()));
    std::vector<double> inner;
    Eigen::Index offset = 0;
    for (auto d : blocks) {
        const auto seg = x.segment(offset, static_cast<Eigen::Index>(d));
        offset += static_cast<Eigen::Index>(d);
        switch (norm.p) {
            case PNorm::Kind::one: inner.push_back(seg.cwiseAbs().sum()); break;
            case PNorm::Kind::two: inner.push_back(seg.norm()); break;
            case PNorm::Kind::inf: inner.push_back(d == 0 ? 0.0 : seg.cwiseAbs().maxCoeff()); break;
        }
    }
    double out = 0.0;
    for (double v : inner) {
        switch (norm.p) {
            case PNorm::Kind::one: out += v; break;
            case PNorm::Kind::two: out += v * v; break;
            case PNorm::Kind::inf: out = std::max(out, v); break;
        }
    }
    return norm.p == PNorm::Kind::two ? std::sqrt(out) : out;
}

double op_norm(const FloatMatrix& a, const PNorm& norm) {
    require_square(a);
    norm.validate(static_cast<std::size_t>(a.rows()));
    switch (norm.p) {
        case PNorm::Kind::one: return max_col_sum(a);
        case PNorm::Kind::inf: return max_row_sum(a);
        case PNorm::Kind::two: return spectral_norm(a);
    }
    return 0.0;
}

FloatMatrix expm(const FloatMatrix& a) {
    require_square(a);
    const Eigen::Index n = a.rows();
    const double norm1 = max_col_sum(a);
    int squarings = 0;
    if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    const FloatMatrix x = a / std::ldexp(1.0, squarings);

    FloatMatrix sum = FloatMatrix::Identity(n, n);
    FloatMatrix term = FloatMatrix::Identity(n, n);
    for (int k = 1; k <= 60; ++k) {
        term = (term * x) / static_cast<double>(k);
        sum += term;
        if (max_col_sum(term) <= 1e-18 * max_col_sum(sum)) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

FloatMatrix to_float_matrix(const MatrixQ& a) {
    FloatMatrix out(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).to_complex();
    return out;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::hermitian: return "hermitian";
        case Verdict::not_hermitian: return "not_hermitian";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

double norm_deviation(const FloatMatrix& a, const PNorm& norm, double t) {
    const std::complex<double> it(0.0, t);
    return std::abs(op_norm(expm(it * a), norm) - 1.0);
}

HermitianCheckReport hermitian_check_serial(const FloatMatrix& a, const PNorm& norm, const HermitianCheckOptions& opts) {
    require_square(a);
    const auto ts = grid_points(opts);
    std::vector<double> dev(ts.size());
    for (std::size_t k = 0; k < ts.size(); ++k) dev[k] = norm_deviation(a, norm, ts[k]);
    return reduce(dev, ts, opts);
}

HermitianCheckReport hermitian_check(const FloatMatrix& a, const PNorm& norm, const HermitianCheckOptions& opts) {
    require_square(a);
    norm.validate(static_cast<std::size_t>(a.rows()));
    const auto ts = grid_points(opts);
    const auto count = static_cast<std::ptrdiff_t>(ts.size());
    std::vector<double> dev(ts.size());
    std::vector<std::exception_ptr> errors(ts.size());

#pragma omp parallel for schedule(static) num_threads(configured_threads())
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        try {
            dev[static_cast<std::size_t>(k)] = norm_deviation(a, norm, ts[static_cast<std::size_t>(k)]);
        } catch (...) {
            errors[static_cast<std::size_t>(k)] = std::current_exception();
        }
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return reduce(dev, ts, opts);
}

HermitianIdempotentResult is_hermitian_idempotent(const MatrixQ& a, const PNorm& norm,
                                                  const HermitianCheckOptions& opts) {
    if (!a.is_square()) throw ShapeError("hermitian idempotent check needs a square matrix");
    HermitianIdempotentResult out;
    out.idempotent = a * a == a;
    out.report = hermitian_check(to_float_matrix(a), norm, opts);
    if (norm.p == PNorm::Kind::two) {
        out.self_adjoint = a.is_self_adjoint();
        if (out.report.verdict != Verdict::inconclusive) {
            out.cross_check_agrees = (out.report.verdict == Verdict::hermitian) == *out.self_adjoint;
        }
    }
    return out;
}

}  // namespace epkit::banach
