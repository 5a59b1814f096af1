#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "epkit/banach.hpp"
#include "epkit/battery.hpp"
#include "support.hpp"

using namespace epkit;
using namespace epkit::banach;
using testing_support::mat;

namespace {

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

FloatMatrix fm(const MatrixQ& m) { return to_float_matrix(m); }

}  // namespace

TEST(PNorm, ParseAndValidate) {
    EXPECT_EQ(PNorm::parse("1").p, PNorm::Kind::one);
    EXPECT_EQ(PNorm::parse("inf").p, PNorm::Kind::inf);
    EXPECT_EQ(PNorm::parse("2").label(), "2");
    EXPECT_THROW(PNorm::parse("3"), std::invalid_argument);
    PNorm blocks = PNorm::one();
    blocks.block_dims = std::vector<std::size_t>{1, 2};
    EXPECT_NO_THROW(blocks.validate(3));
    EXPECT_THROW(blocks.validate(4), std::invalid_argument);
}

TEST(VectorNorm, Values) {
    Eigen::VectorXcd x(2);
    x << std::complex<double>(3, 0), std::complex<double>(0, -4);
    EXPECT_DOUBLE_EQ(vector_norm(x, PNorm::one()), 7.0);
    EXPECT_DOUBLE_EQ(vector_norm(x, PNorm::two()), 5.0);
    EXPECT_DOUBLE_EQ(vector_norm(x, PNorm::inf()), 4.0);
}

TEST(OpNorm, Examples) {
    for (const PNorm& p : {PNorm::one(), PNorm::two(), PNorm::inf()}) {
        EXPECT_NEAR(op_norm(FloatMatrix::Identity(3, 3), p), 1.0, 1e-12);
    }
    const FloatMatrix n = fm(mat({{"0", "1"}, {"0", "0"}}));
    EXPECT_NEAR(op_norm(n, PNorm::one()), 1.0, 1e-15);
    EXPECT_NEAR(op_norm(n, PNorm::two()), 1.0, 1e-12);
    EXPECT_NEAR(op_norm(fm(mat({{"1", "1"}, {"0", "1"}})), PNorm::two()), kGolden, 1e-10);
    EXPECT_NEAR(op_norm(fm(mat({{"1", "-2"}, {"3", "4"}})), PNorm::one()), 6.0, 1e-15);
    EXPECT_NEAR(op_norm(fm(mat({{"1", "-2"}, {"3", "4"}})), PNorm::inf()), 7.0, 1e-15);
    EXPECT_EQ(op_norm(FloatMatrix::Zero(2, 2), PNorm::two()), 0.0);
}

TEST(OpNorm, SpectralNormAgreesWithSvd) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const FloatMatrix a = fm(battery::gen_matrix({s, 2 + s % 5, std::nullopt, 4, battery::Kind::arbitrary, true}));
        const double svd = Eigen::JacobiSVD<FloatMatrix>(a).singularValues()(0);
        EXPECT_NEAR(op_norm(a, PNorm::two()), svd, 1e-9 * std::max(1.0, svd));
    }
}

TEST(OpNorm, Submultiplicative) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const std::size_t n = 2 + s % 4;
        const FloatMatrix a = fm(battery::gen_matrix({s, n, std::nullopt, 4, battery::Kind::arbitrary, true}));
        const FloatMatrix b = fm(battery::gen_matrix({s + 1000, n, std::nullopt, 4, battery::Kind::arbitrary, true}));
        for (const PNorm& p : {PNorm::one(), PNorm::two(), PNorm::inf()}) {
            EXPECT_LE(op_norm(a * b, p), op_norm(a, p) * op_norm(b, p) + 1e-9);
        }
    }
}

TEST(Expm, ClosedForms) {
    EXPECT_TRUE(expm(FloatMatrix::Zero(3, 3)).isApprox(FloatMatrix::Identity(3, 3), 1e-15));

    const std::complex<double> i(0, 1);
    const double t = 0.7;
    FloatMatrix d = FloatMatrix::Zero(2, 2);
    d(0, 0) = i * t;
    FloatMatrix expected = FloatMatrix::Identity(2, 2);
    expected(0, 0) = std::exp(i * t);
    EXPECT_LT((expm(d) - expected).cwiseAbs().maxCoeff(), 1e-14);

    const FloatMatrix n = fm(mat({{"0", "1"}, {"0", "0"}}));
    EXPECT_LT((expm(i * t * n) - (FloatMatrix::Identity(2, 2) + i * t * n)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Expm, LargeArgumentMatchesEigenDecomposition) {
    // exp of a real symmetric matrix through its spectral decomposition.
    FloatMatrix a(2, 2);
    a << 3.0, 1.0, 1.0, -2.0;
    Eigen::SelfAdjointEigenSolver<FloatMatrix> es(a);
    const std::complex<double> it(0, 9.5);
    const Eigen::VectorXcd ev = (it * es.eigenvalues().cast<std::complex<double>>()).array().exp();
    const FloatMatrix expected = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
    EXPECT_LT((expm(it * a) - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(HermitianCheck, RealDiagonalPassesAllNorms) {
    const FloatMatrix d = fm(MatrixQ::diagonal({1, -2}));
    for (const PNorm& p : {PNorm::one(), PNorm::two(), PNorm::inf()}) {
        const auto rep = hermitian_check(d, p);
        EXPECT_EQ(rep.verdict, Verdict::hermitian);
        EXPECT_LT(rep.max_deviation, 1e-12);
    }
}

TEST(HermitianCheck, NilpotentAtTOne) {
    const FloatMatrix n = fm(mat({{"0", "1"}, {"0", "0"}}));
    EXPECT_NEAR(norm_deviation(n, PNorm::two(), 1.0), kGolden - 1.0, 1e-9);
    HermitianCheckOptions opts;
    opts.grid = 2;
    opts.t_max = 1.0;
    const auto rep = hermitian_check(n, PNorm::two(), opts);
    EXPECT_EQ(rep.verdict, Verdict::not_hermitian);
    EXPECT_NEAR(rep.max_deviation, kGolden - 1.0, 1e-9);
    EXPECT_NEAR(std::abs(rep.t_at_max), 1.0, 1e-15);
}

TEST(HermitianCheck, OrthogonalProjectionNotL1Hermitian) {
    const auto rep = hermitian_check(fm(mat({{"1/2", "1/2"}, {"1/2", "1/2"}})), PNorm::one());
    EXPECT_EQ(rep.verdict, Verdict::not_hermitian);
    EXPECT_GE(rep.max_deviation, 0.1);
}

TEST(HermitianCheck, ParallelEqualsSerial) {
    for (std::uint64_t s = 0; s < 6; ++s) {
        const FloatMatrix a = fm(battery::gen_matrix({s, 3, std::nullopt, 3, battery::Kind::arbitrary, true}));
        for (const PNorm& p : {PNorm::one(), PNorm::two(), PNorm::inf()}) {
            HermitianCheckOptions opts;
            opts.grid = 257;
            const auto par = hermitian_check(a, p, opts);
            const auto ser = hermitian_check_serial(a, p, opts);
            EXPECT_EQ(par.max_deviation, ser.max_deviation);
            EXPECT_EQ(par.t_at_max, ser.t_at_max);
            EXPECT_EQ(par.verdict, ser.verdict);
        }
    }
}

TEST(HermitianCheck, RejectsBadOptions) {
    HermitianCheckOptions opts;
    opts.grid = 1;
    EXPECT_THROW(hermitian_check(FloatMatrix::Identity(2, 2), PNorm::two(), opts), std::invalid_argument);
    opts.grid = 8;
    opts.tol_pass = 1e-3;
    opts.tol_fail = 1e-6;
    EXPECT_THROW(hermitian_check(FloatMatrix::Identity(2, 2), PNorm::two(), opts), std::invalid_argument);
    EXPECT_THROW(hermitian_check(FloatMatrix::Identity(2, 3), PNorm::two()), std::invalid_argument);
}

TEST(HermitianCheck, AgreesWithSelfAdjointnessAtP2) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const MatrixQ m = battery::gen_matrix({s, 2 + s % 4, std::nullopt, 3, battery::Kind::arbitrary, true});
        const MatrixQ sa = m + m.adjoint();
        EXPECT_EQ(hermitian_check(fm(sa), PNorm::two()).verdict, Verdict::hermitian);
        if (!m.is_self_adjoint()) EXPECT_EQ(hermitian_check(fm(m), PNorm::two()).verdict, Verdict::not_hermitian);
    }
}

TEST(BlockProjection, ClosedFormExponential) {
    const std::complex<double> i(0, 1);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
            const MatrixQ p1 = MatrixQ::direct_sum(MatrixQ::identity(k), MatrixQ::zeros(n - k, n - k));
            const FloatMatrix f1 = fm(p1);
            const FloatMatrix f2 = fm(MatrixQ::identity(n) - p1);
            for (double t : {-6.0, -1.0, 0.25, 3.0}) {
                EXPECT_LT((expm(i * t * f1) - (f2 + std::exp(i * t) * f1)).cwiseAbs().maxCoeff(), 1e-12);
            }
            for (const PNorm& p : {PNorm::one(), PNorm::two(), PNorm::inf()}) {
                EXPECT_TRUE(is_hermitian_idempotent(p1, p).holds());
            }
        }
    }
}

TEST(HermitianIdempotent, Examples) {
    for (const PNorm& p : {PNorm::one(), PNorm::two(), PNorm::inf()}) {
        EXPECT_TRUE(is_hermitian_idempotent(MatrixQ::diagonal({1, 0}), p).holds());
    }
    const auto oblique = is_hermitian_idempotent(mat({{"1", "1"}, {"0", "0"}}), PNorm::two());
    EXPECT_TRUE(oblique.idempotent);
    EXPECT_FALSE(oblique.holds());
    EXPECT_EQ(oblique.self_adjoint, std::optional<bool>(false));
    EXPECT_TRUE(oblique.cross_check_agrees);
    EXPECT_FALSE(is_hermitian_idempotent(mat({{"2", "0"}, {"0", "0"}}), PNorm::one()).holds());
}
