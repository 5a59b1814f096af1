#include <gtest/gtest.h>

#include "epkit/battery.hpp"
#include "epkit/pinv.hpp"
#include "support.hpp"

using namespace epkit;
using namespace epkit::battery;
using testing_support::mat;

TEST(Generator, Deterministic) {
    const GeneratorConfig cfg{99, 4, 2, 3, Kind::arbitrary, true};
    EXPECT_EQ(gen_matrix(cfg), gen_matrix(cfg));
    GeneratorConfig other = cfg;
    other.seed = 100;
    EXPECT_NE(gen_matrix(cfg), gen_matrix(other));
}

TEST(Generator, KindsAndRanks) {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const std::size_t n = 2 + s % 5;
        const bool gaussian = s % 2 == 1;
        const MatrixQ ep = gen_matrix({s, n, std::nullopt, 3, Kind::ep, gaussian});
        EXPECT_TRUE(is_ep(ep));
        const MatrixQ non = gen_matrix({s, n, std::nullopt, 3, Kind::non_ep, gaussian});
        EXPECT_FALSE(is_ep(non));
        EXPECT_TRUE(is_invertible(gen_matrix({s, n, std::nullopt, 3, Kind::invertible, gaussian})));
        const std::size_t r = s % (n + 1);
        EXPECT_EQ(rank(gen_matrix({s, n, r, 3, Kind::arbitrary, gaussian})), r);
        EXPECT_EQ(rank(gen_matrix({s, n, r, 3, Kind::ep, gaussian})), r);
    }
}

TEST(Generator, EdgeRanks) {
    EXPECT_EQ(gen_matrix({1, 2, 1, 3, Kind::ep, false}).rows(), 2U);
    EXPECT_TRUE(is_ep(gen_matrix({1, 2, 1, 3, Kind::ep, false})));
    EXPECT_TRUE(is_invertible(gen_matrix({1, 3, 3, 3, Kind::ep, false})));
    EXPECT_TRUE(gen_matrix({1, 3, 0, 3, Kind::ep, false}).is_zero());
}

TEST(Generator, InfeasibleConfigsThrow) {
    EXPECT_THROW(gen_matrix({1, 2, 3, 3, Kind::arbitrary, false}), GeneratorError);
    EXPECT_THROW(gen_matrix({1, 3, 3, 3, Kind::non_ep, false}), GeneratorError);
    EXPECT_THROW(gen_matrix({1, 3, 0, 3, Kind::non_ep, false}), GeneratorError);
    EXPECT_THROW(gen_matrix({1, 1, std::nullopt, 3, Kind::non_ep, false}), GeneratorError);
    EXPECT_THROW(gen_matrix({1, 3, 2, 3, Kind::invertible, false}), GeneratorError);
    EXPECT_THROW(gen_matrix({1, 3, 1, 0, Kind::arbitrary, false}), GeneratorError);
}

TEST(Generator, SignedPermutation) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const MatrixQ j = gen_signed_permutation(s, 4);
        EXPECT_EQ(j * j.adjoint(), MatrixQ::identity(4));
        for (const auto& e : j.entries()) EXPECT_TRUE(e.is_zero() || e == GaussianRational(1) || e == GaussianRational(-1));
    }
}

TEST(MakeInstance, Examples) {
    auto inst = make_instance(mat({{"1", "1"}, {"0", "0"}}));
    EXPECT_EQ(inst.b, mat({{"1"}, {"0"}}));
    EXPECT_EQ(inst.c, mat({{"1", "1"}}));
    EXPECT_EQ(inst.b_dagger, mat({{"1", "0"}}));
    EXPECT_EQ(inst.c_dagger, mat({{"1/2"}, {"1/2"}}));
    EXPECT_EQ(inst.a_dagger, inst.c_dagger * inst.b_dagger);

    inst = make_instance(MatrixQ::identity(3));
    EXPECT_EQ(inst.b, MatrixQ::identity(3));
    EXPECT_EQ(inst.c, MatrixQ::identity(3));

    inst = make_instance(MatrixQ::zeros(2, 2));
    EXPECT_EQ(inst.b.cols(), 0U);
    EXPECT_EQ(inst.a_dagger, MatrixQ::zeros(2, 2));
    EXPECT_THROW(make_instance(MatrixQ::zeros(2, 3)), ShapeError);
}

TEST(MakeInstance, FactorIdentitiesOnRandomMatrices) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto inst = make_instance(gen_matrix({s, 1 + s % 6, std::nullopt, 3, Kind::arbitrary, s % 2 == 0}));
        EXPECT_EQ(inst.b_dagger, inst.c * inst.a_dagger);
        EXPECT_EQ(inst.c_dagger, inst.a_dagger * inst.b);
    }
}

TEST(MixedConfigs, Shape) {
    const auto cfgs = mixed_configs(5, 8, {2, 3});
    ASSERT_EQ(cfgs.size(), 8U);
    EXPECT_EQ(cfgs[0].kind, Kind::ep);
    EXPECT_EQ(cfgs[1].kind, Kind::non_ep);
    EXPECT_EQ(cfgs[1].n, 3U);
    EXPECT_FALSE(cfgs[0].gaussian);
    EXPECT_TRUE(cfgs[2].gaussian);
    EXPECT_NE(cfgs[0].seed, cfgs[2].seed);
    EXPECT_TRUE(mixed_configs(5, 0, {}).empty());
}

TEST(RunBattery, EmptyAndUnknown) {
    const auto rep = run_battery("3.2", {}, 1);
    EXPECT_EQ(rep.trials, 0U);
    EXPECT_TRUE(rep.passed());
    EXPECT_THROW(run_battery("9.9", {}, 1), std::invalid_argument);
    EXPECT_FALSE(is_known_theorem("9.9"));
    EXPECT_EQ(theorem_ids().size(), 11U);
}

TEST(RunBattery, ParallelEqualsSerial) {
    for (const std::string id : {"3.7", "4.2", "5.5", "5.2"}) {
        const auto cfgs = mixed_configs(17, 12, {2, 3, 4});
        const auto par = to_json(run_battery(id, cfgs, 17), false);
        const auto ser = to_json(run_battery_serial(id, cfgs, 17), false);
        EXPECT_EQ(par.dump(), ser.dump()) << id;
        EXPECT_TRUE(par["passed"].get<bool>()) << par.dump(2);
    }
}

TEST(RunBattery, UniformTruthPerKind) {
    const auto cfgs = mixed_configs(3, 20, {2, 3, 4, 5});
    const auto rep = run_battery("3.7", cfgs, 3);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.all_true_instances, 10U);
    EXPECT_EQ(rep.all_false_instances, 10U);
    EXPECT_EQ(rep.statement_order.size(), 26U);
    EXPECT_EQ(rep.statement_order.front(), "3.7.i");
}

TEST(RunBattery, ReportJsonShape) {
    const auto rep = run_battery("3.2", mixed_configs(1, 4, {3}), 1);
    const auto j = to_json(rep, true);
    EXPECT_EQ(j["theorem_id"], "3.2");
    EXPECT_EQ(j["trials"], 4);
    EXPECT_TRUE(j.contains("elapsed_seconds"));
    EXPECT_FALSE(to_json(rep, false).contains("elapsed_seconds"));
    EXPECT_EQ(j["per_statement_truth_counts"]["3.2.i"]["yes"].get<int>() +
                  j["per_statement_truth_counts"]["3.2.i"]["no"].get<int>(),
              4);
}
