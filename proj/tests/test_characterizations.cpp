#include <gtest/gtest.h>

#include <algorithm>

#include "epkit/battery.hpp"
#include "epkit/characterizations.hpp"
#include "support.hpp"

using namespace epkit;
using namespace epkit::characterizations;
using testing_support::mat;

namespace {

const MatrixQ kNilpotent = mat({{"0", "1"}, {"0", "0"}});

bool all_truth(const Battery& b, Truth t) {
    return !b.empty() && std::all_of(b.begin(), b.end(), [t](const StatementResult& r) { return r.truth == t; });
}

const StatementResult& find(const Battery& b, const std::string& id) {
    for (const auto& r : b)
        if (r.statement_id == id) return r;
    throw std::out_of_range("no statement " + id);
}

const MatrixQ& witness(const StatementResult& r, const std::string& name) {
    for (const auto& w : r.witness)
        if (w.name == name) return w.value;
    throw std::out_of_range("no witness " + name + " in " + r.statement_id);
}

bool clean(const Battery& b) {
    return std::none_of(b.begin(), b.end(),
                        [](const StatementResult& r) { return r.witness_failed || r.routes_disagree; });
}

using InstanceBattery = Battery (*)(const EPInstance&);
using MatrixBattery = Battery (*)(const MatrixQ&);

}  // namespace

TEST(Batteries, StatementCounts) {
    const EPInstance inst = battery::make_instance(MatrixQ::diagonal({1, 0}));
    EXPECT_EQ(thm32_battery(inst).size(), 4U);
    EXPECT_EQ(thm34_battery(inst).size(), 6U);
    EXPECT_EQ(thm35_battery(inst).size(), 11U);
    EXPECT_EQ(thm37_battery(inst).size(), 26U);
    EXPECT_EQ(thm39_battery(inst).size(), 14U);
    EXPECT_EQ(thm310_battery(inst).size(), 7U);
    EXPECT_EQ(thm41_battery(inst.a).size(), 14U);
    EXPECT_EQ(thm42_battery(inst.a).size(), 17U);
    EXPECT_EQ(thm55_battery(inst.a).size(), 3U);
    EXPECT_EQ(thm56_battery(inst.a).size(), 5U);
}

TEST(Batteries, NilpotentAllFalse) {
    const EPInstance inst = battery::make_instance(kNilpotent);
    for (InstanceBattery f : {thm32_battery, thm34_battery, thm35_battery, thm37_battery, thm39_battery, thm310_battery}) {
        const Battery b = f(inst);
        EXPECT_TRUE(all_truth(b, Truth::no)) << b.front().theorem_id;
        EXPECT_TRUE(clean(b));
    }
    for (MatrixBattery f : {thm41_battery, thm42_battery, thm55_battery, thm56_battery}) {
        const Battery b = f(kNilpotent);
        EXPECT_TRUE(all_truth(b, Truth::no)) << b.front().theorem_id;
        EXPECT_TRUE(clean(b));
    }
}

TEST(Batteries, ProjectionAndInvertibleAllTrue) {
    const MatrixQ diag = MatrixQ::diagonal({1, 0});
    const MatrixQ inv = mat({{"1", "1"}, {"0", "1"}});
    const MatrixQ proj = mat({{"1/2", "1/2"}, {"1/2", "1/2"}});
    for (const MatrixQ& a : {diag, inv, proj, MatrixQ::zeros(2, 2)}) {
        const EPInstance inst = battery::make_instance(a);
        for (InstanceBattery f :
             {thm32_battery, thm34_battery, thm35_battery, thm37_battery, thm39_battery, thm310_battery}) {
            const Battery b = f(inst);
            EXPECT_TRUE(all_truth(b, Truth::yes)) << b.front().theorem_id << " on " << a;
            EXPECT_TRUE(clean(b));
        }
        for (MatrixBattery f : {thm41_battery, thm42_battery, thm55_battery, thm56_battery}) {
            const Battery b = f(a);
            EXPECT_TRUE(all_truth(b, Truth::yes)) << b.front().theorem_id << " on " << a;
            EXPECT_TRUE(clean(b));
        }
    }
}

TEST(Batteries, ObliqueIdempotentAllFalse) {
    const EPInstance inst = battery::make_instance(mat({{"1", "1"}, {"0", "0"}}));
    EXPECT_TRUE(all_truth(thm34_battery(inst), Truth::no));
    EXPECT_TRUE(all_truth(thm37_battery(inst), Truth::no));
}

TEST(Thm35, WitnessesOnEpInstance) {
    const EPInstance inst = battery::make_instance(MatrixQ::diagonal({2, 0}));
    const Battery b = thm35_battery(inst);
    const auto& r = find(b, "3.5.ii");
    ASSERT_EQ(r.route, Route::constructive);
    const MatrixQ& u = witness(r, "U");
    EXPECT_EQ(u, inst.c * inst.b);
    const MatrixQ z = inst.b_dagger * inst.c_dagger;
    EXPECT_EQ(u * z, inst.e_r);
    EXPECT_EQ(z * u, inst.e_r);
    EXPECT_EQ(inst.c, u * inst.b_dagger);
}

TEST(Thm35, NilpotentKernelCriterion) {
    const EPInstance inst = battery::make_instance(kNilpotent);
    EXPECT_FALSE(subspace_equal(kernel(inst.c), kernel(inst.b_dagger)));
    const Battery battery = thm35_battery(inst);
    const auto& r = find(battery, "3.5.iii");
    EXPECT_EQ(r.truth, Truth::no);
    EXPECT_EQ(r.route, Route::criterion);
}

TEST(Thm37, DiagonalWitness) {
    const EPInstance inst = battery::make_instance(MatrixQ::diagonal({2, 0}));
    const Battery b = thm37_battery(inst);
    EXPECT_TRUE(all_truth(b, Truth::yes));
    bool saw_x = false;
    for (const auto& r : b)
        for (const auto& w : r.witness)
            if (w.name == "x") {
                EXPECT_EQ(w.value, mat({{"2"}}));
                saw_x = true;
            }
    EXPECT_TRUE(saw_x);
}

TEST(Thm39, WitnessIdentity) {
    const EPInstance inst = battery::make_instance(mat({{"1", "1i"}, {"-1i", "1"}}));
    const Battery battery = thm39_battery(inst);
    const auto& r = find(battery, "3.9.ix");
    ASSERT_EQ(r.truth, Truth::yes);
    ASSERT_EQ(r.route, Route::constructive);
    ASSERT_EQ(r.witness.size(), 1U);
    EXPECT_TRUE(is_invertible(r.witness[0].value));
}

TEST(Thm39, NilpotentKernels) {
    const EPInstance inst = battery::make_instance(kNilpotent);
    EXPECT_FALSE(subspace_equal(kernel(inst.b.adjoint()), kernel(inst.c)));
    EXPECT_EQ(find(thm39_battery(inst), "3.9.iii").truth, Truth::no);
}

TEST(Thm41, DiagonalWitness) {
    const Battery battery = thm41_battery(MatrixQ::diagonal({2, 0}));
    const auto& r = find(battery, "4.1.ii");
    ASSERT_EQ(r.route, Route::constructive);
    const MatrixQ& s = witness(r, "s");
    EXPECT_EQ(s, mat({{"1/4", "0"}, {"0", "1"}}));
    EXPECT_EQ(s * MatrixQ::diagonal({2, 0}), mat({{"1/2", "0"}, {"0", "0"}}));
}

TEST(Thm41, InvertibleWitness) {
    const MatrixQ a = mat({{"1", "1"}, {"0", "1"}});
    const Battery battery = thm41_battery(a);
    const auto& r = find(battery, "4.1.ii");
    EXPECT_EQ(witness(r, "s"), inverse(a) * inverse(a));
    EXPECT_THROW(thm41_battery(MatrixQ::zeros(2, 3)), ShapeError);
}

TEST(Thm42, H1Witness) {
    auto r = find(thm42_battery(MatrixQ::diagonal({2, 0})), "4.2.xv");
    EXPECT_EQ(witness(r, "h1"), MatrixQ::identity(2));

    const MatrixQ a = mat({{"1", "1"}, {"0", "1"}});
    r = find(thm42_battery(a), "4.2.xv");
    const MatrixQ& h1 = witness(r, "h1");
    EXPECT_EQ(h1, mat({{"0", "-1"}, {"1", "1"}}));
    EXPECT_EQ(a * h1, a.adjoint());

    EXPECT_EQ(find(thm42_battery(kNilpotent), "4.2.ii").truth, Truth::no);
    EXPECT_THROW(thm42_battery(MatrixQ::zeros(3, 2)), ShapeError);
}

TEST(Thm53, Decomposition) {
    auto d = thm53_decompose(MatrixQ::diagonal({3, 0}));
    ASSERT_TRUE(d);
    EXPECT_EQ(d->t1, mat({{"3"}}));
    EXPECT_EQ(d->j, MatrixQ::identity(2));
    EXPECT_EQ(d->q1, MatrixQ::diagonal({1, 0}));

    EXPECT_FALSE(thm53_decompose(kNilpotent));

    const MatrixQ t = battery::gen_matrix({7, 3, 2, 3, battery::Kind::ep, false});
    d = thm53_decompose(t);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->j * MatrixQ::direct_sum(d->t1, MatrixQ::zeros(1, 1)) * d->j_inv, t);
    EXPECT_EQ(d->q1 * d->q1, d->q1);
    EXPECT_TRUE(d->q1.is_self_adjoint());
}

TEST(Thm55, Examples) {
    const MatrixQ t = battery::gen_matrix({11, 4, 2, 3, battery::Kind::ep, true});
    const Battery ep = thm55_battery(t);
    EXPECT_TRUE(all_truth(ep, Truth::yes));
    const auto& ii = find(ep, "5.5.ii");
    EXPECT_EQ(ii.route, Route::constructive);
    EXPECT_EQ(witness(ii, "S1"), witness(ii, "S2"));

    const Battery nil = thm55_battery(kNilpotent);
    EXPECT_EQ(find(nil, "5.5.ii").truth, Truth::no);
    EXPECT_EQ(find(nil, "5.5.iii").truth, Truth::no);
    EXPECT_TRUE(all_truth(thm55_battery(MatrixQ::zeros(3, 3)), Truth::yes));
}

TEST(Thm56, Examples) {
    const MatrixQ a = battery::gen_matrix({5, 3, 2, 3, battery::Kind::ep, false});
    const Battery battery = thm56_battery(a);
    const auto& r = find(battery, "5.6.ii");
    ASSERT_EQ(r.route, Route::constructive);
    EXPECT_EQ(witness(r, "b1"), MatrixQ::identity(3));
    EXPECT_TRUE(subspace_equal(kernel(witness(r, "c1")), kernel(witness(r, "d1"))));
    EXPECT_TRUE(all_truth(thm56_battery(kNilpotent), Truth::no));
    EXPECT_TRUE(all_truth(thm56_battery(mat({{"2", "1"}, {"1", "1"}})), Truth::yes));
}

TEST(Prop52, IdentityJAtP1) {
    const auto rep = prop52_battery(mat({{"2"}}), MatrixQ::identity(2), banach::PNorm::one());
    EXPECT_TRUE(rep.j_is_isometry);
    EXPECT_TRUE(all_truth(rep.statements, Truth::yes));
    EXPECT_EQ(rep.q1, MatrixQ::diagonal({1, 0}));
}

TEST(Prop52, ShearAtP2) {
    const auto rep = prop52_battery(mat({{"1"}}), mat({{"1", "1"}, {"0", "1"}}), banach::PNorm::two());
    EXPECT_FALSE(rep.j_is_isometry);
    EXPECT_EQ(rep.q1, mat({{"1", "-1"}, {"0", "0"}}));
    EXPECT_TRUE(all_truth(rep.statements, Truth::no));
}

TEST(Prop52, SignedPermutationsAtP1AndInf) {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const MatrixQ j = battery::gen_signed_permutation(s, 3);
        const MatrixQ t1 = battery::gen_matrix({s, 2, 2, 3, battery::Kind::invertible, true});
        for (const auto& p : {banach::PNorm::one(), banach::PNorm::inf()}) {
            const auto rep = prop52_battery(t1, j, p);
            EXPECT_TRUE(rep.j_is_isometry);
            EXPECT_TRUE(all_truth(rep.statements, Truth::yes));
        }
    }
}

TEST(Prop52, UnitaryAtP2) {
    // Rational rotation with the 3-4-5 triple.
    const MatrixQ j = mat({{"3/5", "-4/5"}, {"4/5", "3/5"}});
    EXPECT_TRUE(is_isometry(j, banach::PNorm::two()));
    EXPECT_FALSE(is_isometry(j, banach::PNorm::one()));
    const auto rep = prop52_battery(mat({{"5"}}), j, banach::PNorm::two());
    EXPECT_TRUE(all_truth(rep.statements, Truth::yes));
}

TEST(Prop52, SingularInputsThrow) {
    EXPECT_THROW(prop52_battery(mat({{"0"}}), MatrixQ::identity(2), banach::PNorm::one()), ArithmeticError);
    EXPECT_THROW(prop52_battery(mat({{"1"}}), MatrixQ::zeros(2, 2), banach::PNorm::one()), ArithmeticError);
}
