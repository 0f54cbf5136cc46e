#include <zzc/optimizer.hpp>
#include <zzc/published_tables.hpp>
#include <zzc/reproduce.hpp>
#include <zzc/serialize.hpp>

#include <gtest/gtest.h>

using zzc::real;

namespace {

class OptimizerTest : public ::testing::Test {
protected:
    zzc::working_precision scope{50};
};

} // namespace

TEST_F(OptimizerTest, CollapsedBoundsGiveOnePoint)
{
    const auto p = zzc::preset_point(zzc::published::row(2));
    const zzc::search_bounds b{{p.c, p.c}, {p.r, p.r}, {p.eta, p.eta}};
    const auto seeds = zzc::grid_seed(b, {4, 4, 4}, p);
    ASSERT_EQ(seeds.size(), 1u);
    EXPECT_EQ(seeds.front(), p);
}

TEST_F(OptimizerTest, LatticeAroundPresetHasFeasiblePoints)
{
    const auto p = zzc::preset_point(zzc::published::row(3));
    const zzc::search_bounds b{{p.c - real("0.02"), p.c + real("0.02")},
                               {p.r - real("0.05"), p.r + real("0.05")},
                               {p.eta / 2, p.eta * 2}};
    const auto seeds = zzc::grid_seed(b, {10, 10, 10}, p);
    EXPECT_GE(seeds.size(), 1u);
    EXPECT_LE(seeds.size(), 1000u);
    for (const auto& s : seeds)
        EXPECT_TRUE(zzc::validate(s).empty());
}

TEST_F(OptimizerTest, NoFeasiblePointIsAnError)
{
    const zzc::search_bounds b{{real("0.5"), real("0.99")}, {real(1), real(2)}, {real("0.01"), real("0.1")}};
    EXPECT_THROW(zzc::grid_seed(b, {3, 3, 3}), zzc::search_error);
    EXPECT_THROW(zzc::grid_seed(b, {0, 3, 3}), zzc::domain_error);
}

TEST_F(OptimizerTest, ObjectiveValidation)
{
    zzc::objective bad;
    bad.mode = zzc::objective_mode::min_c2_given_c1_cap;
    EXPECT_THROW(bad.check(), zzc::domain_error);
    EXPECT_THROW(zzc::objective::weighted(real(0), real(0), real(0)).check(), zzc::domain_error);
    EXPECT_THROW(zzc::objective::weighted(real(-1), real(1), real(0)).check(), zzc::domain_error);
    const auto cap = zzc::objective::min_c2(real("0.245"));
    EXPECT_FALSE(cap.score({real("0.25"), real(1), real(1)}).has_value());
    EXPECT_EQ(*cap.score({real("0.24"), real(7), real(1)}), 7);
}

TEST_F(OptimizerTest, ZeroBudgetReturnsStart)
{
    const auto p = zzc::preset_point(zzc::published::row(2));
    const auto rep = zzc::refine(p, zzc::objective::min_c1(), 0);
    EXPECT_EQ(rep.best, p);
    EXPECT_EQ(rep.evaluations, 1);
    ASSERT_EQ(rep.trace.size(), 1u);
    EXPECT_EQ(rep.best_constants, zzc::compute_constants(p).triple);
}

TEST_F(OptimizerTest, CappedRefinementDoesNotRegress)
{
    const auto p = zzc::preset_point(zzc::published::row(2));
    const real cap("0.245");
    const auto rep = zzc::refine(p, zzc::objective::min_c2(cap), 20);
    EXPECT_LE(rep.best_constants.c1, cap);
    EXPECT_LE(rep.best_constants.c2, zzc::parse_real(zzc::published::row(2).c2_t1) + real("1e-5"));
    EXPECT_LE(rep.evaluations, 21);
    for (std::size_t i = 1; i < rep.trace.size(); ++i)
        EXPECT_LT(rep.trace[i].constants.c2, rep.trace[i - 1].constants.c2);
}

TEST_F(OptimizerTest, RefinementIsDeterministic)
{
    const auto p = zzc::preset_point(zzc::published::row(4));
    const auto obj = zzc::objective::weighted(real(10), real(1), real(1));
    const auto a = zzc::refine(p, obj, 12);
    const auto b = zzc::refine(p, obj, 12);
    EXPECT_EQ(a, b);
    EXPECT_EQ(zzc::json(a).dump(), zzc::json(b).dump());
}

TEST_F(OptimizerTest, MinC1PrefersSmallEta)
{
    zzc::search_point base;
    const zzc::search_bounds b{{real("1.0001"), real("1.05")}, {real("1.05"), real("1.3")}, {real("1e-5"), real("0.02")}};
    const auto seeds = zzc::grid_seed(b, {3, 3, 3}, base);
    const auto best = zzc::best_seed(seeds, zzc::objective::min_c1());
    for (const auto& s : seeds)
        EXPECT_LE(best.score, zzc::compute_constants(s).triple.c1);
    EXPECT_LT(best.constants.c1, real("0.24"));
    EXPECT_LT(best.point.c, real("1.03"));
}

TEST_F(OptimizerTest, InfeasibleStartIsRejected)
{
    auto p = zzc::preset_point(zzc::published::row(2));
    p.eta = real("0.7");
    EXPECT_THROW(zzc::refine(p, zzc::objective::min_c1(), 5), zzc::constraint_error);
    const auto q = zzc::preset_point(zzc::published::row(5));
    EXPECT_THROW(zzc::refine(q, zzc::objective::min_c2(real("0.25")), 5), zzc::search_error);
}
