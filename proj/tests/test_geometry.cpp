#include <zzc/geometry.hpp>
#include <zzc/precision.hpp>

#include <gtest/gtest.h>

#include <cmath>

using zzc::real;

namespace {
const zzc::circle_params<double> unit_disc{2.0, 1.0};
constexpr double pi_d = 3.14159265358979323846;
} // namespace

TEST(ThetaY, Branches)
{
    EXPECT_EQ(zzc::theta_y(unit_disc.c + unit_disc.r + 1, unit_disc), 0.0);
    EXPECT_DOUBLE_EQ(zzc::theta_y(unit_disc.c - unit_disc.r - 1, unit_disc), pi_d);
    EXPECT_DOUBLE_EQ(zzc::theta_y(unit_disc.c, unit_disc), pi_d / 2);
    EXPECT_DOUBLE_EQ(zzc::theta_y(2.5, unit_disc), std::acos(0.5));
}

TEST(ThetaY, GridOrderingForAdmissibleDisc)
{
    zzc::working_precision p(50);
    const zzc::circle_params<real> circ{real("1.042877508"), real("1.259860485")};
    const auto g = zzc::make_theta_grid(circ, real("0.01737451737"));
    EXPECT_LE(g.theta_1_plus_eta, g.theta_minus_eta);
    EXPECT_LE(g.theta_minus_eta, g.theta_1_minus_c);
    EXPECT_LE(g.theta_1_minus_c, g.theta_minus_half);
    EXPECT_LE(g.theta_minus_half, zzc::pi());
}

TEST(SigmaOfTheta, Endpoints)
{
    EXPECT_DOUBLE_EQ(zzc::sigma_of_theta(0.0, unit_disc), 3.0);
    EXPECT_DOUBLE_EQ(zzc::sigma_of_theta(pi_d, unit_disc), 1.0);
    EXPECT_NEAR(zzc::sigma_of_theta(pi_d / 2, unit_disc), 2.0, 1e-15);
}

TEST(LStar, HandValues)
{
    EXPECT_NEAR(zzc::l_star(-1, 0.0, unit_disc), -4 + 56.0 / 19, 1e-14);
    EXPECT_NEAR(zzc::l_star(1, pi_d / 2, zzc::circle_params<double>{1.0, 1.0}), -2 + 35.0 / 19, 1e-14);
    for (int j : {-1, 0, 1}) {
        const double a = j + unit_disc.c - unit_disc.r;
        EXPECT_NEAR(zzc::l_star(j, pi_d, unit_disc), -4 + 7.0 / 19 * (a * a + 4), 1e-13) << j;
    }
}

TEST(LStar, RejectsOtherIndices)
{
    EXPECT_THROW(zzc::l_star(2, 0.0, unit_disc), zzc::domain_error);
    EXPECT_THROW(zzc::l_kernel(-2, 0.0, unit_disc, 1.0), zzc::domain_error);
}

TEST(LKernel, HandValueAndEvenness)
{
    const zzc::circle_params<double> circ{1.0, 1.0};
    EXPECT_NEAR(zzc::l_kernel(-1, 0.0, circ, 2.0), std::log(5.0 / 16), 1e-14);
    EXPECT_NEAR(std::log(5.0 / 16), -1.1632, 1e-4);
    for (double t : {0.3, 1.1, 2.9})
        for (int j : {-1, 0, 1})
            EXPECT_DOUBLE_EQ(zzc::l_kernel(j, t, circ, 3.0), zzc::l_kernel(j, -t, circ, 3.0));
}

TEST(LKernel, DominatedByScaledLStar)
{
    zzc::working_precision p(30);
    const zzc::circle_params<real> circ{real("1.079779637"), real("1.410370323")};
    for (const real& height : {real(5) / 7, real(1), real(3), real(10), real(100)}) {
        for (int i = 0; i <= 60; ++i) {
            const real theta = zzc::pi() * i / 60;
            for (int j : {-1, 1})
                EXPECT_LE(zzc::l_kernel(j, theta, circ, height), zzc::l_star(j, theta, circ) / (height + 2))
                    << "T=" << height << " i=" << i << " j=" << j;
        }
    }
}
