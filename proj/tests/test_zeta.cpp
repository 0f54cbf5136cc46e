#include <zzc/zeta.hpp>
#include <zzc/quadrature.hpp>

#include <gtest/gtest.h>

#include <boost/math/constants/constants.hpp>

using zzc::real;

namespace {

struct bracket {
    real lo;
    real hi;
};

// Partial sum with the integral-test tail on either side:
//   S_N + (N+1)^{1-s}/(s-1) <= zeta(s) <= S_N + N^{1-s}/(s-1).
bracket partial_sum_bracket(const real& s, int n)
{
    real sum = 0;
    for (int k = n; k >= 1; --k)
        sum += pow(real(k), -s);
    return {sum + pow(real(n + 1), 1 - s) / (s - 1), sum + pow(real(n), 1 - s) / (s - 1)};
}

real stieltjes_laurent(const real& e)
{
    const real g0 = boost::math::constants::euler<real>();
    const real g1("-0.07281584548367672486058637587490131913773633833");
    return 1 / e + g0 - g1 * e;
}

class ZetaTest : public ::testing::Test {
protected:
    zzc::working_precision scope{50};
};

} // namespace

TEST_F(ZetaTest, BaselAndPiToTheFourth)
{
    const zzc::precision_config tight{50, real("1e-40")};
    const real p = zzc::pi();
    EXPECT_LE(abs(zzc::zeta_real(real(2), tight) - p * p / 6), real("1e-30"));
    EXPECT_LE(abs(zzc::zeta_real(real(4), tight) - p * p * p * p / 90), real("1e-30"));
}

TEST_F(ZetaTest, InsidePartialSumBracket)
{
    for (const char* s : {"1.5", "2.5", "3", "10"}) {
        const real sigma(s);
        const bracket b = partial_sum_bracket(sigma, 2000);
        const real z = zzc::zeta_real(sigma);
        EXPECT_GE(z, b.lo - real("1e-20")) << s;
        EXPECT_LE(z, b.hi + real("1e-20")) << s;
    }
}

TEST_F(ZetaTest, NearThePoleMatchesLaurent)
{
    for (const char* e : {"1e-3", "1e-6"}) {
        const real eps(e);
        const real want = stieltjes_laurent(eps);
        EXPECT_LE(abs(zzc::zeta_real(1 + eps) - want), real("1e-8") * want) << e;
    }
    // 1/eps + gamma, to the leading orders
    EXPECT_NEAR(zzc::zeta_real(real("1.000001")).convert_to<double>(), 1000000.5772, 1e-4);
}

TEST_F(ZetaTest, LogZetaSpotValues)
{
    const real p = zzc::pi();
    EXPECT_LE(abs(zzc::log_zeta_real(real(2)) - log(p * p / 6)), real("1e-18"));
    EXPECT_NEAR(zzc::log_zeta_real(real("1.0000042826451")).convert_to<double>(), 12.36, 0.01);

    const bracket b = partial_sum_bracket(real(10), 50);
    const real lz = zzc::log_zeta_real(real(10));
    EXPECT_GE(lz, log(b.lo) - real("1e-20"));
    EXPECT_LE(lz, log(b.hi) + real("1e-20"));
    EXPECT_NEAR(lz.convert_to<double>(), 9.9408e-4, 1e-8);
}

TEST_F(ZetaTest, StrictlyDecreasing)
{
    real previous = zzc::zeta_real(real("1.01"));
    for (int i = 2; i <= 40; ++i) {
        const real next = zzc::zeta_real(1 + real(i) / 100 * i);
        EXPECT_LT(next, previous);
        previous = next;
    }
}

TEST_F(ZetaTest, LogRatioClosedForm)
{
    const real p = zzc::pi();
    const real want = log(p * p / 6) - log(p * p * p * p / 90);
    EXPECT_LE(abs(zzc::log_zeta_ratio(real(2)) - want), real("1e-18"));
    EXPECT_NEAR(want.convert_to<double>(), 0.41859, 1e-5);
    for (const char* c : {"1.001", "1.3", "2", "7"})
        EXPECT_GE(zzc::log_zeta_ratio(real(c)), 0) << c;
}

TEST_F(ZetaTest, LogRatioAgreesWithIntegratedLogDerivative)
{
    // log zeta(c) - log zeta(2c) = int_c^{2c} -zeta'/zeta, with zeta'/zeta
    // from central differences of log zeta.
    const real c("1.0428775");
    const real h("1e-15");
    auto minus_log_derivative = [&](const real& s) {
        return -(zzc::log_zeta_real(s + h) - zzc::log_zeta_real(s - h)) / (2 * h);
    };
    const real integral = zzc::quad_adaptive(minus_log_derivative, c, 2 * c, real("1e-12"));
    EXPECT_LE(abs(integral - zzc::log_zeta_ratio(c)), real("1e-10"));
}

TEST_F(ZetaTest, RejectsArgumentsAtOrBelowOne)
{
    EXPECT_THROW(zzc::zeta_real(real(1)), zzc::domain_error);
    EXPECT_THROW(zzc::zeta_real(real("0.5")), zzc::domain_error);
    EXPECT_THROW(zzc::log_zeta_ratio(real("0.9")), zzc::domain_error);
}

TEST_F(ZetaTest, UnreachableToleranceIsReported)
{
    const zzc::precision_config absurd{50, real("1e-200")};
    EXPECT_THROW(zzc::zeta_real(real(3), absurd), zzc::precision_error);
}

TEST(Precision, ScopeRestoresDigits)
{
    const unsigned before = zzc::current_digits();
    {
        zzc::working_precision p(80);
        EXPECT_EQ(zzc::current_digits(), 80u);
    }
    EXPECT_EQ(zzc::current_digits(), before);
}

TEST(Precision, DecimalIngestion)
{
    zzc::working_precision p(50);
    const real eta = zzc::parse_real("4.2826451e-6");
    EXPECT_EQ(eta, real("4.2826451e-6"));
    EXPECT_NE(eta, real(4.2826451e-6)); // a double literal is not the decimal
    EXPECT_THROW(zzc::parse_real("nan"), zzc::parse_error);
    EXPECT_THROW(zzc::parse_real("0x10"), zzc::parse_error);
    EXPECT_THROW(zzc::parse_real(""), zzc::parse_error);
    EXPECT_EQ(zzc::parse_real(zzc::to_decimal(zzc::pi())), zzc::pi());
}
