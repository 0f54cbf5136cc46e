#pragma once

// Riemann zeta on the real half-line sigma > 1 by Euler-Maclaurin summation
// with an explicit remainder bound.

#include "precision.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace zzc {

namespace detail {

using rational = boost::multiprecision::mpq_rational;

/// B_{2k}/(2k)! for k = 0..count-1, exact.
inline const std::vector<rational>& bernoulli_over_factorial()
{
    static const std::vector<rational> table = [] {
        constexpr int max_index = 2 * 72;
        std::vector<rational> b(max_index + 1);
        // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
        b[0] = 1;
        for (int m = 1; m <= max_index; ++m) {
            rational acc = 0;
            rational binom = 1; // C(m+1, 0)
            for (int k = 0; k < m; ++k) {
                acc += binom * b[k];
                binom = binom * (m + 1 - k) / (k + 1);
            }
            b[m] = -acc / (m + 1);
        }
        std::vector<rational> out;
        rational fact = 1;
        for (int k = 0; 2 * k <= max_index; ++k) {
            if (k > 0)
                fact *= rational((2 * k - 1) * (2 * k));
            out.push_back(b[2 * k] / fact);
        }
        return out;
    }();
    return table;
}

inline real to_real(const rational& q)
{
    return real(boost::multiprecision::numerator(q)) / real(boost::multiprecision::denominator(q));
}

struct euler_maclaurin_plan {
    unsigned cutoff;     // N
    unsigned corrections; // M
};

/// Remainder bound after M correction terms at cutoff N for real s > 1:
/// |s(s+1)...(s+2M+1)| |B_{2M+2}| N^{-s-2M-1} / ((2M+2)! (s+2M+1)).
inline real em_remainder_bound(const real& s, unsigned n, unsigned m)
{
    const auto& coeffs = bernoulli_over_factorial();
    real rising = 1;
    for (unsigned i = 0; i <= 2 * m + 1; ++i)
        rising *= s + i;
    const real b = abs(to_real(coeffs[m + 1]));
    return rising * b * pow(real(n), -s - 2 * m - 1) / (s + 2 * m + 1);
}

inline euler_maclaurin_plan plan_euler_maclaurin(const real& s, const real& target)
{
    const unsigned max_m = static_cast<unsigned>(bernoulli_over_factorial().size()) - 2;
    for (unsigned n = 8; n <= (1u << 22); n *= 2) {
        real previous = -1;
        for (unsigned m = 1; m <= max_m; ++m) {
            const real bound = em_remainder_bound(s, n, m);
            if (bound < target)
                return {n, m};
            // The asymptotic series has started to diverge for this cutoff.
            if (previous > 0 && bound > previous)
                break;
            previous = bound;
        }
    }
    throw precision_error("Euler-Maclaurin plan: no (N, M) reaches the requested tolerance");
}

inline void require_above_one(const real& sigma, const char* what)
{
    if (!(sigma > 1))
        throw domain_error(std::string(what) + ": argument must exceed 1, got " + to_decimal(sigma));
}

} // namespace detail

/// zeta(sigma) for real sigma > 1 with absolute error at most prec.abs_tol.
inline real zeta_real(const real& sigma, const precision_config& prec = {})
{
    detail::require_above_one(sigma, "zeta_real");
    prec.check();

    // Magnitude is at most 1/(sigma-1) + 1; rounding grows with the number of terms.
    const real magnitude = 1 / (sigma - 1) + 1;
    const real eps = pow(real(10), -static_cast<int>(current_digits()) + 2);
    const detail::euler_maclaurin_plan plan = detail::plan_euler_maclaurin(sigma, prec.abs_tol / 2);
    const real rounding = eps * magnitude * (plan.cutoff + 2 * plan.corrections + 8);
    if (rounding > prec.abs_tol / 2)
        throw precision_error("zeta_real: tolerance " + to_decimal(prec.abs_tol) + " unattainable at " +
                              std::to_string(current_digits()) + " digits");

    const unsigned n = plan.cutoff;
    real sum = 0;
    for (unsigned k = n - 1; k >= 1; --k) // smallest terms first
        sum += pow(real(k), -sigma);

    const real big_n = n;
    const real n_pow = pow(big_n, -sigma);
    sum += big_n * n_pow / (sigma - 1) + n_pow / 2;

    const auto& coeffs = detail::bernoulli_over_factorial();
    real rising = sigma;            // s(s+1)...(s+2k-2)
    real power = n_pow / big_n;     // N^{-s-2k+1}
    const real inv_n2 = 1 / (big_n * big_n);
    for (unsigned k = 1; k <= plan.corrections; ++k) {
        sum += detail::to_real(coeffs[k]) * rising * power;
        rising *= (sigma + 2 * k - 1) * (sigma + 2 * k);
        power *= inv_n2;
    }
    return sum;
}

inline real log_zeta_real(const real& sigma, const precision_config& prec = {})
{
    detail::require_above_one(sigma, "log_zeta_real");
    return log(zeta_real(sigma, prec));
}

/// log zeta(c) - log zeta(2c), nonnegative since zeta decreases on (1, inf).
inline real log_zeta_ratio(const real& c, const precision_config& prec = {})
{
    detail::require_above_one(c, "log_zeta_ratio");
    return log_zeta_real(c, prec) - log_zeta_real(2 * c, prec);
}

} // namespace zzc
