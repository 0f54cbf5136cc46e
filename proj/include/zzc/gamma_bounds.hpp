#pragma once

// Closed-form majorants for the gamma-factor contribution to the zero count.

#include "precision.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace zzc {

/// Real and complex places of a number field; n_K = r1 + 2 r2.
struct signature_split {
    int r1 = 1;
    int r2 = 0;

    int degree() const { return r1 + 2 * r2; }

    static signature_split make(int n_k, int r1, int r2)
    {
        if (n_k < 1 || r1 < 0 || r2 < 0 || r1 + 2 * r2 != n_k)
            throw domain_error("signature split must satisfy n_K = r1 + 2 r2 with n_K >= 1");
        return {r1, r2};
    }
};

namespace detail {

template <class T>
void require_height(const T& height, const char* what)
{
    if (!(7 * height >= 5))
        throw domain_error(std::string(what) + ": T must be at least 5/7");
}

template <class T>
void require_gamma_offset(const T& d, const char* what)
{
    if (!(d >= 0) || !(2 * d < 9))
        throw domain_error(std::string(what) + ": d must lie in [0, 9/2)");
}

} // namespace detail

/// |g_K(T)| <= 2 n_K / (50 T) - r2 / (50 T), valid for T >= 5/7.
template <class T>
T g_k_bound(const signature_split& split, const T& height)
{
    detail::require_height(height, "g_k_bound");
    return T(2 * split.degree() - split.r2) / (50 * height);
}

/// E_a(T, d) for a in {0, 1}, 0 <= d < 9/2, T >= 5/7.
template <class T>
T e_a(int a, const T& height, const T& d)
{
    using std::atan;
    using std::log;
    using std::sqrt;
    if (a != 0 && a != 1)
        throw domain_error("e_a: a must be 0 or 1");
    detail::require_height(height, "e_a");
    detail::require_gamma_offset(d, "e_a");

    const T four_t2 = 4 * height * height;
    const T two_t = 2 * height;
    const T plus = T(2 * a + 17) + 2 * d;  // 2a + 2d + 17
    const T minus = T(2 * a + 17) - 2 * d; // 2a - 2d + 17
    const T centre = T(2 * a + 17);

    const T q_plus = plus * plus + four_t2;
    const T q_minus = minus * minus + four_t2;
    const T q_centre = centre * centre + four_t2;

    T rational = (two_t / 3) / q_plus + (two_t / 3) / q_minus - (2 * two_t / 3) / q_centre;

    T logs = height / 2 * log(1 + centre * centre / four_t2) - height / 4 * log(1 + plus * plus / four_t2) -
             height / 4 * log(1 + minus * minus / four_t2);

    const T k = (8 + 6 * boost::math::constants::pi<T>()) / 45;
    T cubes = k / (q_plus * sqrt(q_plus)) + k / (q_minus * sqrt(q_minus)) + 2 * k / (q_centre * sqrt(q_centre));

    T arctans = 0;
    for (int i = 0; i <= 3; ++i) {
        const T base = T(2 * a + 1 + 4 * i);
        arctans += 2 * atan(base / two_t) - atan((base + 2 * d) / two_t) - atan((base - 2 * d) / two_t);
    }

    T weighted = (T(2 * a + 15) + 2 * d) / 4 * atan(plus / two_t) +
                 (T(2 * a + 15) - 2 * d) / 4 * atan(minus / two_t) - T(2 * a + 15) / 2 * atan(centre / two_t);

    return rational + logs + cubes + arctans + weighted;
}

/// E_K(T, d) = (r1 + r2) E_0(T, d) + r2 E_1(T, d).
template <class T>
T e_k(const signature_split& split, const T& height, const T& d)
{
    T out = (split.r1 + split.r2) * e_a<T>(0, height, d);
    if (split.r2 != 0)
        out += split.r2 * e_a<T>(1, height, d);
    return out;
}

namespace detail {

template <class T>
void require_delta_range(const T& d, const char* what)
{
    if (!(4 * d >= 1) || !(8 * d <= 5))
        throw domain_error(std::string(what) + ": delta must lie in [1/4, 5/8]");
}

// (640 d - 112) / (1536 (3T - 1))
template <class T>
T ek_real_part(const T& d, const T& height)
{
    return (640 * d - 112) / (1536 * (3 * height - 1));
}

// (856 d - 151) / (1536 (3T + 2))
template <class T>
T ek_complex_part(const T& d, const T& height)
{
    return (856 * d - 151) / (1536 * (3 * height + 2));
}

} // namespace detail

/// Simplified majorant of E_K(T, d)/pi on d in [1/4, 5/8]:
/// (r1 + r2) a + r2 b + n_K / 2^10.
template <class T>
T ek_simplified_bound(const signature_split& split, const T& height, const T& d)
{
    detail::require_height(height, "ek_simplified_bound");
    detail::require_delta_range(d, "ek_simplified_bound");
    return (split.r1 + split.r2) * detail::ek_real_part(d, height) + split.r2 * detail::ek_complex_part(d, height) +
           T(split.degree()) / 1024;
}

/// Per-degree worst case of the simplified bound as it enters C2:
/// a + max{0, b - a} + 2^-10.
template <class T>
T ek_c2_term(const T& delta, const T& t0)
{
    detail::require_height(t0, "ek_c2_term");
    detail::require_delta_range(delta, "ek_c2_term");
    const T a = detail::ek_real_part(delta, t0);
    const T b = detail::ek_complex_part(delta, t0);
    T excess = b - a;
    if (excess < 0)
        excess = 0;
    return a + excess + T(1) / 1024;
}

} // namespace zzc
