#pragma once

// Angular geometry of the Jensen disc D(c, r) and the integrand kernels used
// by the kappa integrals.

#include "precision.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <string>

namespace zzc {

template <class T>
struct circle_params {
    T c;
    T r;

    /// Throws unless r > 0 and c - r > -1/2 (so that theta_{-1/2} = pi).
    void check() const
    {
        if (!(r > 0))
            throw domain_error("circle radius must be positive");
        if (!(2 * (c - r) > -1))
            throw domain_error("circle must satisfy c - r > -1/2");
    }
};

/// theta_y for the four abscissae the bound needs. Ordered
/// theta_1_plus_eta <= theta_minus_eta <= theta_1_minus_c <= theta_minus_half = pi
/// whenever 1 - c < -eta and c - r > -1/2.
template <class T>
struct theta_grid {
    T theta_1_plus_eta;
    T theta_minus_eta;
    T theta_1_minus_c;
    T theta_minus_half;
};

/// Angle at which the circle |s - c| = r crosses Re s = y: 0 to the right of
/// the disc, pi to the left of it.
template <class T>
T theta_y(const T& y, const circle_params<T>& circ)
{
    using std::acos;
    using boost::math::constants::pi;
    if (!(circ.r > 0))
        throw domain_error("theta_y: radius must be positive");
    if (circ.c + circ.r <= y)
        return T(0);
    if (y <= circ.c - circ.r)
        return pi<T>();
    T x = (y - circ.c) / circ.r;
    // clamp against rounding at the branch edges
    if (x > 1)
        x = 1;
    if (x < -1)
        x = -1;
    return acos(x);
}

template <class T>
theta_grid<T> make_theta_grid(const circle_params<T>& circ, const T& eta)
{
    const T one(1);
    return {theta_y<T>(one + eta, circ), theta_y<T>(-eta, circ), theta_y<T>(one - circ.c, circ),
            theta_y<T>(T(-0.5), circ)};
}

template <class T>
T sigma_of_theta(const T& theta, const circle_params<T>& circ)
{
    using std::cos;
    return circ.c + circ.r * cos(theta);
}

/// Weight 7/19 in L*_j. Exposed so the oracle suite can run a mutation canary.
template <class T>
T lstar_weight()
{
    return T(7) / 19;
}

namespace detail {
inline void check_kernel_index(int j)
{
    if (j < -1 || j > 1)
        throw domain_error("kernel index j must be -1, 0 or 1, got " + std::to_string(j));
}
} // namespace detail

/// L*_j(theta) = 2r sin(theta) - 4 + w((j + c + r cos)^2 + (r sin - 2)^2), w = 7/19.
template <class T>
T l_star(int j, const T& theta, const circle_params<T>& circ, const T& weight = lstar_weight<T>())
{
    using std::cos;
    using std::sin;
    detail::check_kernel_index(j);
    const T s = circ.r * sin(theta);
    const T a = j + circ.c + circ.r * cos(theta);
    const T b = s - 2;
    return 2 * s - 4 + weight * (a * a + b * b);
}

/// L_j(theta) = log(((j + c + r cos)^2 + (|r sin| + T)^2) / (T + 2)^2).
template <class T>
T l_kernel(int j, const T& theta, const circle_params<T>& circ, const T& height)
{
    using std::abs;
    using std::cos;
    using std::log;
    using std::sin;
    detail::check_kernel_index(j);
    if (!(height > 0))
        throw domain_error("l_kernel: T must be positive");
    const T a = j + circ.c + circ.r * cos(theta);
    const T b = abs(circ.r * sin(theta)) + height;
    const T num = a * a + b * b;
    if (!(num > 0))
        throw domain_error("l_kernel: logarithm argument is not positive");
    const T den = height + 2;
    return log(num / (den * den));
}

} // namespace zzc
