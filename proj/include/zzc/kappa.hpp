#pragma once

// The kappa quantities and L* integrals that assemble into C1, C2 and C3.
//
// With sigma = c + r cos(theta), every integrand in kappa1, kappa4, kappa5 and
// the L* integrals is a trigonometric polynomial of degree <= 2, so they are
// evaluated from exact antiderivatives. kappa2 and kappa3 are the finite node
// sums of the zeta-integral lemma, summed exactly as stated.

#include "geometry.hpp"
#include "precision.hpp"
#include "zeta.hpp"

#include <string>

namespace zzc {

struct kappa_set {
    real kappa1;
    real kappa2;
    real kappa3;
    real kappa4;
    real kappa5;
    real lstar_int_first; // int_0^{theta_{1+eta}} L*_{-1}
    real lstar_int_mid;   // int_{theta_{1+eta}}^{theta_{-eta}} L*_1
    real lstar_int_last;  // int_{theta_{-eta}}^{pi} L*_{-1}
};

namespace detail {

/// Coefficients of L*_j = p + q cos(theta) + s sin(theta).
struct lstar_coefficients {
    real p;
    real q;
    real s;
};

inline lstar_coefficients lstar_expand(int j, const circle_params<real>& circ, const real& weight)
{
    const real a = j + circ.c;
    const real& r = circ.r;
    // (a + r cos)^2 + (r sin - 2)^2 = a^2 + r^2 + 4 + 2 a r cos - 4 r sin
    return {weight * (a * a + r * r + 4) - 4, 2 * weight * a * r, 2 * r - 4 * weight * r};
}

/// Antiderivative of (u - v cos) (p + q cos + s sin).
inline real weighted_trig_antiderivative(const real& theta, const real& u, const real& v, const lstar_coefficients& k)
{
    const real sn = sin(theta);
    const real cs = cos(theta);
    return u * k.p * theta + (u * k.q - v * k.p) * sn - u * k.s * cs - v * k.q * (theta / 2 + sn * cs / 2) -
           v * k.s * sn * sn / 2;
}

inline real weighted_trig_integral(const real& a, const real& b, const real& u, const real& v,
                                   const lstar_coefficients& k)
{
    if (a == b)
        return real(0);
    return weighted_trig_antiderivative(b, u, v, k) - weighted_trig_antiderivative(a, u, v, k);
}

inline const lstar_coefficients unit_weight{real(1), real(0), real(0)};

/// -1/2 < c - r < -eta < 1 + eta < c, 0 < eta <= 1/2.
inline void require_disc_chain(const real& c, const real& r, const real& eta, const char* what)
{
    const bool ok = r > 0 && 2 * (c - r) > -1 && c - r < -eta && 1 + eta < c && eta > 0 && 2 * eta <= 1;
    if (!ok)
        throw domain_error(std::string(what) + ": (c, r, eta) violates -1/2 < c-r < -eta < 1+eta < c, 0 < eta <= 1/2");
}

inline void require_grid_ceiling(const theta_grid<real>& grid, const char* what)
{
    if (grid.theta_1_plus_eta > real("2.1"))
        throw constraint_error(std::string(what) + ": theta_{1+eta} exceeds 2.1");
}

} // namespace detail

/// kappa1 = int_{theta_{1+eta}}^{theta_{-eta}} (1+eta-sigma)/2 + int_{theta_{-eta}}^{pi} (1-2 sigma)/2.
inline real kappa1(const real& c, const real& r, const real& eta, const theta_grid<real>& grid)
{
    detail::require_disc_chain(c, r, eta, "kappa1");
    const real first = detail::weighted_trig_integral(grid.theta_1_plus_eta, grid.theta_minus_eta, 1 + eta - c, r,
                                                      detail::unit_weight);
    const real second =
        detail::weighted_trig_integral(grid.theta_minus_eta, grid.theta_minus_half, 1 - 2 * c, 2 * r, detail::unit_weight);
    return (first + second) / 2;
}

/// kappa2(J1) = pi/(4 J1) (log zeta(c+r) + 2 sum_{j=1}^{J1-1} log zeta(c + r cos(pi j / (2 J1)))).
inline real kappa2(int j1, const real& c, const real& r, const precision_config& prec = {})
{
    if (j1 < 1)
        throw domain_error("kappa2: J1 must be positive");
    const real half_step = pi() / (2 * j1);
    real sum = 0;
    for (int j = 1; j < j1; ++j)
        sum += log_zeta_real(c + r * cos(half_step * j), prec);
    return pi() / (4 * j1) * (log_zeta_real(c + r, prec) + 2 * sum);
}

/// kappa3(J2) = (pi - theta_{1-c})/(2 J2) (log zeta(1-c+r)
///              + 2 sum_{j=1}^{J2-1} log zeta(1 - c - r cos(pi j/J2 + (1 - j/J2) theta_{1-c}))).
inline real kappa3(int j2, const real& c, const real& r, const theta_grid<real>& grid, const precision_config& prec = {})
{
    if (j2 < 1)
        throw domain_error("kappa3: J2 must be positive");
    if (!(r > 2 * c - 1))
        throw domain_error("kappa3: requires r > 2c - 1");
    const real& start = grid.theta_1_minus_c;
    real sum = 0;
    for (int j = 1; j < j2; ++j) {
        const real frac = real(j) / j2;
        const real node = pi() * frac + (1 - frac) * start;
        sum += log_zeta_real(1 - c - r * cos(node), prec);
    }
    return (pi() - start) / (2 * j2) * (log_zeta_real(1 - c + r, prec) + 2 * sum);
}

/// kappa4 = 1/4 int_{theta_{1+eta}}^{theta_{-eta}} (1 + eta - sigma) L*_1.
inline real kappa4(const real& c, const real& r, const real& eta, const theta_grid<real>& grid,
                   const real& weight = lstar_weight<real>())
{
    detail::require_disc_chain(c, r, eta, "kappa4");
    const auto k = detail::lstar_expand(1, {c, r}, weight);
    return detail::weighted_trig_integral(grid.theta_1_plus_eta, grid.theta_minus_eta, 1 + eta - c, r, k) / 4;
}

/// kappa5 = 1/4 int_{theta_{-eta}}^{theta_{-1/2}} (1 - 2 sigma) L*_1.
inline real kappa5(const real& c, const real& r, const real& eta, const theta_grid<real>& grid,
                   const real& weight = lstar_weight<real>())
{
    detail::require_disc_chain(c, r, eta, "kappa5");
    const auto k = detail::lstar_expand(1, {c, r}, weight);
    return detail::weighted_trig_integral(grid.theta_minus_eta, grid.theta_minus_half, 1 - 2 * c, 2 * r, k) / 4;
}

/// Exact int_a^b L*_j(theta) dtheta for 0 <= a <= b <= pi, j in {-1, 1}.
inline real lstar_integral(int j, const real& a, const real& b, const circle_params<real>& circ,
                           const real& weight = lstar_weight<real>())
{
    if (j != -1 && j != 1)
        throw domain_error("lstar_integral: j must be -1 or 1");
    if (!(a >= 0) || !(a <= b) || !(b <= pi()))
        throw domain_error("lstar_integral: requires 0 <= a <= b <= pi");
    const auto k = detail::lstar_expand(j, circ, weight);
    // (u - v cos) with u = 1, v = 0 reduces to the plain kernel.
    return detail::weighted_trig_integral(a, b, real(1), real(0), k);
}

/// Upper bound for int_0^{theta_{1+eta}} log zeta(sigma) dtheta.
inline real zeta_int_bound_first(const real& c, const real& r, const real& eta, int j1, const theta_grid<real>& grid,
                                 const precision_config& prec = {})
{
    detail::require_grid_ceiling(grid, "zeta_int_bound_first");
    if (j1 < 1)
        throw domain_error("zeta_int_bound_first: J1 must be positive");
    const real lz_c = log_zeta_real(c, prec);
    const real avg = (log_zeta_real(1 + eta, prec) + lz_c) / 2;
    return avg * (grid.theta_1_plus_eta - pi() / 2) + pi() / (4 * j1) * lz_c + kappa2(j1, c, r, prec);
}

/// Upper bound for int_{theta_{-eta}}^{pi} log zeta(1 - sigma) dtheta; needs r > 2c - 1.
inline real zeta_int_bound_second(const real& c, const real& r, const real& eta, int j2, const theta_grid<real>& grid,
                                  const precision_config& prec = {})
{
    detail::require_grid_ceiling(grid, "zeta_int_bound_second");
    if (!(r > 2 * c - 1))
        throw domain_error("zeta_int_bound_second: requires r > 2c - 1");
    if (j2 < 1)
        throw domain_error("zeta_int_bound_second: J2 must be positive");
    const real lz_c = log_zeta_real(c, prec);
    const real avg = (log_zeta_real(1 + eta, prec) + lz_c) / 2;
    return avg * (grid.theta_1_minus_c - grid.theta_minus_eta) + (pi() - grid.theta_1_minus_c) / (2 * j2) * lz_c +
           kappa3(j2, c, r, grid, prec);
}

/// All kappa quantities for one disc, with J1, J2 node counts.
inline kappa_set compute_kappa_set(const real& c, const real& r, const real& eta, int j1, int j2,
                                   const precision_config& prec = {}, const real& weight = lstar_weight<real>())
{
    const circle_params<real> circ{c, r};
    circ.check();
    const theta_grid<real> grid = make_theta_grid(circ, eta);
    kappa_set k;
    k.kappa1 = kappa1(c, r, eta, grid);
    k.kappa2 = kappa2(j1, c, r, prec);
    k.kappa3 = kappa3(j2, c, r, grid, prec);
    k.kappa4 = kappa4(c, r, eta, grid, weight);
    k.kappa5 = kappa5(c, r, eta, grid, weight);
    k.lstar_int_first = lstar_integral(-1, real(0), grid.theta_1_plus_eta, circ, weight);
    k.lstar_int_mid = lstar_integral(1, grid.theta_1_plus_eta, grid.theta_minus_eta, circ, weight);
    k.lstar_int_last = lstar_integral(-1, grid.theta_minus_eta, grid.theta_minus_half, circ, weight);
    return k;
}

} // namespace zzc
