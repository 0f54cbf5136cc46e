#pragma once

// Assembly of the admissible constants (C1, C2, C3), the derived
// (D1, D2, D3), and the zero-count window they imply for a given field.

#include "gamma_bounds.hpp"
#include "geometry.hpp"
#include "kappa.hpp"
#include "precision.hpp"
#include "zeta.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zzc {

/// Free parameters of the bound. sigma1, delta and the theta grid are derived.
struct search_point {
    real c;
    real r;
    real eta;
    int j1 = 64;
    int j2 = 39;
    real t0 = 1;

    real sigma1() const
    {
        const real h = c - real(0.5);
        return c + h * h / r;
    }
    real delta() const { return 2 * c - sigma1() - real(0.5); }
    circle_params<real> circle() const { return {c, r}; }
    theta_grid<real> grid() const { return make_theta_grid(circle(), eta); }
};

struct violation {
    std::string id;
    std::string message;
};

/// Every inequality of the feasibility chain that `point` breaks; empty means
/// the point is admissible.
inline std::vector<violation> validate(const search_point& p)
{
    std::vector<violation> out;
    auto fail = [&](const char* id, const char* msg) { out.push_back({id, msg}); };

    if (p.j1 < 1)
        fail("j1_positive", "J1 must be a positive integer");
    if (p.j2 < 1)
        fail("j2_positive", "J2 must be a positive integer");
    if (!(7 * p.t0 >= 5))
        fail("t0_min", "T0 below 5/7");
    if (!(p.eta > 0))
        fail("eta_positive", "eta must be positive");
    if (!(2 * p.eta <= 1))
        fail("eta_max", "eta exceeds 1/2");
    if (!(p.r > 0)) {
        fail("r_positive", "r must be positive");
        return out; // nothing below is defined
    }
    const real cr = p.c - p.r;
    if (!(2 * cr > -1))
        fail("c_minus_r_lower", "c - r not above -1/2");
    if (!(cr < 1 - p.c))
        fail("c_minus_r_upper", "c - r not below 1 - c");
    if (!(1 - p.c < -p.eta))
        fail("one_minus_c", "1 - c not below -eta");
    if (!(1 + p.eta < p.c))
        fail("c_lower", "c not above 1 + eta");

    const real s1 = p.sigma1();
    const real d = p.delta();
    if (!(4 * d >= 1))
        fail("delta_min", "delta below 1/4");
    if (!(2 * d < 1))
        fail("delta_max", "delta not below 1/2");
    if (!(p.c < s1))
        fail("sigma1_lower", "sigma1 not above c");
    if (!(s1 < p.c + p.r))
        fail("sigma1_upper", "sigma1 not below c + r");

    const theta_grid<real> g = p.grid();
    if (g.theta_1_plus_eta > real("2.1"))
        fail("theta_ceiling", "theta_{1+eta} exceeds 2.1");
    return out;
}

inline std::string describe(const std::vector<violation>& v)
{
    std::string s;
    for (const auto& x : v) {
        if (!s.empty())
            s += "; ";
        s += x.message;
    }
    return s;
}

struct constant_triple {
    real c1;
    real c2;
    real c3;
};

/// Value rounded up to a whole number of thousandths, stored exactly.
struct thousandths {
    std::int64_t count = 0;

    real value() const { return real(count) / 1000; }
    std::string str() const
    {
        const std::int64_t mag = count < 0 ? -count : count;
        std::string frac = std::to_string(mag % 1000);
        frac.insert(0, 3 - frac.size(), '0');
        return (count < 0 ? "-" : "") + std::to_string(mag / 1000) + "." + frac;
    }
    static thousandths ceil_of(const real& x) { return {static_cast<std::int64_t>(ceil(x * 1000).convert_to<long long>())}; }
    /// Reads a value already written with at most three decimals.
    static thousandths parse(const std::string& s)
    {
        return {static_cast<std::int64_t>(round(parse_real(s) * 1000).convert_to<long long>())};
    }

    friend bool operator==(const thousandths&, const thousandths&) = default;
};

struct d_triple {
    thousandths d1;
    thousandths d2;
    thousandths d3;

    friend bool operator==(const d_triple&, const d_triple&) = default;
};

/// Named contributions to C2 and C3. Everything divided by
/// Lambda = pi log(r / (c - 1/2)) is already divided here.
struct bound_breakdown {
    // C2
    real gk_term;
    real log_zeta_sigma1_term;
    real ek_term;
    real zeta_int_first;
    real zeta_int_second;
    real eta_strip_term;
    real kappa45_term;
    real zeta_ratio_term;
    // C3
    real base_5_2;
    real log3_term;
    real t0_log_term;
    real lstar_term;

    real c2_sum() const
    {
        return gk_term + log_zeta_sigma1_term + ek_term + zeta_int_first + zeta_int_second + eta_strip_term +
               kappa45_term + zeta_ratio_term;
    }
    real c3_sum() const { return base_5_2 + t0_log_term + log3_term + lstar_term; }
};

struct constants_result {
    constant_triple triple;
    bound_breakdown breakdown;
    kappa_set kappas;
    real lambda;               // pi log(r / (c - 1/2))
    real kappa45_raw;          // (kappa4 + kappa5) / (T0 + 2), before the max
    real lstar_raw;            // sum of L* integrals / (2 (T0 + 2) Lambda), before the max
    std::vector<std::string> warnings;
};

/// Constants for one admissible point. Throws constraint_error when
/// validate(point) is non-empty.
inline constants_result compute_constants(const search_point& p, const precision_config& prec = {})
{
    prec.check();
    const working_precision scope(prec);
    const auto bad = validate(p);
    if (!bad.empty())
        throw constraint_error("infeasible parameter point: " + describe(bad));

    const theta_grid<real> g = p.grid();
    const real sigma1 = p.sigma1();
    const real delta = p.delta();

    constants_result out;
    if (p.t0 < 1)
        out.warnings.push_back("T0 below 1: the zero-count theorem is only stated for T >= 1");

    out.kappas = compute_kappa_set(p.c, p.r, p.eta, p.j1, p.j2, prec);
    const kappa_set& k = out.kappas;
    out.lambda = pi() * log(p.r / (p.c - real(0.5)));
    const real& lambda = out.lambda;

    const real lz_eta = log_zeta_real(1 + p.eta, prec);
    const real strip = g.theta_minus_eta - g.theta_1_plus_eta;

    bound_breakdown& b = out.breakdown;
    b.gk_term = 1 / (25 * p.t0);
    b.log_zeta_sigma1_term = 2 / pi() * log_zeta_real(sigma1, prec);
    b.ek_term = ek_c2_term(delta, p.t0);
    b.zeta_int_first = zeta_int_bound_first(p.c, p.r, p.eta, p.j1, g, prec) / lambda;
    b.zeta_int_second = zeta_int_bound_second(p.c, p.r, p.eta, p.j2, g, prec) / lambda;
    b.eta_strip_term = lz_eta * strip / lambda;
    out.kappa45_raw = (k.kappa4 + k.kappa5) / (p.t0 + 2);
    b.kappa45_term = (out.kappa45_raw > 0 ? out.kappa45_raw : real(0)) / lambda;
    b.zeta_ratio_term = pi() * log_zeta_ratio(p.c, prec) / lambda;

    b.base_5_2 = real(5) / 2;
    b.t0_log_term = pi() * log(1 + 2 / p.t0) / lambda;
    b.log3_term = strip * log(real(3)) / lambda;
    out.lstar_raw = (k.lstar_int_first + k.lstar_int_mid + k.lstar_int_last) / (2 * (p.t0 + 2)) / lambda;
    b.lstar_term = out.lstar_raw > 0 ? out.lstar_raw : real(0);

    out.triple = {k.kappa1 / lambda, b.c2_sum(), b.c3_sum()};
    return out;
}

/// Theorem constants to corollary constants (valid for T >= t0 >= 1):
/// D1 = C1, D2 = C2 + 1/4 + C1 (log(1 + 2/t0) - log 2 pi), D3 = C3, each rounded
/// up at the third decimal. The 1/4 absorbs r1/4 <= n_K/4.
inline d_triple derive_d(const constant_triple& t, const real& t0)
{
    if (!(t0 >= 1))
        throw domain_error("derive_d: t0 must be at least 1");
    const real shift = log(1 + 2 / t0) - log(2 * pi());
    return {thousandths::ceil_of(t.c1), thousandths::ceil_of(t.c2 + real(0.25) + t.c1 * shift),
            thousandths::ceil_of(t.c3)};
}

struct field_params {
    int n_k = 1;
    real log_dk = 0; // natural log of |d_K|
    int r1 = 1;

    int r2() const { return (n_k - r1) / 2; }

    static field_params make(int n_k, const real& log_dk, int r1)
    {
        if (n_k < 1)
            throw constraint_error("field degree n_K must be positive");
        if (r1 < 0 || r1 > n_k)
            throw constraint_error("r1 must lie in [0, n_K]");
        if ((n_k - r1) % 2 != 0)
            throw constraint_error("n_K - r1 must be even");
        if (log_dk < 0)
            throw constraint_error("log d_K must be nonnegative");
        return {n_k, log_dk, r1};
    }
};

/// C1 (log d_K + n_K (log(T+2) - log 2 pi)) + C2 n_K + C3.
inline real theorem_bound(const field_params& f, const real& height, const constant_triple& t)
{
    if (!(height > 0))
        throw domain_error("theorem_bound: T must be positive");
    return t.c1 * (f.log_dk + f.n_k * (log(height + 2) - log(2 * pi()))) + t.c2 * f.n_k + t.c3;
}

struct nk_window_result {
    real low;
    real high;
    real main;
    real bound;
};

/// main = (T/pi)(log d_K + n_K log(T / 2 pi e)) - r1/4; window = main -/+ bound,
/// with the lower end clamped at 0.
inline nk_window_result nk_window(const field_params& f, const real& height, const constant_triple& t)
{
    if (!(height >= 1))
        throw domain_error("nk_window: T must be at least 1");
    nk_window_result w;
    w.main = height / pi() * (f.log_dk + f.n_k * (log(height / (2 * pi())) - 1)) - real(f.r1) / 4;
    w.bound = theorem_bound(f, height, t);
    w.low = w.main - w.bound;
    if (w.low < 0)
        w.low = 0;
    w.high = w.main + w.bound;
    return w;
}

/// Integer counts consistent with the window: [ceil(low), floor(high)].
inline std::pair<long long, long long> integer_window(const nk_window_result& w)
{
    return {ceil(w.low).convert_to<long long>(), floor(w.high).convert_to<long long>()};
}

} // namespace zzc
