#pragma once

// Adaptive Simpson quadrature with Richardson correction. Used as the
// independent oracle for the closed-form kappa integrals.

#include "precision.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace zzc {

template <class T>
struct quad_result {
    T value;
    T error_estimate;
    std::size_t intervals = 0;
};

struct quad_options {
    std::size_t max_intervals = 1000000;
    int max_depth = 200;
};

namespace detail {

template <class T, class F>
class adaptive_simpson {
public:
    adaptive_simpson(const F& f, const quad_options& opts) : f_(f), opts_(opts) {}

    quad_result<T> run(const T& a, const T& b, const T& tol)
    {
        const T fa = f_(a);
        const T fb = f_(b);
        const T m = (a + b) / 2;
        const T fm = f_(m);
        const T whole = (b - a) / 6 * (fa + 4 * fm + fb);
        error_ = 0;
        intervals_ = 1;
        const T value = step(a, b, fa, fm, fb, whole, tol, opts_.max_depth);
        return {value, error_, intervals_};
    }

private:
    T step(const T& a, const T& b, const T& fa, const T& fm, const T& fb, const T& whole, const T& tol, int depth)
    {
        using std::abs;
        const T m = (a + b) / 2;
        const T lm = (a + m) / 2;
        const T rm = (m + b) / 2;
        const T flm = f_(lm);
        const T frm = f_(rm);
        const T left = (m - a) / 6 * (fa + 4 * flm + fm);
        const T right = (b - m) / 6 * (fm + 4 * frm + fb);
        const T delta = left + right - whole;
        ++intervals_;
        if (abs(delta) <= 15 * tol) {
            error_ += abs(delta) / 15;
            return left + right + delta / 15;
        }
        if (depth <= 0 || intervals_ >= opts_.max_intervals)
            throw precision_error("quad_adaptive: no convergence within " + std::to_string(opts_.max_intervals) +
                                  " intervals");
        return step(a, m, fa, flm, fm, left, tol / 2, depth - 1) + step(m, b, fm, frm, fb, right, tol / 2, depth - 1);
    }

    const F& f_;
    quad_options opts_;
    T error_ = 0;
    std::size_t intervals_ = 0;
};

} // namespace detail

/// Integral of f over [a, b] with estimated absolute error at most tol.
/// Throws precision_error when the subdivision budget runs out.
template <class T, class F>
quad_result<T> quad_adaptive_detailed(const F& f, const T& a, const T& b, const T& tol, const quad_options& opts = {})
{
    if (!(tol > 0))
        throw domain_error("quad_adaptive: tolerance must be positive");
    if (a == b)
        return {T(0), T(0), 0};
    if (b < a) {
        auto r = quad_adaptive_detailed<T>(f, b, a, tol, opts);
        r.value = -r.value;
        return r;
    }
    detail::adaptive_simpson<T, F> engine(f, opts);
    return engine.run(a, b, tol);
}

template <class T, class F>
T quad_adaptive(const F& f, const T& a, const T& b, const T& tol, const quad_options& opts = {})
{
    return quad_adaptive_detailed<T>(f, a, b, tol, opts).value;
}

} // namespace zzc
