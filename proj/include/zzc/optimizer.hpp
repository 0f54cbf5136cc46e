#pragma once

// Deterministic derivative-free search over (c, r, eta) with J1, J2 and T0
// held fixed. Infeasible trial points are rejected, never penalised.

#include "constants.hpp"
#include "precision.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace zzc {

/// The feasible seed set is empty, or the search cannot start.
class search_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class objective_mode { min_c1, min_c2_given_c1_cap, min_weighted };

struct objective {
    objective_mode mode = objective_mode::min_c1;
    std::optional<real> c1_cap;
    std::optional<std::array<real, 3>> weights;

    static objective min_c1() { return {}; }
    static objective min_c2(const real& cap) { return {objective_mode::min_c2_given_c1_cap, cap, std::nullopt}; }
    static objective weighted(const real& w1, const real& w2, const real& w3)
    {
        return {objective_mode::min_weighted, std::nullopt, std::array<real, 3>{w1, w2, w3}};
    }

    void check() const
    {
        if ((mode == objective_mode::min_c2_given_c1_cap) != c1_cap.has_value())
            throw domain_error("objective: c1_cap is required exactly for min_c2_given_c1_cap");
        if (mode == objective_mode::min_weighted) {
            if (!weights)
                throw domain_error("objective: weighted mode needs weights");
            const auto& w = *weights;
            if (w[0] < 0 || w[1] < 0 || w[2] < 0 || (w[0] == 0 && w[1] == 0 && w[2] == 0))
                throw domain_error("objective: weights must be nonnegative and not all zero");
        }
    }

    /// Objective value, or nullopt when the triple is outside the objective's
    /// own feasible set (C1 above the cap).
    std::optional<real> score(const constant_triple& t) const
    {
        switch (mode) {
        case objective_mode::min_c1:
            return t.c1;
        case objective_mode::min_c2_given_c1_cap:
            if (t.c1 > *c1_cap)
                return std::nullopt;
            return t.c2;
        case objective_mode::min_weighted: {
            const auto& w = *weights;
            return w[0] * t.c1 + w[1] * t.c2 + w[2] * t.c3;
        }
        }
        return std::nullopt;
    }
};

inline std::string to_string(objective_mode m)
{
    switch (m) {
    case objective_mode::min_c1:
        return "min_c1";
    case objective_mode::min_c2_given_c1_cap:
        return "min_c2_given_c1_cap";
    case objective_mode::min_weighted:
        return "min_weighted";
    }
    return "unknown";
}

struct trace_entry {
    search_point point;
    constant_triple constants;
};

struct search_report {
    search_point best;
    constant_triple best_constants;
    long evaluations = 0;
    std::vector<trace_entry> trace;
};

struct interval {
    real lo;
    real hi;
};

struct search_bounds {
    interval c;
    interval r;
    interval eta; // sampled geometrically
};

struct search_steps {
    int c = 1;
    int r = 1;
    int eta = 1;
};

namespace detail {

inline std::vector<real> linear_samples(const interval& iv, int n)
{
    if (n == 1 || iv.lo == iv.hi)
        return {iv.lo};
    std::vector<real> out;
    for (int i = 0; i < n; ++i)
        out.push_back(iv.lo + (iv.hi - iv.lo) * i / (n - 1));
    return out;
}

inline std::vector<real> log_samples(const interval& iv, int n)
{
    if (n == 1 || iv.lo == iv.hi)
        return {iv.lo};
    const real a = log(iv.lo);
    const real b = log(iv.hi);
    std::vector<real> out;
    for (int i = 0; i < n; ++i)
        out.push_back(exp(a + (b - a) * i / (n - 1)));
    return out;
}

/// Objective-then-lexicographic ordering, independent of evaluation order.
inline bool better(const real& score_a, const search_point& a, const real& score_b, const search_point& b)
{
    if (score_a != score_b)
        return score_a < score_b;
    if (a.c != b.c)
        return a.c < b.c;
    if (a.r != b.r)
        return a.r < b.r;
    return a.eta < b.eta;
}

} // namespace detail

/// Lattice of candidate points over `bounds`, infeasible ones dropped.
/// `base` supplies J1, J2 and T0.
inline std::vector<search_point> grid_seed(const search_bounds& bounds, const search_steps& steps,
                                           const search_point& base = {})
{
    if (steps.c < 1 || steps.r < 1 || steps.eta < 1)
        throw domain_error("grid_seed: step counts must be positive");
    for (const interval* iv : {&bounds.c, &bounds.r, &bounds.eta})
        if (iv->hi < iv->lo)
            throw domain_error("grid_seed: interval with hi < lo");
    if (!(bounds.eta.lo > 0))
        throw domain_error("grid_seed: eta bounds must be positive");

    std::vector<search_point> out;
    for (const real& c : detail::linear_samples(bounds.c, steps.c))
        for (const real& r : detail::linear_samples(bounds.r, steps.r))
            for (const real& eta : detail::log_samples(bounds.eta, steps.eta)) {
                search_point p = base;
                p.c = c;
                p.r = r;
                p.eta = eta;
                if (validate(p).empty())
                    out.push_back(std::move(p));
            }
    if (out.empty())
        throw search_error("grid_seed: no feasible point in the requested bounds");
    return out;
}

struct scored_point {
    search_point point;
    constant_triple constants;
    real score;
};

/// Best seed by objective value with lexicographic tie-break. Seeds outside
/// the objective's feasible set are skipped.
inline scored_point best_seed(const std::vector<search_point>& seeds, const objective& obj,
                              const precision_config& prec = {})
{
    obj.check();
    std::optional<scored_point> best;
    for (const auto& p : seeds) {
        const constant_triple t = compute_constants(p, prec).triple;
        const auto s = obj.score(t);
        if (!s)
            continue;
        if (!best || detail::better(*s, p, best->score, best->point))
            best = scored_point{p, t, *s};
    }
    if (!best)
        throw search_error("no seed satisfies the objective constraints");
    return *best;
}

struct refine_options {
    real min_step = real("1e-12");
};

/// Coordinate search from `start`: coordinates visited in the order c, r,
/// log eta; each tries +step then -step and keeps the first strict
/// improvement. A sweep without improvement halves the step. Stops when the
/// step falls below 1e-12 or `budget` trial evaluations are spent.
inline search_report refine(const search_point& start, const objective& obj, long budget,
                            const precision_config& prec = {}, const refine_options& opts = {})
{
    obj.check();
    const working_precision scope(prec);
    if (!validate(start).empty())
        throw constraint_error("refine: start point is infeasible: " + describe(validate(start)));

    search_report rep;
    rep.best = start;
    rep.best_constants = compute_constants(start, prec).triple;
    rep.evaluations = 1;
    const auto start_score = obj.score(rep.best_constants);
    if (!start_score)
        throw search_error("refine: start point violates the objective constraint (C1 above cap)");
    real best_score = *start_score;
    rep.trace.push_back({rep.best, rep.best_constants});

    // Step scales per coordinate, relative to the distance to the nearest
    // binding constraint where one exists.
    std::array<real, 3> scale{(start.c - 1 - start.eta) / 20, start.r / 100, real("0.05")};
    real factor = 1;

    auto propose = [](const search_point& p, int coord, const real& step) {
        search_point q = p;
        if (coord == 0)
            q.c += step;
        else if (coord == 1)
            q.r += step;
        else
            q.eta = exp(log(p.eta) + step);
        return q;
    };

    long spent = 0;
    while (spent < budget) {
        const real largest = *std::max_element(scale.begin(), scale.end()) * factor;
        if (largest < opts.min_step)
            break;
        bool improved = false;
        for (int coord = 0; coord < 3 && spent < budget; ++coord) {
            for (int sign : {+1, -1}) {
                if (spent >= budget)
                    break;
                const search_point trial = propose(rep.best, coord, sign * scale[coord] * factor);
                if (!validate(trial).empty())
                    continue; // rejected without an evaluation
                ++spent;
                ++rep.evaluations;
                constant_triple t;
                try {
                    t = compute_constants(trial, prec).triple;
                } catch (const precision_error&) {
                    continue;
                }
                const auto s = obj.score(t);
                if (s && *s < best_score) {
                    best_score = *s;
                    rep.best = trial;
                    rep.best_constants = t;
                    rep.trace.push_back({trial, t});
                    improved = true;
                    break;
                }
            }
        }
        if (!improved)
            factor /= 2;
    }
    return rep;
}

/// Refines several starts and keeps the best by objective, then (c, r, eta).
inline search_report refine_many(const std::vector<search_point>& starts, const objective& obj, long budget,
                                 const precision_config& prec = {})
{
    if (starts.empty())
        throw search_error("refine_many: no start points");
    std::optional<search_report> best;
    std::optional<real> best_score;
    long total = 0;
    for (const auto& s : starts) {
        search_report r = refine(s, obj, budget, prec);
        total += r.evaluations;
        const real score = *obj.score(r.best_constants);
        if (!best || detail::better(score, r.best, *best_score, best->best)) {
            best = std::move(r);
            best_score = score;
        }
    }
    best->evaluations = total;
    return *best;
}

} // namespace zzc
