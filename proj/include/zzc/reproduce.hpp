#pragma once

// Recomputes the published constant tables from the stored presets and
// compares each cell against the stored values.

#include "constants.hpp"
#include "published_tables.hpp"

#include <string>
#include <vector>

namespace zzc {

struct cell_check {
    std::string name; // "C1", "C2", "C3", "D1", ...
    real computed;
    real published;
    bool passed = false;
};

struct c_row_report {
    int preset = 0;
    int t0 = 1;
    constant_triple computed;
    std::vector<cell_check> cells;

    bool passed() const
    {
        for (const auto& c : cells)
            if (!c.passed)
                return false;
        return true;
    }
};

struct d_row_report {
    std::string label;
    int preset = 0;
    int t0 = 1;
    d_triple computed;
    d_triple published;

    bool passed() const { return computed == published; }
};

struct table_tolerance {
    real abs_tol = parse_real(published::c_abs_tol);
    real excess_tol = parse_real(published::c_excess_tol);
};

inline search_point preset_point(const published::preset_row& row, int t0 = 1)
{
    return {parse_real(row.c), parse_real(row.r), parse_real(row.eta), published::default_j1,
            published::default_j2, real(t0)};
}

/// |computed - published| <= abs_tol and computed - published <= excess_tol.
inline bool within_table_tolerance(const real& computed, const real& published_value, const table_tolerance& tol)
{
    const real diff = computed - published_value;
    return abs(diff) <= tol.abs_tol && diff <= tol.excess_tol;
}

inline c_row_report check_c_row(const published::preset_row& row, int t0, const table_tolerance& tol,
                                 const precision_config& prec = {})
{
    if (t0 != 1 && t0 != 10)
        throw domain_error("published constants exist only for T0 = 1 and T0 = 10");
    const working_precision scope(prec);
    c_row_report out;
    out.preset = row.id;
    out.t0 = t0;
    out.computed = compute_constants(preset_point(row, t0), prec).triple;
    const real p1 = parse_real(row.c1);
    const real p2 = parse_real(t0 == 1 ? row.c2_t1 : row.c2_t10);
    const real p3 = parse_real(t0 == 1 ? row.c3_t1 : row.c3_t10);
    const auto add = [&](const char* name, const real& got, const real& want) {
        out.cells.push_back({name, got, want, within_table_tolerance(got, want, tol)});
    };
    add("C1", out.computed.c1, p1);
    add("C2", out.computed.c2, p2);
    add("C3", out.computed.c3, p3);
    return out;
}

inline d_row_report check_d_row(const published::d_row& row, const precision_config& prec = {})
{
    const working_precision scope(prec);
    d_row_report out;
    out.label = std::string(row.label);
    out.preset = row.preset;
    out.t0 = row.t0;
    const constant_triple t = compute_constants(preset_point(published::row(row.preset), row.t0), prec).triple;
    out.computed = derive_d(t, real(row.t0));
    out.published = {thousandths::parse(std::string(row.d1)), thousandths::parse(std::string(row.d2)),
                     thousandths::parse(std::string(row.d3))};
    return out;
}

} // namespace zzc
