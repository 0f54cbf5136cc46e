#pragma once

// Published parameter presets and constant tables, kept verbatim as decimal
// strings. Read-only reference data: nothing here is recomputed.

#include <array>
#include <stdexcept>
#include <string_view>

namespace zzc::published {

inline constexpr std::string_view schema_version = "zzc-tables/1";

inline constexpr int default_j1 = 64;
inline constexpr int default_j2 = 39;

struct preset_row {
    int id;
    std::string_view c;
    std::string_view r;
    std::string_view eta;
    std::string_view c1;
    std::string_view c2_t1;  // T >= 1
    std::string_view c3_t1;
    std::string_view c2_t10; // T >= 10
    std::string_view c3_t10;
};

inline constexpr std::array<preset_row, 5> rows{{
    {1, "1.000011314", "1.064340602", "4.2826451e-6", "0.22737", "23.02528", "4.51954", "22.97204", "3.30668"},
    {2, "1.042877508", "1.259860485", "0.01737451737", "0.24493", "6.66558", "4.21201", "6.60397", "3.12362"},
    {3, "1.079779637", "1.410370323", "0.03441682600", "0.26304", "5.22032", "4.08149", "5.15251", "3.05074"},
    {4, "1.114294066", "1.538391756", "0.05247813411", "0.28032", "4.43521", "4.00936", "4.36214", "3.01124"},
    {5, "1.145720440", "1.645584376", "0.07107039918", "0.29590", "3.93889", "3.96852", "3.86136", "2.98903"},
}};

/// One published (D1, D2, D3) entry and the preset row / T0 it derives from.
struct d_row {
    std::string_view label;
    int preset;
    int t0;
    std::string_view d1;
    std::string_view d2;
    std::string_view d3;
};

inline constexpr std::array<d_row, 9> d_rows{{
    {"preset1-T1", 1, 1, "0.228", "23.108", "4.520"},
    {"preset2-T1", 2, 1, "0.245", "6.735", "4.213"},
    {"preset2-T10", 2, 10, "0.245", "6.449", "3.124"},
    {"preset3-T1", 3, 1, "0.264", "5.276", "4.082"},
    {"preset3-T10", 3, 10, "0.264", "4.968", "3.051"},
    {"preset4-T1", 4, 1, "0.281", "4.478", "4.010"},
    {"preset4-T10", 4, 10, "0.281", "4.149", "3.012"},
    {"preset5-T1", 5, 1, "0.296", "3.971", "3.969"},
    {"preset5-T10", 5, 10, "0.296", "3.622", "2.990"},
}};

inline const preset_row& row(int id)
{
    for (const auto& r : rows)
        if (r.id == id)
            return r;
    throw std::out_of_range("no published preset row with that id");
}

/// Comparison tolerances for the constant table: absolute agreement, and the
/// largest amount by which a computed value may exceed the published one.
inline constexpr std::string_view c_abs_tol = "2e-5";
inline constexpr std::string_view c_excess_tol = "1e-5";

} // namespace zzc::published
