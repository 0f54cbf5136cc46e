// Prints (C1, C2, C3) and the rounded (D1, D2, D3) for every stored preset.

#include <zzc/zzc.hpp>

#include <iostream>

int main()
{
    zzc::working_precision digits(50);
    for (int t0 : {1, 10}) {
        std::cout << "T0 = " << t0 << "\n";
        for (const auto& row : zzc::published::rows) {
            const auto point = zzc::preset_point(row, t0);
            const auto c = zzc::compute_constants(point).triple;
            const auto d = zzc::derive_d(c, point.t0);
            std::cout << "  c = " << row.c << "  C = (" << zzc::to_fixed(c.c1, 6) << ", " << zzc::to_fixed(c.c2, 6)
                      << ", " << zzc::to_fixed(c.c3, 6) << ")  D = (" << d.d1.str() << ", " << d.d2.str() << ", "
                      << d.d3.str() << ")\n";
        }
    }
}
