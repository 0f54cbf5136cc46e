// Bounds N_K(T) for Q(sqrt(5)) at a few heights using the first preset.
//
//   n_K = 2, |d_K| = 5, two real embeddings.

#include <zzc/zzc.hpp>

#include <iostream>

int main()
{
    using zzc::real;
    zzc::working_precision digits(40);

    const auto field = zzc::field_params::make(2, log(real(5)), 2);
    const auto constants = zzc::compute_constants(zzc::preset_point(zzc::published::row(1))).triple;

    for (int height : {1, 10, 100, 1000}) {
        const auto w = zzc::nk_window(field, real(height), constants);
        const auto [lo, hi] = zzc::integer_window(w);
        std::cout << "T = " << height << ": main term " << zzc::to_fixed(w.main, 3) << ", N_K(T) in [" << lo << ", "
                  << hi << "]\n";
    }
}
