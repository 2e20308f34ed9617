// Prints the bath kernels of an ohmic spectrum on a coarse grid, plus the
// decay-regime summary — a minimal tour of the KernelSet interface.

#include <cstdio>

#include "spinwork/kernels.hpp"

int main() {
    using namespace spinwork;
    const KernelSet ks(SpectralDensity::ohmic(0.5, 1.0), 2.0);
    std::printf("# t        K(t)        xi(t)       G(t)        F(t)\n");
    for (double t = 0.0; t <= 8.0; t += 0.5) {
        std::printf("%6.2f  %10.6f  %10.6f  %10.6f  %10.6f\n", t,
                    ks.noise_kernel(t), ks.xi(t), ks.backreaction_g(t),
                    ks.backreaction_f(t));
    }
    const auto rep = ks.decay_regimes();
    std::printf("\nT2 = %g  (%s)\n", rep.t2, rep.description.c_str());
    return 0;
}
