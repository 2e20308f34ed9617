// Scans the pulse spacing for the hot-bath work-extraction window and checks
// the thermodynamic bounds along the way.

#include <cstdio>

#include "spinwork/thermo.hpp"
#include "spinwork/work.hpp"

int main() {
    using namespace spinwork;
    // hot bath, cold spin, the pi/2-y then pi/2-x pulse pair
    const auto sys = SystemConfig::with_sz0(
        0.01, -0.8, KernelSet(SpectralDensity::ohmic(1.0, 1.0), 10.0));
    const auto p1 = coefficients(PulseUnitary::rotation(1.5707963267948966,
                                                        Axis::Y));
    const auto p2 = coefficients(PulseUnitary::rotation(1.5707963267948966,
                                                        Axis::X));
    const double ts = sys.spin_temperature();

    double best_tau = 0.0, best_w = 1e300;
    std::printf("# tau      w          eta        carnot\n");
    for (double tau = 0.02; tau <= 2.0; tau += 0.02) {
        const auto b = work_two_pulse(sys, p1, p2, tau);
        const auto rep = efficiency(b, sys.bath_temperature(), ts);
        if (b.total < best_w) {
            best_w = b.total;
            best_tau = tau;
        }
        std::printf("%6.2f  %9.5f  %9.5f  %9.5f\n", tau, b.dimensionless,
                    rep.eta, rep.carnot);
    }
    std::printf("\nbest extraction W = %.6f at tau = %.2f\n", best_w, best_tau);
    return 0;
}
