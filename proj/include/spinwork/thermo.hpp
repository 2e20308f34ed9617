// thermo.hpp — efficiency, Carnot bound and the two-temperature work
// restrictions, as checkable predicates on a WorkBreakdown.
//
// The restrictions
//     W >= (1 - T/T_S)  Delta H_S
//     W >= (1 - T_S/T) (Delta H_I + Delta H_B)
// hold for any cyclic driving starting from the two-temperature state; their
// slacks must be non-negative on every physical run. At T = T_S both reduce
// to W >= 0 (Thomson).

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "spinwork/errors.hpp"
#include "spinwork/work.hpp"

namespace spinwork {

struct EfficiencyReport {
    enum class Regime { SpinHotter, BathHotter, Equal };
    double eta = 0.0;
    double carnot = 0.0;
    Regime regime = Regime::Equal;
    double slack_spin = 0.0;  // W - (1 - T/T_S) dH_S
    double slack_bath = 0.0;  // W - (1 - T_S/T) (dH_I + dH_B)
    bool extraction = false;  // W < 0
};

// Slacks of the two restrictions; both must be >= 0 up to roundoff.
inline std::pair<double, double> check_restrictions(const WorkBreakdown& b,
                                                    double bath_temp,
                                                    double spin_temp) {
    if (!(bath_temp >= 0.0) || !(spin_temp >= 0.0))
        throw DomainError("check_restrictions: temperatures must be >= 0");
    double slack1;
    if (std::isinf(spin_temp)) {
        slack1 = b.total - b.spin_part;
    } else if (spin_temp == 0.0) {
        // 1 - T/T_S -> -inf; the bound is vacuous unless dH_S > 0
        slack1 = b.spin_part > 0.0 ? std::numeric_limits<double>::infinity()
               : b.spin_part < 0.0 ? -std::numeric_limits<double>::infinity()
                                   : b.total;
    } else {
        slack1 = b.total - (1.0 - bath_temp / spin_temp) * b.spin_part;
    }
    double slack2;
    const double bi = b.bath_int_part;
    if (bath_temp == 0.0 || std::isinf(spin_temp)) {
        slack2 = bi > 0.0   ? std::numeric_limits<double>::infinity()
                 : bi < 0.0 ? -std::numeric_limits<double>::infinity()
                            : b.total;
    } else {
        slack2 = b.total - (1.0 - spin_temp / bath_temp) * bi;
    }
    return {slack1, slack2};
}

inline double carnot_bound(double bath_temp, double spin_temp) {
    const double hi = std::max(bath_temp, spin_temp);
    const double lo = std::min(bath_temp, spin_temp);
    if (hi == 0.0) return 0.0;
    if (std::isinf(hi)) return 1.0;
    return 1.0 - lo / hi;
}

inline EfficiencyReport efficiency(const WorkBreakdown& b, double bath_temp,
                                   double spin_temp) {
    EfficiencyReport rep;
    rep.carnot = carnot_bound(bath_temp, spin_temp);
    std::tie(rep.slack_spin, rep.slack_bath) =
        check_restrictions(b, bath_temp, spin_temp);
    const double hi = std::max(bath_temp, spin_temp);
    const bool equal = std::abs(bath_temp - spin_temp) <= 1e-9 * hi;
    rep.regime = equal ? EfficiencyReport::Regime::Equal
                 : spin_temp > bath_temp ? EfficiencyReport::Regime::SpinHotter
                                         : EfficiencyReport::Regime::BathHotter;
    rep.extraction = b.total < 0.0;
    if (!rep.extraction) return rep;  // eta stays 0
    if (equal)
        throw DegenerateTemperaturesError(
            "efficiency: extraction at equal temperatures violates Thomson's "
            "second law; upstream computation is broken");
    const double w = -b.total;
    if (rep.regime == EfficiencyReport::Regime::SpinHotter)
        rep.eta = w / std::abs(b.spin_part);
    else
        rep.eta = w / (w + std::abs(b.spin_part));
    return rep;
}

}  // namespace spinwork
