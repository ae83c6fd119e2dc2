#include "casimir/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

AsymptoticRegime asymptotic_regime(double a, double T, double threshold) {
    if (!(a > 0.0)) throw std::domain_error("asymptotic_regime: a must be > 0");
    if (!(T >= 0.0)) throw std::domain_error("asymptotic_regime: T must be >= 0");
    const double x = 2.0 * a * constants.k_B * T / (constants.hbar * constants.c);
    return {x, x < threshold};
}

double casimir_pressure_ideal_T0(double a) {
    if (!(a > 0.0)) throw std::domain_error("casimir_pressure_ideal_T0: a must be > 0");
    return -M_PI * M_PI * constants.hbar * constants.c / (240.0 * a * a * a * a);
}

LowTExpansion im_lowT(double a, double T, double threshold) {
    const AsymptoticRegime r = asymptotic_regime(a, T, threshold);
    const double x = r.x;
    const double f0 = casimir_pressure_ideal_T0(a);
    const double x3 = x * x * x, x4 = x3 * x;
    const double pi3 = M_PI * M_PI * M_PI;
    const double F = -M_PI * M_PI * constants.hbar * constants.c / (720.0 * a * a * a) *
                     (1.0 + 45.0 * constants.zeta3 / pi3 * x3 - x4);
    const double kT_hc = constants.k_B * T / (constants.hbar * constants.c);
    const double S = 3.0 * constants.k_B * constants.zeta3 / (2.0 * M_PI) * kT_hc * kT_hc -
                     4.0 * constants.k_B * M_PI * M_PI * a / 45.0 * kT_hc * kT_hc * kT_hc;
    return {f0 * (1.0 + x4 / 3.0), F, S, x, r.valid};
}

LowTExpansion mim_lowT(double a, double T, double threshold) {
    LowTExpansion e = im_lowT(a, T, threshold);
    const double z3 = constants.zeta3;
    e.pressure += constants.k_B * T * z3 / (8.0 * M_PI * a * a * a);
    e.free_energy += constants.k_B * T * z3 / (16.0 * M_PI * a * a);
    e.entropy += mim_entropy_defect(a);
    return e;
}

double classical_limit_pressure(double a, double T, MetalModel mode) {
    if (!(a > 0.0 && T > 0.0))
        throw std::domain_error("classical_limit_pressure: need a > 0, T > 0");
    const double im = -constants.k_B * T * constants.zeta3 / (4.0 * M_PI * a * a * a);
    return mode == MetalModel::IM ? im : 0.5 * im;
}

double mim_entropy_defect(double a) {
    if (!(a > 0.0)) throw std::domain_error("mim_entropy_defect: a must be > 0");
    return -constants.k_B * constants.zeta3 / (16.0 * M_PI * a * a);
}

}  // namespace casimir
