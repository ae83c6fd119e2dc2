#pragma once

namespace casimir {

// Low-temperature expansion parameter x = 2 a k_B T / (hbar c).
struct AsymptoticRegime {
    double x;
    bool valid;  // x below the low-temperature threshold
};

AsymptoticRegime asymptotic_regime(double a, double T, double threshold = 0.3);

struct LowTExpansion {
    double pressure;     // Pa
    double free_energy;  // J/m^2
    double entropy;      // J/(K m^2)
    double x;
    bool regime_valid;   // advisory; the closed forms are evaluated regardless
};

// -pi^2 hbar c / (240 a^4)
double casimir_pressure_ideal_T0(double a);

// Ideal-metal low-temperature closed forms:
//   f = f0 (1 + x^4/3)
//   F = -(pi^2 hbar c / 720 a^3)(1 + (45 zeta3/pi^3) x^3 - x^4)
//   S = (3 k_B zeta3 / 2 pi)(k_B T/hbar c)^2 - (4 k_B pi^2 a/45)(k_B T/hbar c)^3
LowTExpansion im_lowT(double a, double T, double threshold = 0.3);

// Modified-ideal-metal forms: the IM values plus
//   +k_B T zeta3/(8 pi a^3) to f, +k_B T zeta3/(16 pi a^2) to F,
//   -k_B zeta3/(16 pi a^2) to S.
LowTExpansion mim_lowT(double a, double T, double threshold = 0.3);

enum class MetalModel { IM, MIM };

// High-aT limit where only the m = 0 term survives:
// -k_B T zeta3/(4 pi a^3) for IM, half that for MIM.
double classical_limit_pressure(double a, double T, MetalModel mode);

// S(0) of the MIM closed forms, -k_B zeta3/(16 pi a^2).
double mim_entropy_defect(double a);

}  // namespace casimir
