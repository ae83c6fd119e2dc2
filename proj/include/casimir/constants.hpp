#pragma once

#include <stdexcept>

namespace casimir {

// CODATA 2018 SI values. All internal computation is in SI; electron-volts
// enter only at input boundaries.
struct PhysicalConstants {
    double hbar;   // reduced Planck constant, J s
    double c;      // speed of light in vacuum, m/s
    double k_B;    // Boltzmann constant, J/K
    double eV;     // electron-volt, J
    double zeta3;  // Riemann zeta(3)
};

inline constexpr PhysicalConstants constants{
    1.054571817e-34,
    299792458.0,
    1.380649e-23,
    1.602176634e-19,
    1.2020569031595942,
};

inline double ev_to_angular_frequency(double energy_ev) {
    if (energy_ev < 0.0)
        throw std::domain_error("ev_to_angular_frequency: negative energy");
    return energy_ev * constants.eV / constants.hbar;
}

inline double angular_frequency_to_ev(double omega) {
    if (omega < 0.0)
        throw std::domain_error("angular_frequency_to_ev: negative frequency");
    return omega * constants.hbar / constants.eV;
}

}  // namespace casimir
