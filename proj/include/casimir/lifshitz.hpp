#pragma once

#include <cmath>
#include <limits>

#include "casimir/dispersion.hpp"

namespace casimir {

// Resolution of the delicate zero-frequency TE mode: take it from the model's
// dispersion relation, or force the ideal-metal (B0 = 1) or modified
// ideal-metal (B0 = 0) prescription.
enum class ZeroModePolicy { FromModel, ForceIM, ForceMIM };

struct LifshitzQuery {
    double gap;          // m
    double temperature;  // K
    DispersionModel model;
    ZeroModePolicy zero_mode = ZeroModePolicy::FromModel;
    double quad_rel_tol = 1e-9;
    double sum_rel_tol = 1e-8;
};

struct ReflectionInput {
    double epsilon;  // >= 1, or +inf sentinel
    double p;        // >= 1
};

struct Reflection {
    double A;  // TM, squared reflection coefficient
    double B;  // TE
};

// A = ((eps p - s)/(eps p + s))^2, B = ((s - p)/(s + p))^2, s^2 = eps - 1 + p^2,
// both in [0,1]; the infinite-eps sentinel gives (1,1).
Reflection reflection_coefficients(const ReflectionInput& r);

// zeta_m = 2 pi m k_B T / hbar
double matsubara_frequency(int m, double T);

struct TermValue {
    double value = 0.0;       // weighted contribution (half weight at m = 0)
    double quad_error = 0.0;  // absolute
};

// Contribution of Matsubara index m to the pressure (Pa) or free energy per
// area (J/m^2). m = 0 is evaluated in the wavenumber variable with the
// closed-form limiting coefficients A0 and B0(q); m >= 1 in p = qc/zeta_m.
TermValue term_pressure(const DispersionModel& model, double a, double T, int m,
                        ZeroModePolicy policy, double quad_rel_tol);
TermValue term_free_energy(const DispersionModel& model, double a, double T, int m,
                           ZeroModePolicy policy, double quad_rel_tol);

struct ThermoResult {
    double pressure = std::numeric_limits<double>::quiet_NaN();     // Pa
    double free_energy = std::numeric_limits<double>::quiet_NaN();  // J/m^2
    double entropy = std::numeric_limits<double>::quiet_NaN();      // J/(K m^2)
    double quad_error_estimate = 0.0;
    double truncation_error_estimate = 0.0;
    long terms_used = 0;
    bool converged = true;
};

// Matsubara sum with an analytic geometric tail bound; hard cap 10^6 terms
// (converged flag cleared when hit). Deterministic for fixed tolerances.
ThermoResult pressure(const LifshitzQuery& query);
ThermoResult free_energy(const LifshitzQuery& query);

// T = 0 limit: continuum frequency integral, compactified by
// zeta = (c/2a) u/(1-u).
double pressure_T0(const DispersionModel& model, double a,
                   double quad_rel_tol = 1e-9);

void validate(const LifshitzQuery& query);

}  // namespace casimir
