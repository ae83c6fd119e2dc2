#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// beyond this eps the coefficients are 1 to well below double round-off
constexpr double kEpsIdealCutoff = 1e40;
// exp(-kExpCutoff) is negligible against every tolerance in use
constexpr double kExpCutoff = 45.0;
constexpr long kMaxTerms = 1000000;

struct ZeroMode {
    double A0;     // TM coefficient, [0,1]
    double wbar2;  // lim zeta^2 (eps-1), (rad/s)^2; +inf forces B0 = 1
};

ZeroMode resolve_zero_mode(const DispersionModel& model, double T,
                           ZeroModePolicy policy) {
    switch (policy) {
        case ZeroModePolicy::ForceIM: return {1.0, kInf};
        case ZeroModePolicy::ForceMIM: return {1.0, 0.0};
        case ZeroModePolicy::FromModel:
        default:
            return {tm_zero_mode_coefficient(model), te_zero_mode_weight(model, T)};
    }
}

double te_zero_coefficient(double q, double wbar2) {
    if (std::isinf(wbar2)) return 1.0;
    if (wbar2 <= 0.0) return 0.0;
    const double qc = q * constants.c;
    const double w = std::sqrt(qc * qc + wbar2);
    const double r = wbar2 / ((w + qc) * (w + qc));
    return r * r;
}

// mode sum kernel, guarded against the integrable A y -> 1 endpoint
double mode_sum(double A, double B, double y) {
    double r = 0.0;
    if (A > 0.0) {
        const double d = std::max(1.0 - A * y, 1e-12);
        r += A * y / d;
    }
    if (B > 0.0) {
        const double d = std::max(1.0 - B * y, 1e-12);
        r += B * y / d;
    }
    return r;
}

double mode_log(double A, double B, double y) {
    double r = 0.0;
    if (A > 0.0) r += std::log1p(-std::min(A * y, 1.0 - 1e-12));
    if (B > 0.0) r += std::log1p(-std::min(B * y, 1.0 - 1e-12));
    return r;
}

// upper integration limit for integrands ~ p^2 exp(-tau p) starting at p = 1
double p_cutoff(double tau) {
    double P = 1.0 + (kExpCutoff + 5.0) / tau;
    // absorb the polynomial growth of the prefactor
    P = 1.0 + (kExpCutoff + 2.0 * std::log(P) + 5.0) / tau;
    return P;
}

TermValue zero_term(const DispersionModel& model, double a, double T,
                    ZeroModePolicy policy, double quad_rel_tol, bool for_pressure) {
    const ZeroMode zm = resolve_zero_mode(model, T, policy);
    if (zm.A0 == 0.0 && zm.wbar2 == 0.0) return {};
    const double Q = kExpCutoff / (2.0 * a);
    auto f = [&](double q) {
        const double y = std::exp(-2.0 * q * a);
        const double B0 = te_zero_coefficient(q, zm.wbar2);
        return for_pressure ? q * q * mode_sum(zm.A0, B0, y)
                            : q * mode_log(zm.A0, B0, y);
    };
    QuadResult I = integrate_adaptive(f, decay_breakpoints(0.0, Q, 0.5 / a),
                                      quad_rel_tol);
    const double pref = for_pressure ? -constants.k_B * T / (2.0 * M_PI)
                                     : constants.k_B * T / (4.0 * M_PI);
    return {pref * I.value, std::abs(pref) * I.error};
}

TermValue finite_term(const DispersionModel& model, double a, double T, int m,
                      double quad_rel_tol, bool for_pressure) {
    const double zeta_m = matsubara_frequency(m, T);
    const double tau = 2.0 * zeta_m * a / constants.c;
    if (tau > 745.0) return {};  // exp underflows; term is identically 0 in double
    const double eps = permittivity(model, zeta_m, T);
    const bool ideal = std::isinf(eps) || eps > kEpsIdealCutoff;
    auto f = [&](double p) {
        double A = 1.0, B = 1.0;
        if (!ideal) {
            const Reflection r = reflection_coefficients({eps, p});
            A = r.A;
            B = r.B;
        }
        const double y = std::exp(-tau * p);
        return for_pressure ? p * p * mode_sum(A, B, y) : p * mode_log(A, B, y);
    };
    const double P = p_cutoff(tau);
    QuadResult I = integrate_adaptive(f, decay_breakpoints(1.0, P, 1.0 / tau),
                                      quad_rel_tol);
    const double zc = zeta_m / constants.c;
    const double pref = for_pressure
                            ? -constants.k_B * T / M_PI * zc * zc * zc
                            : constants.k_B * T / (2.0 * M_PI) * zc * zc;
    return {pref * I.value, std::abs(pref) * I.error};
}

// analytic bound on |term m| assuming A, B <= 1
double term_bound(double T, double a, long m, double tau1, bool for_pressure) {
    const double tau = m * tau1;
    if (tau > 700.0) return 0.0;
    const double e = std::exp(-tau);
    const double zc = m * tau1 / (2.0 * a);  // zeta_m / c
    if (for_pressure) {
        const double integral = e * (1.0 / tau + 2.0 / (tau * tau) + 2.0 / (tau * tau * tau));
        return constants.k_B * T / M_PI * zc * zc * zc * 2.0 * integral / (1.0 - e);
    }
    const double integral = e * (1.0 / tau + 1.0 / (tau * tau));
    return constants.k_B * T / (2.0 * M_PI) * zc * zc * 2.0 * integral / (1.0 - e);
}

// bound on the tail sum over indices >= m
double tail_bound(double T, double a, long m, double tau1, bool for_pressure) {
    const double b = term_bound(T, a, m, tau1, for_pressure);
    if (b == 0.0) return 0.0;
    const double growth = static_cast<double>(m + 1) / static_cast<double>(m);
    const double rho = (for_pressure ? growth * growth * growth : growth * growth) *
                       std::exp(-tau1);
    if (rho >= 1.0) return kInf;
    return b / (1.0 - rho);
}

ThermoResult matsubara_sum(const LifshitzQuery& q, bool for_pressure) {
    validate(q);
    if (q.temperature <= 0.0)
        throw std::domain_error("lifshitz: T must be > 0 (use pressure_T0 at T = 0)");
    const double a = q.gap, T = q.temperature;
    const double tau1 = 2.0 * matsubara_frequency(1, T) * a / constants.c;

    ThermoResult res;
    TermValue t0 = for_pressure
                       ? term_pressure(q.model, a, T, 0, q.zero_mode, q.quad_rel_tol)
                       : term_free_energy(q.model, a, T, 0, q.zero_mode, q.quad_rel_tol);
    double sum = t0.value;
    res.quad_error_estimate = t0.quad_error;
    res.terms_used = 1;

    long m = 1;
    for (;; ++m) {
        if (m > kMaxTerms) {
            res.converged = false;
            res.truncation_error_estimate =
                tail_bound(T, a, m, tau1, for_pressure);
            break;
        }
        TermValue t = for_pressure
                          ? term_pressure(q.model, a, T, static_cast<int>(m),
                                          q.zero_mode, q.quad_rel_tol)
                          : term_free_energy(q.model, a, T, static_cast<int>(m),
                                             q.zero_mode, q.quad_rel_tol);
        sum += t.value;
        res.quad_error_estimate += t.quad_error;
        ++res.terms_used;
        const double tail = tail_bound(T, a, m + 1, tau1, for_pressure);
        if (tail <= q.sum_rel_tol * std::abs(sum)) {
            res.truncation_error_estimate = tail;
            break;
        }
    }
    if (for_pressure) res.pressure = sum;
    else res.free_energy = sum;
    return res;
}

}  // namespace

void validate(const LifshitzQuery& q) {
    if (!(q.gap > 0.0)) throw std::domain_error("lifshitz: gap must be > 0");
    if (!(q.temperature >= 0.0)) throw std::domain_error("lifshitz: T must be >= 0");
    if (!(q.quad_rel_tol > 0.0 && q.quad_rel_tol <= 1e-3))
        throw std::domain_error("lifshitz: quad_rel_tol must be in (0, 1e-3]");
    if (!(q.sum_rel_tol > 0.0 && q.sum_rel_tol <= 1e-3))
        throw std::domain_error("lifshitz: sum_rel_tol must be in (0, 1e-3]");
}

double matsubara_frequency(int m, double T) {
    if (m < 0) throw std::domain_error("matsubara_frequency: m must be >= 0");
    if (T < 0.0) throw std::domain_error("matsubara_frequency: T must be >= 0");
    return 2.0 * M_PI * m * constants.k_B * T / constants.hbar;
}

Reflection reflection_coefficients(const ReflectionInput& r) {
    const double eps = r.epsilon, p = r.p;
    if (std::isinf(eps) || eps > kEpsIdealCutoff) return {1.0, 1.0};
    if (!(eps >= 1.0)) throw std::domain_error("reflection: eps must be >= 1");
    if (!(p >= 1.0)) throw std::domain_error("reflection: p must be >= 1");
    const double s = std::sqrt(eps - 1.0 + p * p);
    // cancellation-free forms: eps p - s = (eps-1)(p^2(eps+1)-1)/(eps p + s)
    // and s - p = (eps-1)/(s+p)
    const double denA = (eps * p + s) * (eps * p + s);
    const double rA = (eps - 1.0) * (p * p * (eps + 1.0) - 1.0) / denA;
    const double rB = (eps - 1.0) / ((s + p) * (s + p));
    return {rA * rA, rB * rB};
}

TermValue term_pressure(const DispersionModel& model, double a, double T, int m,
                        ZeroModePolicy policy, double quad_rel_tol) {
    if (m == 0) return zero_term(model, a, T, policy, quad_rel_tol, true);
    return finite_term(model, a, T, m, quad_rel_tol, true);
}

TermValue term_free_energy(const DispersionModel& model, double a, double T, int m,
                           ZeroModePolicy policy, double quad_rel_tol) {
    if (m == 0) return zero_term(model, a, T, policy, quad_rel_tol, false);
    return finite_term(model, a, T, m, quad_rel_tol, false);
}

ThermoResult pressure(const LifshitzQuery& query) {
    return matsubara_sum(query, true);
}

ThermoResult free_energy(const LifshitzQuery& query) {
    return matsubara_sum(query, false);
}

double pressure_T0(const DispersionModel& model, double a, double quad_rel_tol) {
    if (!(a > 0.0)) throw std::domain_error("pressure_T0: gap must be > 0");
    const double scale = constants.c / (2.0 * a);
    auto outer = [&](double u) {
        const double zeta = scale * u / (1.0 - u);
        const double jac = scale / ((1.0 - u) * (1.0 - u));
        if (zeta <= 0.0) return 0.0;
        const double tau = 2.0 * zeta * a / constants.c;
        if (tau > 700.0) return 0.0;
        const double eps = permittivity(model, zeta, 0.0);
        if (eps <= 1.0) return 0.0;
        const bool ideal = std::isinf(eps) || eps > kEpsIdealCutoff;
        auto f = [&](double p) {
            double A = 1.0, B = 1.0;
            if (!ideal) {
                const Reflection r = reflection_coefficients({eps, p});
                A = r.A;
                B = r.B;
            }
            return p * p * mode_sum(A, B, std::exp(-tau * p));
        };
        const double P = p_cutoff(tau);
        QuadResult I = integrate_adaptive(f, decay_breakpoints(1.0, P, 1.0 / tau),
                                          0.1 * quad_rel_tol);
        const double zc = zeta / constants.c;
        return zc * zc * zc * I.value * jac;
    };
    QuadResult O = integrate_adaptive(outer, 0.0, 1.0, quad_rel_tol);
    return -constants.hbar / (2.0 * M_PI * M_PI) * O.value;
}

}  // namespace casimir
