#include "casimir/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"

#include "json.hpp"

namespace casimir {

DerivResult differentiate(const std::function<double(double)>& f, double x,
                          double relative_step, int orders) {
    if (!(relative_step >= 1e-6 && relative_step <= 1e-2))
        throw std::domain_error("differentiate: relative_step must be in [1e-6, 1e-2]");
    if (orders < 1) throw std::domain_error("differentiate: orders must be >= 1");
    const double scale = x != 0.0 ? std::abs(x) : 1.0;
    double h = relative_step * scale;

    // Neville tableau over step halving; central differences are even in h,
    // so each level gains two orders.
    std::vector<double> row;
    double prev_best = 0.0, best = 0.0, err = 0.0;
    for (int k = 0; k <= orders; ++k) {
        const double hk = h / std::pow(2.0, k);
        double d = (f(x + hk) - f(x - hk)) / (2.0 * hk);
        std::vector<double> next(k + 1);
        next[0] = d;
        double factor = 4.0;
        for (int j = 1; j <= k; ++j) {
            next[j] = (factor * next[j - 1] - row[j - 1]) / (factor - 1.0);
            factor *= 4.0;
        }
        prev_best = best;
        best = next[k];
        if (k > 0) err = std::abs(best - prev_best);
        row = std::move(next);
    }
    return {best, err};
}

DerivResult entropy(const LifshitzQuery& query, const DerivativeSpec& spec) {
    validate(query);
    if (query.temperature <= 0.0)
        throw std::domain_error("entropy: T must be > 0");
    const double T = query.temperature;
    const double h0 = spec.relative_step * T;
    if (T - h0 <= 0.0)
        throw std::domain_error("entropy: differentiation step collides with T = 0");
    auto F = [&](double t) {
        LifshitzQuery q = query;
        q.temperature = t;
        return free_energy(q).free_energy;
    };
    DerivResult d = differentiate(F, T, spec.relative_step, spec.orders);
    return {-d.value, d.error};
}

bool AuditReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AuditCheck& c) { return c.pass || !c.applicable; });
}

namespace {

std::string point_str(double a, double T) {
    std::ostringstream os;
    os << "a=" << a << " m, T=" << T << " K";
    return os.str();
}

}  // namespace

AuditReport audit_pressure_free_energy(const DispersionModel& model,
                                       const std::vector<double>& gaps,
                                       const std::vector<double>& temperatures,
                                       ZeroModePolicy policy, double quad_rel_tol,
                                       double sum_rel_tol) {
    AuditReport rep{"pressure_free_energy", {}};
    for (double a : gaps) {
        for (double T : temperatures) {
            LifshitzQuery q{a, T, model, policy, quad_rel_tol, sum_rel_tol};
            ThermoResult p = pressure(q);
            const double h = 1e-4 * a;
            auto F = [&](double gap) {
                LifshitzQuery qa = q;
                qa.gap = gap;
                return free_energy(qa);
            };
            ThermoResult Fp = F(a + h), Fm = F(a - h);
            const double f_from_F = -(Fp.free_energy - Fm.free_energy) / (2.0 * h);
            const double scale = std::abs(p.pressure);
            const double noise = (Fp.quad_error_estimate + Fp.truncation_error_estimate +
                                  Fm.quad_error_estimate + Fm.truncation_error_estimate) /
                                 (2.0 * h);
            const double engine_err =
                p.quad_error_estimate + p.truncation_error_estimate + noise;
            const double tol = std::max(1e-4 * scale, engine_err);
            AuditCheck c;
            c.name = "dF_da_matches_pressure";
            c.inputs = point_str(a, T);
            c.computed = std::abs(f_from_F - p.pressure);
            c.tolerance = tol;
            c.pass = scale == 0.0 ? c.computed == 0.0 : c.computed <= tol;
            rep.checks.push_back(c);
        }
    }
    return rep;
}

AuditReport audit_fig3_shape(const DispersionModel& model, double T,
                             const std::vector<double>& a_grid,
                             double quad_rel_tol, double sum_rel_tol) {
    if (a_grid.size() < 30)
        throw std::invalid_argument("audit_fig3_shape: need at least 30 grid points");
    if (!std::is_sorted(a_grid.begin(), a_grid.end()))
        throw std::invalid_argument("audit_fig3_shape: grid must be ascending");
    if (a_grid.front() > 1.01e-6 || a_grid.back() < 6.99e-6)
        throw std::invalid_argument("audit_fig3_shape: grid must cover [1, 7] um");

    std::vector<double> g(a_grid.size());
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
        LifshitzQuery q{a_grid[i], T, model, ZeroModePolicy::FromModel, quad_rel_tol,
                        sum_rel_tol};
        const double a = a_grid[i];
        g[i] = a * a * a * a * std::abs(pressure(q).pressure);
    }

    AuditReport rep{"fig3_shape", {}};
    auto monotone = [&](double lo, double hi, bool decreasing) {
        bool ok = true;
        double worst = 0.0;
        for (std::size_t i = 1; i < a_grid.size(); ++i) {
            if (a_grid[i - 1] < lo || a_grid[i] > hi) continue;
            const double d = g[i] - g[i - 1];
            if ((decreasing && d >= 0.0) || (!decreasing && d <= 0.0)) {
                ok = false;
                worst = std::max(worst, std::abs(d));
            }
        }
        AuditCheck c;
        c.name = decreasing ? "decreasing_1_3_um" : "increasing_4p5_7_um";
        c.inputs = point_str(0.0, T);
        c.computed = worst;
        c.tolerance = 0.0;
        c.pass = ok;
        return c;
    };
    rep.checks.push_back(monotone(1e-6, 3.000001e-6, true));
    rep.checks.push_back(monotone(4.499999e-6, 7.0000001e-6, false));

    const std::size_t imin = static_cast<std::size_t>(
        std::min_element(g.begin(), g.end()) - g.begin());
    AuditCheck cmin;
    cmin.name = "minimum_in_2p5_4p5_um";
    cmin.inputs = point_str(a_grid[imin], T);
    cmin.computed = a_grid[imin];
    cmin.pass = a_grid[imin] > 2.5e-6 && a_grid[imin] < 4.5e-6;
    rep.checks.push_back(cmin);

    // classical MIM line a^4 |f| = slope * a; fit the intercept over the
    // increasing branch and require every point there within 5% of the fit
    const double slope = constants.k_B * T * constants.zeta3 / (8.0 * M_PI);
    double b = 0.0;
    int n = 0;
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
        if (a_grid[i] < 4.499999e-6) continue;
        b += g[i] - slope * a_grid[i];
        ++n;
    }
    AuditCheck cline;
    cline.name = "classical_line_within_5pct";
    cline.inputs = "a >= 4.5 um";
    cline.tolerance = 0.05;
    if (n == 0) {
        cline.pass = false;
        cline.note = "no grid points on the increasing branch";
    } else {
        b /= n;
        double worst = 0.0;
        for (std::size_t i = 0; i < a_grid.size(); ++i) {
            if (a_grid[i] < 4.499999e-6) continue;
            worst = std::max(worst, std::abs(g[i] - (slope * a_grid[i] + b)) / g[i]);
        }
        cline.computed = worst;
        cline.pass = worst <= 0.05;
    }
    rep.checks.push_back(cline);
    return rep;
}

AuditReport audit_classical_limit(const DispersionModel& model, double a, double T,
                                  ZeroModePolicy policy, double quad_rel_tol,
                                  double sum_rel_tol) {
    AuditReport rep{"classical_limit", {}};
    const double regime =
        2.0 * M_PI * constants.k_B * T * a / (constants.hbar * constants.c);
    if (regime < 5.0) {
        AuditCheck c;
        c.name = "regime";
        c.inputs = point_str(a, T);
        c.computed = regime;
        c.tolerance = 5.0;
        c.pass = false;
        c.applicable = false;
        c.note = "2 pi k_B T a/(hbar c) < 5: not in the classical regime";
        rep.checks.push_back(c);
        return rep;
    }

    LifshitzQuery q{a, T, model, policy, quad_rel_tol, sum_rel_tol};
    ThermoResult full = pressure(q);
    TermValue t0 = term_pressure(model, a, T, 0, policy, quad_rel_tol);

    AuditCheck c1;
    c1.name = "m0_dominates";
    c1.inputs = point_str(a, T);
    c1.computed = std::abs(full.pressure / t0.value - 1.0);
    c1.tolerance = 1e-3;
    c1.pass = c1.computed <= c1.tolerance;
    rep.checks.push_back(c1);

    // closed-form comparison only where the m = 0 coefficients are the
    // IM/MIM ones (plasma keeps a finite TE zero-mode weight)
    double wbar2;
    double A0;
    switch (policy) {
        case ZeroModePolicy::ForceIM:
            wbar2 = std::numeric_limits<double>::infinity();
            A0 = 1.0;
            break;
        case ZeroModePolicy::ForceMIM:
            wbar2 = 0.0;
            A0 = 1.0;
            break;
        default:
            wbar2 = te_zero_mode_weight(model, T);
            A0 = tm_zero_mode_coefficient(model);
            break;
    }
    AuditCheck c2;
    c2.name = "m0_matches_closed_form";
    c2.inputs = point_str(a, T);
    if (A0 != 1.0 || (wbar2 != 0.0 && !std::isinf(wbar2))) {
        c2.applicable = false;
        c2.note = "m = 0 coefficients are not the IM/MIM ones";
    } else {
        const double expect = classical_limit_pressure(
            a, T, std::isinf(wbar2) ? MetalModel::IM : MetalModel::MIM);
        c2.computed = std::abs(t0.value - expect);
        c2.tolerance = std::max(10.0 * t0.quad_error, 1e-9 * std::abs(expect));
        c2.pass = c2.computed <= c2.tolerance;
    }
    rep.checks.push_back(c2);
    return rep;
}

double extrapolate_to_zero_cubic_noslope(const std::vector<double>& x,
                                         const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw std::invalid_argument("extrapolate_to_zero_cubic_noslope: need 3 samples");
    // y = s0 + c2 x^2 + c3 x^3 through the first three samples
    const double x0 = x[0], x1 = x[1], x2 = x[2];
    // solve the 3x3 system by elimination
    const double a0 = x0 * x0, b0 = a0 * x0;
    const double a1 = x1 * x1, b1 = a1 * x1;
    const double a2 = x2 * x2, b2 = a2 * x2;
    // subtract rows to eliminate s0
    const double A1 = a1 - a0, B1 = b1 - b0, Y1 = y[1] - y[0];
    const double A2 = a2 - a0, B2 = b2 - b0, Y2 = y[2] - y[0];
    const double det = A1 * B2 - A2 * B1;
    const double c2 = (Y1 * B2 - Y2 * B1) / det;
    const double c3 = (A1 * Y2 - A2 * Y1) / det;
    return y[0] - c2 * a0 - c3 * b0;
}

double extrapolate_to_zero_polynomial(const std::vector<double>& x,
                                      const std::vector<double>& y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("extrapolate_to_zero_polynomial: empty input");
    std::vector<double> p = y;
    const std::size_t n = x.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i + j < n; ++i)
            p[i] = (x[i + j] * p[i] - x[i] * p[i + 1]) / (x[i + j] - x[i]);
    return p[0];
}

AuditReport audit_mim_entropy_defect(double a, double quad_rel_tol,
                                     double sum_rel_tol) {
    AuditReport rep{"mim_entropy_defect", {}};
    const std::vector<double> Ts{20.0, 10.0, 5.0};
    std::vector<double> Ss;
    for (double T : Ts) {
        LifshitzQuery q{a, T, DispersionModel{ModifiedIdealMetal{}},
                        ZeroModePolicy::FromModel, quad_rel_tol, sum_rel_tol};
        DerivativeSpec spec{DerivativeSpec::Variable::Temperature, 1e-2, 2};
        Ss.push_back(entropy(q, spec).value);
    }
    const double s0 = extrapolate_to_zero_cubic_noslope(Ts, Ss);
    const double expect = mim_entropy_defect(a);
    AuditCheck c;
    c.name = "S0_equals_minus_kB_zeta3_16pi_a2";
    c.inputs = "a=" + std::to_string(a) + " m, T in {20,10,5} K";
    c.computed = std::abs(s0 / expect - 1.0);
    c.tolerance = 1e-3;
    c.pass = c.computed <= c.tolerance;
    rep.checks.push_back(c);
    return rep;
}

AuditReport audit_negative_entropy_window(const DispersionModel& model, double a,
                                          const std::vector<double>& T_grid) {
    AuditReport rep{"negative_entropy_window", {}};
    bool neg = false, pos = false;
    double Tneg = 0.0;
    for (double T : T_grid) {
        LifshitzQuery q{a, T, model, ZeroModePolicy::FromModel, 1e-9, 1e-8};
        DerivativeSpec spec{DerivativeSpec::Variable::Temperature, 1e-2, 2};
        const double S = entropy(q, spec).value;
        if (S < 0.0) {
            neg = true;
            Tneg = T;
        }
        if (S > 0.0) pos = true;
    }
    AuditCheck c;
    c.name = "entropy_negative_somewhere";
    c.inputs = "a=" + std::to_string(a) + " m";
    c.computed = Tneg;
    c.pass = neg;
    c.note = pos ? "sign change present on grid" : "no positive values on grid";
    rep.checks.push_back(c);
    return rep;
}

void write_report_csv(const AuditReport& report, std::ostream& out) {
    out << "audit,check,inputs,computed,tolerance,pass,applicable,note\n";
    char buf[64];
    for (const auto& c : report.checks) {
        auto fmt = [&](double v) {
            std::snprintf(buf, sizeof buf, "%.16e", v);
            return std::string(buf);
        };
        std::string inputs = c.inputs, note = c.note;
        std::replace(inputs.begin(), inputs.end(), ',', ';');
        std::replace(note.begin(), note.end(), ',', ';');
        out << report.audit << ',' << c.name << ',' << inputs << ',' << fmt(c.computed)
            << ',' << fmt(c.tolerance) << ',' << (c.pass ? "true" : "false") << ','
            << (c.applicable ? "true" : "false") << ',' << note << '\n';
    }
}

void write_report_json(const AuditReport& report, std::ostream& out) {
    nlohmann::json j;
    j["audit"] = report.audit;
    j["passed"] = report.passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"inputs", c.inputs},
                               {"computed", c.computed},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass},
                               {"applicable", c.applicable},
                               {"note", c.note}});
    }
    out << j.dump(2) << '\n';
}

}  // namespace casimir
