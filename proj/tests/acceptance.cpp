// End-to-end acceptance checks with pinned tolerances. Each criterion prints
// one PASS/FAIL line; the exit status is the number of failed criteria.
// Usage: acceptance [N ...]  (default: run all nine)

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/sweep.hpp"
#include "casimir/thermo.hpp"

using namespace casimir;

namespace {

const double kWpGold = ev_to_angular_frequency(9.03);
const double kNuGold = ev_to_angular_frequency(0.0345);

DispersionModel gold() { return make_drude(kWpGold, kNuGold); }

struct Criterion {
    std::string what;
    std::function<bool(std::string&)> run;
};

bool rel_ok(double got, double expect, double tol, std::string& detail,
            const char* label) {
    const double rel = std::abs(got / expect - 1.0);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s rel dev %.3e (tol %.1e)", label, rel, tol);
    if (!detail.empty()) detail += "; ";
    detail += buf;
    return rel <= tol;
}

// 1: zero-temperature ideal-metal pressure against the closed form.
bool criterion1(std::string& d) {
    bool ok = true;
    for (double a : {0.1e-6, 1e-6, 10e-6}) {
        const double got = pressure_T0(DispersionModel{IdealMetal{}}, a);
        char label[32];
        std::snprintf(label, sizeof label, "a=%.1fum", a * 1e6);
        ok &= rel_ok(got, casimir_pressure_ideal_T0(a), 1e-6, d, label);
    }
    ok &= rel_ok(pressure_T0(DispersionModel{IdealMetal{}}, 1e-6), -1.300e-3, 1e-3, d,
                 "magnitude@1um");
    return ok;
}

// 2: the IM/MIM zero-mode split equals -k_B T zeta3/(8 pi a^3).
bool criterion2(std::string& d) {
    bool ok = true;
    for (double a : {0.5e-6, 1e-6, 5e-6}) {
        for (double T : {100.0, 300.0, 900.0}) {
            LifshitzQuery qim{a, T, DispersionModel{IdealMetal{}},
                              ZeroModePolicy::FromModel, 1e-12, 1e-11};
            LifshitzQuery qmim = qim;
            qmim.model = ModifiedIdealMetal{};
            const double split = pressure(qim).pressure - pressure(qmim).pressure;
            const double expect =
                -constants.k_B * T * constants.zeta3 / (8.0 * M_PI * a * a * a);
            char label[48];
            std::snprintf(label, sizeof label, "a=%.1fum T=%.0fK", a * 1e6, T);
            ok &= rel_ok(split, expect, 1e-8, d, label);
        }
    }
    return ok;
}

// 3: low-temperature thermal correction to the ideal-metal pressure is x^4/3.
bool criterion3(std::string& d) {
    bool ok = true;
    const double a = 1e-6;
    for (double x : {0.1, 0.2}) {
        const double T = x * constants.hbar * constants.c / (2.0 * a * constants.k_B);
        LifshitzQuery q{a, T, DispersionModel{IdealMetal{}}, ZeroModePolicy::FromModel,
                        1e-11, 1e-10};
        const double corr = pressure(q).pressure / casimir_pressure_ideal_T0(a) - 1.0;
        const double expect = x * x * x * x / 3.0;
        char label[32];
        std::snprintf(label, sizeof label, "x=%.1f", x);
        ok &= rel_ok(corr, expect, 0.1, d, label);
    }
    return ok;
}

// 4: classical (high-aT) limit for both metal idealizations at 25 um, 300 K.
bool criterion4(std::string& d) {
    auto im = audit_classical_limit(DispersionModel{IdealMetal{}}, 25e-6, 300.0);
    auto mim = audit_classical_limit(DispersionModel{ModifiedIdealMetal{}}, 25e-6, 300.0);
    d = "IM audit " + std::string(im.passed() ? "ok" : "FAILED") + ", MIM audit " +
        std::string(mim.passed() ? "ok" : "FAILED");
    return im.passed() && mim.passed();
}

// 5: MIM entropy extrapolated to T = 0 matches -k_B zeta3/(16 pi a^2).
bool criterion5(std::string& d) {
    auto rep = audit_mim_entropy_defect(1e-6);
    for (const auto& c : rep.checks) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: %.3e (tol %.1e) %s", c.name.c_str(),
                      c.computed, c.tolerance, c.pass ? "ok" : "FAILED");
        if (!d.empty()) d += "; ";
        d += buf;
    }
    return rep.passed();
}

// 6: Drude entropy behavior toward T = 0 (constant relaxation frequency).
// 6a: |S| decreases monotonically as T drops through {20,10,5,2} K.
// 6b: polynomial extrapolation of S to T = 0 lands within 1% of zero on the
//     scale of the MIM defect. With a temperature-independent nu the TE
//     reflection stays near unity down to millikelvin temperatures, so the
//     sampled window cannot see the turnaround; 6b records that honestly.
bool criterion6(std::string& d) {
    const double a = 1e-6;
    std::vector<double> Ts{20.0, 10.0, 5.0, 2.0};
    std::vector<double> Ss;
    DerivativeSpec spec;
    spec.relative_step = 1e-2;
    for (double T : Ts) {
        LifshitzQuery q{a, T, gold(), ZeroModePolicy::FromModel, 1e-10, 1e-9};
        Ss.push_back(entropy(q, spec).value);
    }
    bool mono = true;
    for (std::size_t i = 1; i < Ss.size(); ++i) mono &= std::abs(Ss[i]) < std::abs(Ss[i - 1]);
    const double s0 = extrapolate_to_zero_polynomial(Ts, Ss);
    const double scale = std::abs(mim_entropy_defect(a));
    const double frac = std::abs(s0) / scale;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "6a monotone |S| decrease: %s; 6b |S(0)|/defect = %.3f (tol 0.01): %s",
                  mono ? "ok" : "FAILED", frac, frac < 0.01 ? "ok" : "FAILED");
    d = buf;
    return mono && frac < 0.01;
}

// 7: shape of a^4 |f(a)| for Drude gold at 300 K over 1..7 um.
bool criterion7(std::string& d) {
    std::vector<double> grid;
    for (int i = 0; i < 61; ++i) grid.push_back(1e-6 + 6e-6 * i / 60.0);
    auto rep = audit_fig3_shape(gold(), 300.0, grid);
    int fails = 0;
    for (const auto& c : rep.checks)
        if (c.applicable && !c.pass) ++fails;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu checks, %d failed", rep.checks.size(), fails);
    d = buf;
    return rep.passed();
}

// 8: thermodynamic consistency, f = -dF/da from the engine and
// S = -dF/dT on the closed forms.
bool criterion8(std::string& d) {
    auto im = audit_pressure_free_energy(DispersionModel{IdealMetal{}},
                                         {0.5e-6, 1e-6, 2e-6}, {150.0, 300.0});
    auto dr = audit_pressure_free_energy(gold(), {1e-6, 3e-6}, {300.0});
    bool ok = im.passed() && dr.passed();
    d = "engine -dF/da audits " + std::string(ok ? "ok" : "FAILED");
    const double a = 1e-6, T = 50.0;
    auto F = [&](double t) { return mim_lowT(a, t).free_energy; };
    auto dv = differentiate(F, T, 1e-4, 3);
    ok &= rel_ok(-dv.value, mim_lowT(a, T).entropy, 1e-6, d, "closed-form S=-dF/dT");
    return ok;
}

// 9: bitwise determinism of sweep and audit-report serialization.
bool criterion9(std::string& d) {
    SweepSpec s;
    s.axis = SweepAxis::Gap;
    s.start = 1e-6;
    s.stop = 7e-6;
    s.points = 13;
    s.spacing = SweepSpacing::Log;
    s.fixed = 300.0;
    s.model = gold();
    s.outputs.pressure = true;
    s.outputs.free_energy = true;
    s.outputs.a4f = true;
    std::ostringstream o1, o2, o3;
    s.threads = 1;
    run_sweep(s, o1);
    run_sweep(s, o2);
    s.threads = 4;
    run_sweep(s, o3);
    const bool sweep_ok = o1.str() == o2.str() && o1.str() == o3.str();

    auto rep1 = audit_classical_limit(DispersionModel{ModifiedIdealMetal{}}, 25e-6, 300.0);
    auto rep2 = audit_classical_limit(DispersionModel{ModifiedIdealMetal{}}, 25e-6, 300.0);
    std::ostringstream c1, c2;
    write_report_csv(rep1, c1);
    write_report_csv(rep2, c2);
    const bool audit_ok = c1.str() == c2.str();

    d = std::string("sweep bytes ") + (sweep_ok ? "identical" : "DIFFER") +
        ", audit bytes " + (audit_ok ? "identical" : "DIFFER");
    return sweep_ok && audit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::map<int, Criterion> criteria{
        {1, {"T=0 ideal-metal pressure vs closed form (rel 1e-6)", criterion1}},
        {2, {"IM/MIM split vs -kT zeta3/(8 pi a^3) (rel 1e-8)", criterion2}},
        {3, {"low-T thermal correction = x^4/3 (10% of correction)", criterion3}},
        {4, {"classical limit audits at 25 um, 300 K", criterion4}},
        {5, {"MIM entropy defect extrapolation (rel 1e-3)", criterion5}},
        {6, {"Drude low-T entropy: monotone decrease and T->0 extrapolation", criterion6}},
        {7, {"a^4|f| shape and classical line over 1..7 um", criterion7}},
        {8, {"thermodynamic consistency f=-dF/da, S=-dF/dT", criterion8}},
        {9, {"bitwise determinism of sweeps and audit reports", criterion9}},
    };

    std::vector<int> to_run;
    for (int i = 1; i < argc; ++i) to_run.push_back(std::atoi(argv[i]));
    if (to_run.empty())
        for (const auto& [n, c] : criteria) to_run.push_back(n);

    int failures = 0;
    for (int n : to_run) {
        auto it = criteria.find(n);
        if (it == criteria.end()) {
            std::fprintf(stderr, "unknown criterion %d\n", n);
            return 64;
        }
        std::string detail;
        bool ok = false;
        try {
            ok = it->second.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n,
                    it->second.what.c_str(), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
