// Casimir pressure / free energy / entropy between parallel plates:
// single-point evaluations, 1-D sweeps, and thermodynamic audits.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/sweep.hpp"
#include "casimir/thermo.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitAuditFailure = 3;

struct ModelOptions {
    std::string name;
    double wp_ev = 9.03;     // gold
    double nu_ev = 0.0345;   // gold
    double wp_rads = 0.0;    // overrides wp_ev when set
    double nu_rads = -1.0;   // overrides nu_ev when >= 0
    std::string nu_table_path;
    double tail_wp_ev = 0.0;
    double tail_nu_ev = 0.0;
    bool no_high_tail = false;
};

struct EngineOptions {
    double quad_tol = 1e-9;
    double sum_tol = 1e-8;
    std::string zero_mode = "model";
};

void add_model_options(CLI::App* cmd, ModelOptions& m) {
    cmd->add_option("--model", m.name,
                    "ideal | mim | plasma | drude | vacuum | table:<csv path>")
        ->required();
    cmd->add_option("--wp-ev", m.wp_ev, "plasma frequency [eV]");
    cmd->add_option("--nu-ev", m.nu_ev, "dissipation parameter [eV]");
    cmd->add_option("--wp-rads", m.wp_rads, "plasma frequency [rad/s]");
    cmd->add_option("--nu-rads", m.nu_rads, "dissipation parameter [rad/s]");
    cmd->add_option("--nu-table", m.nu_table_path, "nu(T) CSV (header T_K,nu_rad_s)");
    cmd->add_option("--tail-wp-ev", m.tail_wp_ev,
                    "Drude tail plasma frequency for table models [eV]");
    cmd->add_option("--tail-nu-ev", m.tail_nu_ev,
                    "Drude tail dissipation for table models [eV]");
    cmd->add_flag("--no-high-tail", m.no_high_tail,
                  "disable the eps -> 1 extension above 10x the table range");
}

void add_engine_options(CLI::App* cmd, EngineOptions& e) {
    cmd->add_option("--quad-tol", e.quad_tol, "quadrature relative tolerance");
    cmd->add_option("--sum-tol", e.sum_tol, "Matsubara sum relative tolerance");
    cmd->add_option("--zero-mode", e.zero_mode, "model | im | mim")
        ->check(CLI::IsMember({"model", "im", "mim"}));
}

casimir::DispersionModel build_model(const ModelOptions& m) {
    using namespace casimir;
    const double wp = m.wp_rads > 0.0 ? m.wp_rads : ev_to_angular_frequency(m.wp_ev);
    NuSchedule nu = NuSchedule::constant(
        m.nu_rads >= 0.0 ? m.nu_rads : ev_to_angular_frequency(m.nu_ev));
    if (!m.nu_table_path.empty()) {
        std::ifstream in(m.nu_table_path);
        if (!in) throw std::runtime_error("cannot open " + m.nu_table_path);
        nu = load_nu_table(in);
    }
    if (m.name == "ideal") return IdealMetal{};
    if (m.name == "mim") return ModifiedIdealMetal{};
    if (m.name == "vacuum") return Vacuum{};
    if (m.name == "plasma") return make_plasma(wp);
    if (m.name == "drude") return make_drude(wp, std::move(nu));
    if (m.name.rfind("table:", 0) == 0) {
        const std::string path = m.name.substr(6);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::optional<DrudeTail> tail;
        if (m.tail_wp_ev > 0.0)
            tail = DrudeTail{ev_to_angular_frequency(m.tail_wp_ev),
                             ev_to_angular_frequency(m.tail_nu_ev)};
        return Tabulated{load_permittivity_table(in, tail, !m.no_high_tail)};
    }
    throw CLI::ValidationError("--model", "unknown model '" + m.name + "'");
}

casimir::ZeroModePolicy parse_policy(const std::string& s) {
    if (s == "im") return casimir::ZeroModePolicy::ForceIM;
    if (s == "mim") return casimir::ZeroModePolicy::ForceMIM;
    return casimir::ZeroModePolicy::FromModel;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

int emit_point(const std::string& quantity, double value, double error,
               bool converged) {
    std::cout << quantity << " = " << fmt(value) << " +/- " << fmt(error) << '\n';
    if (!converged) {
        std::cerr << "numerical failure: requested tolerance not achieved\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int run_audits(const std::vector<std::string>& names, bool all,
               const casimir::DispersionModel& model, casimir::ZeroModePolicy policy,
               double gap, double temp, double classical_gap,
               const std::string& report_path, const std::string& json_path) {
    using namespace casimir;
    std::vector<std::string> selected = names;
    if (all)
        selected = {"consistency", "classical", "entropy-defect", "fig3",
                    "negative-entropy"};
    if (selected.empty())
        throw CLI::ValidationError("audit", "no audits selected (name them or use --all)");

    std::vector<AuditReport> reports;
    for (const std::string& name : selected) {
        if (name == "consistency") {
            reports.push_back(audit_pressure_free_energy(
                model, {0.5e-6, 1e-6, 5e-6}, {100.0, 300.0, 900.0}, policy));
        } else if (name == "classical") {
            reports.push_back(audit_classical_limit(model, classical_gap, temp, policy));
        } else if (name == "entropy-defect") {
            reports.push_back(audit_mim_entropy_defect(gap));
        } else if (name == "fig3") {
            SweepSpec grid_spec;
            grid_spec.start = 1e-6;
            grid_spec.stop = 7e-6;
            grid_spec.points = 61;
            grid_spec.outputs.pressure = true;
            reports.push_back(audit_fig3_shape(model, temp, sweep_grid(grid_spec)));
        } else if (name == "negative-entropy") {
            reports.push_back(audit_negative_entropy_window(
                model, gap, {50.0, 100.0, 200.0, 300.0, 500.0, 800.0, 1200.0, 1500.0}));
        } else {
            throw CLI::ValidationError("audit", "unknown audit '" + name + "'");
        }
    }

    bool ok = true;
    for (const auto& r : reports) {
        for (const auto& c : r.checks) {
            std::cout << (c.applicable ? (c.pass ? "PASS " : "FAIL ") : "N/A  ")
                      << r.audit << "/" << c.name << "  computed=" << c.computed
                      << " tolerance=" << c.tolerance;
            if (!c.note.empty()) std::cout << "  (" << c.note << ")";
            std::cout << '\n';
        }
        ok = ok && r.passed();
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        for (const auto& r : reports) write_report_csv(r, out);
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        for (const auto& r : reports) write_report_json(r, out);
    }
    return ok ? kExitOk : kExitAuditFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir pressure, free energy and entropy between parallel plates"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file mirroring the flags");

    ModelOptions model_opts;
    EngineOptions engine_opts;
    double gap = 1e-6, temp = 300.0;
    double rel_step = 1e-3;
    int orders = 2;

    auto add_point_options = [&](CLI::App* cmd, bool need_temp_positive) {
        add_model_options(cmd, model_opts);
        add_engine_options(cmd, engine_opts);
        cmd->add_option("--gap", gap, "plate separation [m]")->required();
        auto* t = cmd->add_option("--temp", temp, "temperature [K]")->required();
        if (need_temp_positive) t->check(CLI::PositiveNumber);
    };

    CLI::App* p_cmd = app.add_subcommand("pressure", "Casimir pressure at one point");
    add_point_options(p_cmd, false);

    CLI::App* f_cmd =
        app.add_subcommand("free-energy", "free energy per unit area at one point");
    add_point_options(f_cmd, true);

    CLI::App* s_cmd = app.add_subcommand("entropy", "entropy per unit area at one point");
    add_point_options(s_cmd, true);
    s_cmd->add_option("--rel-step", rel_step, "relative differentiation step");
    s_cmd->add_option("--orders", orders, "Richardson extrapolation levels");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "1-D sweep in gap or temperature");
    add_model_options(sweep_cmd, model_opts);
    add_engine_options(sweep_cmd, engine_opts);
    std::string axis = "gap", spacing = "linear", outputs = "pressure", out_path;
    double start = 0.0, stop = 0.0, fixed = 0.0;
    int points = 0;
    int threads = 1;
    if (const char* env = std::getenv("CASIMIR_THREADS")) threads = std::atoi(env);
    if (threads < 1) threads = 1;
    sweep_cmd->add_option("--axis", axis, "gap | temperature")
        ->check(CLI::IsMember({"gap", "temperature"}));
    sweep_cmd->add_option("--start", start, "axis start [SI]")->required();
    sweep_cmd->add_option("--stop", stop, "axis stop [SI]")->required();
    sweep_cmd->add_option("--points", points, "grid size")->required();
    sweep_cmd->add_option("--spacing", spacing, "linear | log")
        ->check(CLI::IsMember({"linear", "log"}));
    sweep_cmd->add_option("--fixed", fixed, "the other variable's value [SI]")
        ->required();
    sweep_cmd->add_option("--outputs", outputs,
                          "comma list of pressure,free_energy,entropy,a4f");
    sweep_cmd->add_option("--output", out_path, "CSV output path (default stdout)");
    sweep_cmd->add_option("--threads", threads,
                          "worker threads (default $CASIMIR_THREADS or 1)");
    sweep_cmd->add_option("--rel-step", rel_step, "entropy differentiation step");
    sweep_cmd->add_option("--orders", orders, "entropy Richardson levels");

    CLI::App* audit_cmd = app.add_subcommand("audit", "thermodynamic consistency audits");
    add_model_options(audit_cmd, model_opts);
    add_engine_options(audit_cmd, engine_opts);
    std::vector<std::string> audit_names;
    bool audit_all = false;
    std::string report_path, json_path;
    double classical_gap = 25e-6;
    audit_cmd->add_option("names", audit_names,
                          "consistency | classical | entropy-defect | fig3 | "
                          "negative-entropy");
    audit_cmd->add_flag("--all", audit_all, "run every audit");
    audit_cmd->add_option("--gap", gap, "plate separation [m]");
    audit_cmd->add_option("--temp", temp, "temperature [K]");
    audit_cmd->add_option("--classical-gap", classical_gap,
                          "separation for the classical-limit audit [m]");
    audit_cmd->add_option("--report", report_path, "write CSV report here");
    audit_cmd->add_option("--json-report", json_path, "write JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        const casimir::DispersionModel model = build_model(model_opts);
        const casimir::ZeroModePolicy policy = parse_policy(engine_opts.zero_mode);
        casimir::LifshitzQuery query{gap, temp, model, policy, engine_opts.quad_tol,
                                     engine_opts.sum_tol};

        if (p_cmd->parsed()) {
            if (temp == 0.0) {
                const double p = casimir::pressure_T0(model, gap, engine_opts.quad_tol);
                return emit_point("pressure_Pa", p, engine_opts.quad_tol * std::abs(p),
                                  true);
            }
            casimir::ThermoResult r = casimir::pressure(query);
            return emit_point("pressure_Pa", r.pressure,
                              r.quad_error_estimate + r.truncation_error_estimate,
                              r.converged);
        }
        if (f_cmd->parsed()) {
            casimir::ThermoResult r = casimir::free_energy(query);
            return emit_point("free_energy_J_m2", r.free_energy,
                              r.quad_error_estimate + r.truncation_error_estimate,
                              r.converged);
        }
        if (s_cmd->parsed()) {
            casimir::DerivativeSpec spec{
                casimir::DerivativeSpec::Variable::Temperature, rel_step, orders};
            casimir::DerivResult r = casimir::entropy(query, spec);
            return emit_point("entropy_J_K_m2", r.value, r.error, true);
        }
        if (sweep_cmd->parsed()) {
            casimir::SweepSpec spec;
            spec.axis = axis == "gap" ? casimir::SweepAxis::Gap
                                      : casimir::SweepAxis::Temperature;
            spec.start = start;
            spec.stop = stop;
            spec.points = points;
            spec.spacing = spacing == "log" ? casimir::SweepSpacing::Log
                                            : casimir::SweepSpacing::Linear;
            spec.fixed = fixed;
            spec.model = model;
            spec.zero_mode = policy;
            spec.quad_rel_tol = engine_opts.quad_tol;
            spec.sum_rel_tol = engine_opts.sum_tol;
            spec.entropy_spec = {casimir::DerivativeSpec::Variable::Temperature,
                                 rel_step, orders};
            spec.threads = threads;
            std::stringstream parsed(outputs);
            std::string col;
            while (std::getline(parsed, col, ',')) {
                if (col == "pressure") spec.outputs.pressure = true;
                else if (col == "free_energy") spec.outputs.free_energy = true;
                else if (col == "entropy") spec.outputs.entropy = true;
                else if (col == "a4f") spec.outputs.a4f = true;
                else throw CLI::ValidationError("--outputs", "unknown column '" + col + "'");
            }
            casimir::SweepOutcome outcome;
            if (out_path.empty()) {
                outcome = casimir::run_sweep(spec, std::cout);
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot open " + out_path);
                outcome = casimir::run_sweep(spec, out);
            }
            std::cerr << outcome.rows << " rows, " << outcome.failures << " failures\n";
            return outcome.failures == 0 ? kExitOk : kExitNumerical;
        }
        if (audit_cmd->parsed()) {
            return run_audits(audit_names, audit_all, model, policy, gap, temp,
                              classical_gap, report_path, json_path);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}
