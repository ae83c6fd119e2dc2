#include "casimir/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace casimir {

const char* const kSweepCsvHeader =
    "a_m,T_K,pressure_Pa,pressure_err_Pa,free_energy_J_m2,free_energy_err_J_m2,"
    "entropy_J_K_m2,entropy_err_J_K_m2,a4f_Pa_m4";

void validate(const SweepSpec& spec) {
    if (!(spec.start < spec.stop))
        throw std::invalid_argument("sweep: start must be < stop");
    if (spec.spacing == SweepSpacing::Log && !(spec.start > 0.0))
        throw std::invalid_argument("sweep: log spacing requires start > 0");
    if (spec.points < 2 || spec.points > 100000)
        throw std::invalid_argument("sweep: points must be in [2, 1e5]");
    if (!spec.outputs.any())
        throw std::invalid_argument("sweep: no output columns selected");
    if (spec.threads < 1)
        throw std::invalid_argument("sweep: threads must be >= 1");
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    std::vector<double> g(spec.points);
    const int n = spec.points - 1;
    for (int i = 0; i <= n; ++i) {
        if (spec.spacing == SweepSpacing::Linear) {
            g[i] = spec.start + (spec.stop - spec.start) * i / n;
        } else {
            g[i] = spec.start *
                   std::exp(std::log(spec.stop / spec.start) * i / n);
        }
    }
    return g;
}

namespace {

struct Row {
    double a = 0.0, T = 0.0;
    std::optional<double> pressure, pressure_err;
    std::optional<double> free_energy, free_energy_err;
    std::optional<double> entropy, entropy_err;
    std::optional<double> a4f;
    bool failed = false;
};

Row evaluate_point(const SweepSpec& spec, double a, double T) {
    Row row;
    row.a = a;
    row.T = T;
    LifshitzQuery q{a, T, spec.model, spec.zero_mode, spec.quad_rel_tol,
                    spec.sum_rel_tol};
    try {
        if (spec.outputs.pressure || spec.outputs.a4f) {
            double p, err;
            if (T == 0.0) {
                p = pressure_T0(spec.model, a, spec.quad_rel_tol);
                err = spec.quad_rel_tol * std::abs(p);
            } else {
                ThermoResult r = pressure(q);
                if (!r.converged) row.failed = true;
                p = r.pressure;
                err = r.quad_error_estimate + r.truncation_error_estimate;
            }
            if (spec.outputs.pressure) {
                row.pressure = p;
                row.pressure_err = err;
            }
            if (spec.outputs.a4f) row.a4f = a * a * a * a * p;
        }
        if (spec.outputs.free_energy) {
            ThermoResult r = free_energy(q);
            if (!r.converged) row.failed = true;
            row.free_energy = r.free_energy;
            row.free_energy_err = r.quad_error_estimate + r.truncation_error_estimate;
        }
        if (spec.outputs.entropy) {
            DerivResult s = entropy(q, spec.entropy_spec);
            row.entropy = s.value;
            row.entropy_err = s.error;
        }
    } catch (const std::exception&) {
        row.failed = true;
    }
    return row;
}

void append_field(std::string& line, const std::optional<double>& v) {
    line.push_back(',');
    if (v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.16e", *v);
        line += buf;
    }
}

}  // namespace

SweepOutcome run_sweep(const SweepSpec& spec, std::ostream& out) {
    validate(spec);
    const std::vector<double> grid = sweep_grid(spec);
    std::vector<Row> rows(grid.size());

    auto work = [&](std::size_t i) {
        const double a = spec.axis == SweepAxis::Gap ? grid[i] : spec.fixed;
        const double T = spec.axis == SweepAxis::Temperature ? grid[i] : spec.fixed;
        rows[i] = evaluate_point(spec, a, T);
    };

    if (spec.threads == 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int nthreads = std::min<int>(spec.threads, static_cast<int>(grid.size()));
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < grid.size();
                     i = next.fetch_add(1))
                    work(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    out << kSweepCsvHeader << '\n';
    SweepOutcome outcome;
    for (const Row& r : rows) {
        std::string line;
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.16e", r.a);
        line += buf;
        std::snprintf(buf, sizeof buf, "%.16e", r.T);
        line.push_back(',');
        line += buf;
        append_field(line, r.pressure);
        append_field(line, r.pressure_err);
        append_field(line, r.free_energy);
        append_field(line, r.free_energy_err);
        append_field(line, r.entropy);
        append_field(line, r.entropy_err);
        append_field(line, r.a4f);
        out << line << '\n';
        ++outcome.rows;
        if (r.failed) ++outcome.failures;
    }
    return outcome;
}

}  // namespace casimir
