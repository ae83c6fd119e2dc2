#pragma once

#include <iosfwd>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/thermo.hpp"

namespace casimir {

enum class SweepAxis { Gap, Temperature };
enum class SweepSpacing { Linear, Log };

struct OutputColumns {
    bool pressure = false;
    bool free_energy = false;
    bool entropy = false;
    bool a4f = false;
    bool any() const { return pressure || free_energy || entropy || a4f; }
};

struct SweepSpec {
    SweepAxis axis = SweepAxis::Gap;
    double start = 0.0;
    double stop = 0.0;
    int points = 0;      // >= 2, <= 1e5
    SweepSpacing spacing = SweepSpacing::Linear;
    double fixed = 0.0;  // the other variable
    DispersionModel model;
    ZeroModePolicy zero_mode = ZeroModePolicy::FromModel;
    OutputColumns outputs;
    double quad_rel_tol = 1e-9;
    double sum_rel_tol = 1e-8;
    DerivativeSpec entropy_spec;
    int threads = 1;
};

struct SweepOutcome {
    int rows = 0;
    int failures = 0;  // grid points that raised an engine error
};

void validate(const SweepSpec& spec);
std::vector<double> sweep_grid(const SweepSpec& spec);

// Emits the CSV header plus one row per grid point, rows in axis order
// regardless of the thread count. Fixed formatting (17 significant digits,
// scientific), absent quantities left empty. A failing grid point leaves its
// value columns empty and the sweep continues.
SweepOutcome run_sweep(const SweepSpec& spec, std::ostream& out);

extern const char* const kSweepCsvHeader;

}  // namespace casimir
