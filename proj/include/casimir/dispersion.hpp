#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace casimir {

// Dissipation parameter nu, either constant or tabulated against temperature
// (linear interpolation, constant extension beyond the endpoints).
class NuSchedule {
public:
    static NuSchedule constant(double nu);
    // rows of (T [K], nu [rad/s]); temperatures strictly increasing
    static NuSchedule table(std::vector<std::pair<double, double>> rows);

    double at(double T) const;
    bool is_constant() const { return rows_.empty(); }

private:
    NuSchedule() = default;
    double nu_ = 0.0;
    std::vector<std::pair<double, double>> rows_;
};

struct IdealMetal {};          // eps -> inf before zeta -> 0: A0 = B0 = 1
struct ModifiedIdealMetal {};  // zeta -> 0 before eps -> inf: A0 = 1, B0 = 0
struct Vacuum {};              // eps = 1, no reflection (test ergonomics)

struct Plasma {
    double omega_p;  // rad/s
};

struct Drude {
    double omega_p;  // rad/s
    NuSchedule nu;   // rad/s, positive (nu = 0 is the plasma model)
};

struct DrudeTail {
    double omega_p;  // rad/s
    double nu;       // rad/s, >= 0
};

// Tabulated eps(i zeta), strictly increasing zeta > 0, eps >= 1 and
// non-increasing. Interpolation is linear in (log zeta, log(eps-1)).
// Below the table an optional Drude tail is used (constant extension of the
// first row when absent). Above the table the last log-log slope is
// continued up to 10x the last zeta; beyond that eps is exactly 1 when the
// high-frequency tail is enabled, otherwise the query is an error.
class PermittivityTable {
public:
    PermittivityTable(std::vector<double> zeta, std::vector<double> epsilon,
                      std::optional<DrudeTail> low_tail = std::nullopt,
                      bool high_freq_unity = true);

    double value(double zeta) const;
    std::size_t size() const { return zeta_.size(); }
    const std::vector<double>& zetas() const { return zeta_; }
    const std::vector<double>& epsilons() const { return eps_; }
    const std::optional<DrudeTail>& low_tail() const { return tail_; }

private:
    std::vector<double> zeta_, eps_;
    std::optional<DrudeTail> tail_;
    bool high_freq_unity_;
};

struct Tabulated {
    PermittivityTable table;
};

using DispersionModel =
    std::variant<IdealMetal, ModifiedIdealMetal, Plasma, Drude, Tabulated, Vacuum>;

Plasma make_plasma(double omega_p);
Drude make_drude(double omega_p, NuSchedule nu);
Drude make_drude(double omega_p, double nu);

// eps(i zeta) for zeta > 0. Returns +infinity as an explicit sentinel for the
// IdealMetal/ModifiedIdealMetal models (the engine maps it to A = B = 1 for
// m >= 1).
double permittivity(const DispersionModel& model, double zeta, double T);

// lim_{zeta->0} zeta^2 [eps(i zeta) - 1]. Zero for Drude with nu(T) > 0 and
// for MIM, omega_p^2 for the plasma model, +infinity for IdealMetal
// (forces B0 = 1).
double te_zero_mode_weight(const DispersionModel& model, double T);

// A0 = ((eps0-1)/(eps0+1))^2 with eps0 the zero-frequency permittivity;
// 1 for every metal model.
double tm_zero_mode_coefficient(const DispersionModel& model);

// CSV: header "zeta_rad_s,epsilon", numeric rows, '#' comments allowed.
PermittivityTable load_permittivity_table(std::istream& in,
                                          std::optional<DrudeTail> low_tail = std::nullopt,
                                          bool high_freq_unity = true);

// CSV: header "T_K,nu_rad_s".
NuSchedule load_nu_table(std::istream& in);

std::string model_name(const DispersionModel& model);

}  // namespace casimir
