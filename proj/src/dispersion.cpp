#include "casimir/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace casimir {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

NuSchedule NuSchedule::constant(double nu) {
    if (nu < 0.0) throw std::invalid_argument("NuSchedule: nu must be >= 0");
    NuSchedule s;
    s.nu_ = nu;
    return s;
}

NuSchedule NuSchedule::table(std::vector<std::pair<double, double>> rows) {
    if (rows.empty()) throw std::invalid_argument("NuSchedule: empty table");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].second < 0.0)
            throw std::invalid_argument("NuSchedule: nu must be >= 0");
        if (i > 0 && rows[i].first <= rows[i - 1].first)
            throw std::invalid_argument(
                "NuSchedule: temperatures must be strictly increasing");
    }
    NuSchedule s;
    s.rows_ = std::move(rows);
    return s;
}

double NuSchedule::at(double T) const {
    if (rows_.empty()) return nu_;
    if (T <= rows_.front().first) return rows_.front().second;
    if (T >= rows_.back().first) return rows_.back().second;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), T,
                               [](const auto& r, double t) { return r.first < t; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (T - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
}

Plasma make_plasma(double omega_p) {
    if (omega_p <= 0.0) throw std::invalid_argument("Plasma: omega_p must be > 0");
    return Plasma{omega_p};
}

Drude make_drude(double omega_p, NuSchedule nu) {
    if (omega_p <= 0.0) throw std::invalid_argument("Drude: omega_p must be > 0");
    if (nu.is_constant() && nu.at(0.0) == 0.0)
        throw std::invalid_argument(
            "Drude: nu = 0 degenerates to the plasma model; use Plasma instead");
    return Drude{omega_p, std::move(nu)};
}

Drude make_drude(double omega_p, double nu) {
    return make_drude(omega_p, NuSchedule::constant(nu));
}

PermittivityTable::PermittivityTable(std::vector<double> zeta,
                                     std::vector<double> epsilon,
                                     std::optional<DrudeTail> low_tail,
                                     bool high_freq_unity)
    : zeta_(std::move(zeta)),
      eps_(std::move(epsilon)),
      tail_(low_tail),
      high_freq_unity_(high_freq_unity) {
    if (zeta_.size() != eps_.size())
        throw std::invalid_argument("PermittivityTable: column length mismatch");
    if (zeta_.size() < 2)
        throw std::invalid_argument("PermittivityTable: need at least two rows");
    for (std::size_t i = 0; i < zeta_.size(); ++i) {
        if (zeta_[i] <= 0.0)
            throw std::invalid_argument("PermittivityTable: zeta must be > 0 (row " +
                                        std::to_string(i + 1) + ")");
        if (i > 0 && zeta_[i] <= zeta_[i - 1])
            throw std::invalid_argument(
                "PermittivityTable: zeta must be strictly increasing (row " +
                std::to_string(i + 1) + ")");
        if (eps_[i] < 1.0)
            throw std::invalid_argument("PermittivityTable: epsilon < 1 (row " +
                                        std::to_string(i + 1) + ")");
        if (i > 0 && eps_[i] > eps_[i - 1])
            throw std::invalid_argument(
                "PermittivityTable: epsilon must be non-increasing (row " +
                std::to_string(i + 1) + ")");
    }
    if (tail_) {
        if (tail_->omega_p <= 0.0 || tail_->nu < 0.0)
            throw std::invalid_argument("PermittivityTable: invalid Drude tail");
    }
}

double PermittivityTable::value(double zeta) const {
    if (zeta <= 0.0)
        throw std::domain_error("PermittivityTable: zeta must be > 0");
    if (zeta < zeta_.front()) {
        if (tail_)
            return 1.0 + tail_->omega_p * tail_->omega_p /
                             (zeta * (zeta + tail_->nu));
        return eps_.front();
    }
    if (zeta > zeta_.back()) {
        if (zeta > 10.0 * zeta_.back()) {
            if (high_freq_unity_) return 1.0;
            throw std::out_of_range(
                "PermittivityTable: query above 10x table range and high-frequency "
                "tail disabled");
        }
        // continue the last log-log slope of eps-1
        const std::size_t n = zeta_.size();
        const double d1 = eps_[n - 2] - 1.0, d2 = eps_[n - 1] - 1.0;
        if (d2 <= 0.0) return 1.0;
        // eps is non-increasing, so d2 > 0 implies d1 >= d2 > 0
        const double slope = (std::log(d2) - std::log(d1)) /
                             (std::log(zeta_[n - 1]) - std::log(zeta_[n - 2]));
        return 1.0 + d2 * std::exp(slope * (std::log(zeta) - std::log(zeta_[n - 1])));
    }
    auto it = std::lower_bound(zeta_.begin(), zeta_.end(), zeta);
    const std::size_t j = static_cast<std::size_t>(it - zeta_.begin());
    if (zeta_[j] == zeta) return eps_[j];
    const std::size_t i = j - 1;
    const double t = (std::log(zeta) - std::log(zeta_[i])) /
                     (std::log(zeta_[j]) - std::log(zeta_[i]));
    const double di = eps_[i] - 1.0, dj = eps_[j] - 1.0;
    if (di <= 0.0 || dj <= 0.0)
        return 1.0 + di + t * (dj - di);  // linear fallback when eps hits 1
    return 1.0 + std::exp(std::log(di) + t * (std::log(dj) - std::log(di)));
}

double permittivity(const DispersionModel& model, double zeta, double T) {
    if (zeta <= 0.0)
        throw std::domain_error("permittivity: zeta must be > 0");
    return std::visit(
        [&](const auto& m) -> double {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, IdealMetal> ||
                          std::is_same_v<M, ModifiedIdealMetal>) {
                return kInf;
            } else if constexpr (std::is_same_v<M, Vacuum>) {
                return 1.0;
            } else if constexpr (std::is_same_v<M, Plasma>) {
                return 1.0 + m.omega_p * m.omega_p / (zeta * zeta);
            } else if constexpr (std::is_same_v<M, Drude>) {
                return 1.0 + m.omega_p * m.omega_p / (zeta * (zeta + m.nu.at(T)));
            } else {
                return m.table.value(zeta);
            }
        },
        model);
}

double te_zero_mode_weight(const DispersionModel& model, double T) {
    return std::visit(
        [&](const auto& m) -> double {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, IdealMetal>) {
                return kInf;
            } else if constexpr (std::is_same_v<M, Plasma>) {
                return m.omega_p * m.omega_p;
            } else if constexpr (std::is_same_v<M, Drude>) {
                return m.nu.at(T) > 0.0 ? 0.0 : m.omega_p * m.omega_p;
            } else if constexpr (std::is_same_v<M, Tabulated>) {
                const auto& tail = m.table.low_tail();
                if (tail && tail->nu == 0.0) return tail->omega_p * tail->omega_p;
                return 0.0;
            } else {
                return 0.0;  // MIM, Vacuum
            }
        },
        model);
}

double tm_zero_mode_coefficient(const DispersionModel& model) {
    return std::visit(
        [&](const auto& m) -> double {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Vacuum>) {
                return 0.0;
            } else if constexpr (std::is_same_v<M, Tabulated>) {
                if (m.table.low_tail()) return 1.0;  // Drude tail: eps0 -> inf
                const double e0 = m.table.epsilons().front();
                const double r = (e0 - 1.0) / (e0 + 1.0);
                return r * r;
            } else {
                return 1.0;  // IM, MIM, Plasma, Drude
            }
        },
        model);
}

namespace {

std::vector<std::pair<double, double>> parse_two_column_csv(
    std::istream& in, const std::string& header) {
    std::vector<std::pair<double, double>> rows;
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        if (!saw_header) {
            if (line.substr(start) != header)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": expected header '" + header + "'");
            saw_header = true;
            continue;
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double a, b;
        if (!(ss >> a >> b))
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": cannot parse numeric row");
        rows.emplace_back(a, b);
    }
    if (!saw_header) throw std::runtime_error("missing header '" + header + "'");
    return rows;
}

}  // namespace

PermittivityTable load_permittivity_table(std::istream& in,
                                          std::optional<DrudeTail> low_tail,
                                          bool high_freq_unity) {
    auto rows = parse_two_column_csv(in, "zeta_rad_s,epsilon");
    std::vector<double> z, e;
    z.reserve(rows.size());
    e.reserve(rows.size());
    for (const auto& [a, b] : rows) {
        z.push_back(a);
        e.push_back(b);
    }
    return PermittivityTable(std::move(z), std::move(e), low_tail, high_freq_unity);
}

NuSchedule load_nu_table(std::istream& in) {
    return NuSchedule::table(parse_two_column_csv(in, "T_K,nu_rad_s"));
}

std::string model_name(const DispersionModel& model) {
    return std::visit(
        [](const auto& m) -> std::string {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, IdealMetal>) return "ideal";
            else if constexpr (std::is_same_v<M, ModifiedIdealMetal>) return "mim";
            else if constexpr (std::is_same_v<M, Plasma>) return "plasma";
            else if constexpr (std::is_same_v<M, Drude>) return "drude";
            else if constexpr (std::is_same_v<M, Tabulated>) return "table";
            else return "vacuum";
        },
        model);
}

}  // namespace casimir
