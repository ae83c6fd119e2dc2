#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/thermo.hpp"

using namespace casimir;

namespace {
const double kWpGold = ev_to_angular_frequency(9.03);
const double kNuGold = ev_to_angular_frequency(0.0345);

DispersionModel gold() { return make_drude(kWpGold, kNuGold); }
}  // namespace

TEST_CASE("differentiate on elementary functions") {
    auto d1 = differentiate([](double x) { return x * x * x; }, 2.0, 1e-3, 2);
    CHECK(d1.value == doctest::Approx(12.0).epsilon(1e-10));

    auto d2 = differentiate([](double x) { return std::exp(x); }, 1.0, 1e-3, 3);
    CHECK(d2.value == doctest::Approx(std::exp(1.0)).epsilon(1e-11));
    CHECK(d2.error < 1e-8);

    auto d3 = differentiate([](double x) { return std::sin(x); }, 0.7, 1e-3, 2);
    CHECK(d3.value == doctest::Approx(std::cos(0.7)).epsilon(1e-10));
}

TEST_CASE("Richardson improves on the bare central difference") {
    auto f = [](double x) { return std::exp(2.0 * x); };
    const double exact = 2.0 * std::exp(2.0);
    auto bare = differentiate(f, 1.0, 1e-2, 1);
    auto extr = differentiate(f, 1.0, 1e-2, 3);
    CHECK(std::abs(extr.value - exact) < std::abs(bare.value - exact) / 4.0);
}

TEST_CASE("differentiate rejects bad specs") {
    auto f = [](double x) { return x; };
    CHECK_THROWS(differentiate(f, 1.0, 1e-7, 2));   // step too small
    CHECK_THROWS(differentiate(f, 1.0, 0.1, 2));    // step too large
    CHECK_THROWS(differentiate(f, 1.0, 1e-3, 0));   // no levels
}

TEST_CASE("engine entropy matches the low-temperature closed form") {
    const double a = 1e-6;
    const double T = 0.1 * constants.hbar * constants.c / (2.0 * a * constants.k_B);
    LifshitzQuery q{a, T, DispersionModel{IdealMetal{}}};
    DerivativeSpec spec;
    auto S = entropy(q, spec);
    CHECK(S.value == doctest::Approx(im_lowT(a, T).entropy).epsilon(1e-2));
    CHECK(S.value > 0.0);
}

TEST_CASE("entropy rejects T <= 0 and step collisions with T = 0") {
    DerivativeSpec spec;
    LifshitzQuery q{1e-6, 0.0, DispersionModel{IdealMetal{}}};
    CHECK_THROWS(entropy(q, spec));
    LifshitzQuery q2{1e-6, 300.0, DispersionModel{IdealMetal{}}};
    DerivativeSpec wild;
    wild.relative_step = 1e-1;
    CHECK_THROWS(entropy(q2, wild));
}

TEST_CASE("pressure/free-energy consistency audit passes") {
    auto rep = audit_pressure_free_energy(DispersionModel{IdealMetal{}},
                                          {0.5e-6, 1e-6}, {300.0});
    CHECK(rep.passed());
    for (const auto& c : rep.checks) CHECK(c.pass);

    auto rep2 = audit_pressure_free_energy(gold(), {1e-6}, {300.0});
    CHECK(rep2.passed());
}

TEST_CASE("classical-limit audit") {
    auto mim = audit_classical_limit(DispersionModel{ModifiedIdealMetal{}}, 25e-6, 300.0);
    CHECK(mim.passed());
    auto im = audit_classical_limit(DispersionModel{IdealMetal{}}, 25e-6, 300.0);
    CHECK(im.passed());

    auto out = audit_classical_limit(DispersionModel{IdealMetal{}}, 0.1e-6, 300.0);
    bool any_inapplicable = false;
    for (const auto& c : out.checks) any_inapplicable |= !c.applicable;
    CHECK(any_inapplicable);
    CHECK(out.passed());  // inapplicable checks do not fail the audit
}

TEST_CASE("shape audit rejects an insufficient grid") {
    CHECK_THROWS_AS(
        audit_fig3_shape(DispersionModel{IdealMetal{}}, 300.0, {1e-6, 7e-6}),
        std::invalid_argument);
}

TEST_CASE("extrapolation helpers are exact on synthetic data") {
    // y = 4 - 2 x^2 + x^3 sampled at three points
    auto y = [](double x) { return 4.0 - 2.0 * x * x + x * x * x; };
    std::vector<double> xs{0.5, 1.0, 2.0};
    std::vector<double> ys{y(0.5), y(1.0), y(2.0)};
    CHECK(extrapolate_to_zero_cubic_noslope(xs, ys) ==
          doctest::Approx(4.0).epsilon(1e-12));

    // quadratic through three points, Neville recovers the constant term
    auto p = [](double x) { return 7.0 + 3.0 * x - x * x; };
    std::vector<double> ys2{p(0.5), p(1.0), p(2.0)};
    CHECK(extrapolate_to_zero_polynomial(xs, ys2) ==
          doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("negative entropy window for Drude gold at 1 um") {
    auto rep = audit_negative_entropy_window(gold(), 1e-6, {300.0, 1500.0});
    CHECK(rep.passed());
    DerivativeSpec spec;
    LifshitzQuery q{1e-6, 300.0, gold()};
    CHECK(entropy(q, spec).value < 0.0);
    LifshitzQuery hot{1e-6, 1500.0, gold()};
    CHECK(entropy(hot, spec).value > 0.0);
}

TEST_CASE("report serialization") {
    AuditReport rep;
    rep.audit = "demo";
    rep.checks.push_back({"check_a", "a=1", 1.5e-5, 1e-4, true, true, ""});
    std::ostringstream csv, js;
    write_report_csv(rep, csv);
    CHECK(csv.str().find("check_a") != std::string::npos);
    write_report_json(rep, js);
    CHECK(js.str().find("\"audit\"") != std::string::npos);
    CHECK(js.str().find("check_a") != std::string::npos);
}
