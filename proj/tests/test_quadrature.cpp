#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "casimir/quadrature.hpp"

using namespace casimir;

TEST_CASE("low-order polynomial is exact") {
    auto r = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(r.converged);
}

TEST_CASE("sin over a period") {
    auto r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12);
    CHECK(std::abs(r.value - 2.0) <= 1e-12);
    CHECK(r.error <= 1e-12 * 2.0 * 1.01);
}

TEST_CASE("exponential decay with seeded breakpoints") {
    auto bp = decay_breakpoints(0.0, 60.0, 1.0);
    auto r = integrate_adaptive([](double x) { return std::exp(-x); }, bp, 1e-11);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("integrable endpoint behavior x log x") {
    auto r = integrate_adaptive([](double x) { return x * std::log(x); }, 0.0, 1.0,
                                1e-10);
    CHECK(r.value == doctest::Approx(-0.25).epsilon(1e-9));
}

TEST_CASE("invalid arguments") {
    auto f = [](double x) { return x; };
    CHECK_THROWS(integrate_adaptive(f, {1.0}, 1e-9));
    CHECK_THROWS(integrate_adaptive(f, {1.0, 0.0}, 1e-9));
    CHECK_THROWS(integrate_adaptive(f, 0.0, 1.0, 0.0));
}

TEST_CASE("deterministic") {
    auto f = [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); };
    auto r1 = integrate_adaptive(f, 0.0, 10.0, 1e-12);
    auto r2 = integrate_adaptive(f, 0.0, 10.0, 1e-12);
    CHECK(r1.value == r2.value);
    CHECK(r1.error == r2.error);
}
