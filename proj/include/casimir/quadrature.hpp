#pragma once

#include <functional>
#include <vector>

namespace casimir {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // absolute error estimate
    long long evaluations = 0;
    bool converged = true;
};

// Globally adaptive Gauss-Kronrod (G7,K15) quadrature over the union of
// [breakpoints[0], breakpoints[n-1]], with the given interior seed points.
// Refines the segment with the largest error estimate until the summed
// estimate drops below max(abs_tol, rel_tol * |value|). Deterministic:
// identical inputs give bit-identical results.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              std::vector<double> breakpoints,
                              double rel_tol,
                              double abs_tol = 0.0,
                              int max_segments = 40000);

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double lo, double hi,
                              double rel_tol,
                              double abs_tol = 0.0,
                              int max_segments = 40000);

// Seed points for integrands decaying like exp(-(x-lo)/scale): panel widths
// double with distance from lo, so each panel spans O(1) e-foldings.
std::vector<double> decay_breakpoints(double lo, double hi, double scale);

}  // namespace casimir
