#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace casimir {

namespace {

// 15-point Kronrod abscissae on [0,1] half-interval (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277,
    0.381830050505119, 0.417959183673469};

struct Segment {
    double lo, hi;
    double value;
    double error;
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi,
             long long& evals) {
    const double center = 0.5 * (lo + hi);
    const double halfwidth = 0.5 * (hi - lo);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = f(center);
            ++evals;
        } else {
            const double dx = halfwidth * kXgk[i];
            fsum = f(center - dx) + f(center + dx);
            evals += 2;
        }
        if (!std::isfinite(fsum))
            throw std::runtime_error("integrate_adaptive: non-finite integrand value");
        resk += kWgk[i] * fsum;
        // Gauss-7 nodes are the odd-index Kronrod nodes plus the center
        if (i % 2 == 1) resg += kWg[i / 2] * fsum;
    }
    return {lo, hi, resk * halfwidth, std::abs(resk - resg) * halfwidth};
}

}  // namespace

std::vector<double> decay_breakpoints(double lo, double hi, double scale) {
    std::vector<double> pts{lo};
    double w = scale;
    double x = lo;
    while (x + w < hi) {
        x += w;
        pts.push_back(x);
        w *= 2.0;
        if (pts.size() > 64) break;
    }
    pts.push_back(hi);
    return pts;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double lo, double hi, double rel_tol,
                              double abs_tol, int max_segments) {
    return integrate_adaptive(f, std::vector<double>{lo, hi}, rel_tol, abs_tol,
                              max_segments);
}

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              std::vector<double> breakpoints, double rel_tol,
                              double abs_tol, int max_segments) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument("integrate_adaptive: need at least two breakpoints");
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
        throw std::invalid_argument("integrate_adaptive: breakpoints not ascending");
    if (rel_tol <= 0.0)
        throw std::invalid_argument("integrate_adaptive: rel_tol must be positive");

    QuadResult res;
    // ordered worst-first; ties broken by position for determinism
    auto cmp = [](const Segment& a, const Segment& b) {
        if (a.error != b.error) return a.error > b.error;
        return a.lo < b.lo;
    };
    std::multiset<Segment, decltype(cmp)> segs(cmp);

    double total = 0.0, toterr = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i] == breakpoints[i + 1]) continue;
        Segment s = gk15(f, breakpoints[i], breakpoints[i + 1], res.evaluations);
        total += s.value;
        toterr += s.error;
        segs.insert(s);
    }

    while (toterr > std::max(abs_tol, rel_tol * std::abs(total)) &&
           static_cast<int>(segs.size()) < max_segments) {
        Segment worst = *segs.begin();
        segs.erase(segs.begin());
        if (worst.hi - worst.lo < 1e-15 * (std::abs(worst.lo) + std::abs(worst.hi))) {
            // cannot subdivide further in double precision
            segs.insert(worst);
            break;
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        Segment left = gk15(f, worst.lo, mid, res.evaluations);
        Segment right = gk15(f, mid, worst.hi, res.evaluations);
        total += left.value + right.value - worst.value;
        toterr += left.error + right.error - worst.error;
        segs.insert(left);
        segs.insert(right);
    }

    // final reduction in position order, independent of refinement history
    std::vector<Segment> ordered(segs.begin(), segs.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    double value = 0.0, error = 0.0;
    for (const Segment& s : ordered) {
        value += s.value;
        error += s.error;
    }
    res.value = value;
    res.error = error;
    res.converged = error <= std::max(abs_tol, rel_tol * std::abs(value));
    return res;
}

}  // namespace casimir
