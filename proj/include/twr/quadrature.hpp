#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace twr::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

struct Tolerance {
    double abs = 0.0;
    double rel = 1e-12;
    int max_intervals = 4000;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double a, b, value, error;
};

template <class F>
Interval gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[static_cast<std::size_t>(j)];
        const double s = f(c - dx) + f(c + dx);
        kronrod += kWgk[static_cast<std::size_t>(j)] * s;
        if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * s;
    }
    return {a, b, kronrod * h, std::abs((kronrod - gauss) * h)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (G7/K15) on a finite interval. Bisects the
/// interval with the largest error estimate until the summed estimate drops
/// below max(tol.abs, tol.rel * |I|).
template <class F>
Result integrate(F&& f, double a, double b, Tolerance tol = {}) {
    Result out;
    if (a == b) return out;
    std::vector<detail::Interval> parts{detail::gk15(f, a, b)};
    out.evaluations = 15;
    for (;;) {
        double value = 0.0, error = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            value += parts[i].value;
            error += parts[i].error;
            if (parts[i].error > parts[worst].error) worst = i;
        }
        out.value = value;
        out.error = error;
        if (error <= std::max(tol.abs, tol.rel * std::abs(value))) return out;
        const auto w = parts[worst];
        const double mid = 0.5 * (w.a + w.b);
        if (static_cast<int>(parts.size()) >= tol.max_intervals || mid <= w.a || mid >= w.b) {
            out.converged = false;
            return out;
        }
        parts[worst] = detail::gk15(f, w.a, mid);
        parts.push_back(detail::gk15(f, mid, w.b));
        out.evaluations += 30;
    }
}

/// Integral over [start, inf) as a sum of geometrically growing panels
/// [start, start+h], [start+h, start+2h], [start+2h, start+4h], ...
/// Summation stops once a panel lies beyond `tail_start` and contributes
/// less than 1e-3 * tol.rel of the running sum. Suits integrands that decay
/// at least exponentially past `tail_start` and may vary on very different
/// scales (h small resolves structure near the origin).
template <class F>
Result integrate_half_line(F&& f, double start, double first_panel, double tail_start, Tolerance tol = {}) {
    Result out;
    double lo = start;
    double width = first_panel;
    for (int panel = 0; panel < 2000; ++panel) {
        const double hi = lo + width;
        Tolerance panel_tol = tol;
        panel_tol.abs = std::max(tol.abs, 0.1 * tol.rel * std::abs(out.value));
        const Result r = integrate(f, lo, hi, panel_tol);
        out.value += r.value;
        out.error += r.error;
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
        if (lo > tail_start && std::abs(r.value) <= 1e-3 * tol.rel * std::abs(out.value)) return out;
        if (!std::isfinite(hi)) break;
        lo = hi;
        if (panel > 0) width *= 2.0;
    }
    out.converged = false;
    return out;
}

}  // namespace twr::quad
