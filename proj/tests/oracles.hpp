#pragma once

// Independent reference computations used only by the tests. Nothing here calls the ladder
// search, the Newton polish, or the block transform of the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "korenblum/analytic.hpp"
#include "korenblum/fft.hpp"
#include "korenblum/taylor_series.hpp"

namespace oracle {

using korenblum::Complex;

inline Complex horner(std::span<const Complex> c, Complex z) {
    Complex acc{};
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
    return acc;
}

inline std::vector<Complex> random_coeffs(std::mt19937_64& rng, std::size_t count) {
    std::normal_distribution<double> normal;
    std::vector<Complex> c(count);
    for (auto& v : c) v = {normal(rng), normal(rng)};
    return c;
}

// Golden-section maximization of a 1-D function on [a, b].
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, int iterations = 80) {
    constexpr double g = 0.6180339887498949;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iterations; ++i) {
        if (fc >= fd) {
            b = d; d = c; fd = fc; c = b - g * (b - a); fc = f(c);
        } else {
            a = c; c = d; fc = fd; d = a + g * (b - a); fd = f(d);
        }
    }
    return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

// max_theta |f(r e^{i theta})| by a dense Horner scan followed by golden polishing of the best
// few scan maxima.
inline double circle_max(std::span<const Complex> c, double r, std::size_t scan) {
    std::vector<double> mod(scan);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(scan);
    for (std::size_t k = 0; k < scan; ++k) mod[k] = std::abs(horner(c, std::polar(r, h * k)));
    std::vector<std::pair<double, std::size_t>> peaks;
    for (std::size_t k = 0; k < scan; ++k) {
        if (mod[k] >= mod[(k + scan - 1) % scan] && mod[k] >= mod[(k + 1) % scan]) {
            peaks.emplace_back(mod[k], k);
        }
    }
    std::sort(peaks.rbegin(), peaks.rend());
    double best = peaks.empty() ? mod[0] : peaks[0].first;
    for (std::size_t p = 0; p < std::min<std::size_t>(4, peaks.size()); ++p) {
        const double t0 = h * peaks[p].second;
        const auto [t, v] = golden_max(
            [&](double t) { return std::abs(horner(c, std::polar(r, t))); }, t0 - h, t0 + h, 60);
        best = std::max(best, v);
    }
    return best;
}

struct GridNorm {
    double raw = 0.0;       // max over the (r, phi) grid
    double polished = 0.0;  // after local golden refinement in r and phi
};

// Circle maxima of f on a fixed radial grid: `radii` radii with 1 - r log-spaced in [1e-4, 1]
// (r = 0 included), each circle sampled at >= 8(D+1) equispaced angles.
struct GridProfile {
    std::vector<double> r;
    std::vector<double> max_modulus;
};

inline std::size_t grid_angles(const korenblum::TaylorSeries& f) {
    return korenblum::fft::next_power_of_two(8 * (f.degree() + 1));
}

inline GridProfile grid_profile(const korenblum::TaylorSeries& f, std::size_t radii = 2000) {
    GridProfile g;
    g.r.resize(radii);
    g.max_modulus.resize(radii);
    const std::size_t angles = grid_angles(f);
    for (std::size_t i = 0; i < radii; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(radii - 1);
        g.r[i] = 1.0 - std::pow(10.0, -4.0 * t);
        double m = 0.0;
        for (const auto& v : korenblum::eval_circle(f, g.r[i], angles)) m = std::max(m, std::abs(v));
        g.max_modulus[i] = m;
    }
    return g;
}

// max_theta |f(r e^{i theta})| from the grid scan, with the best grid peaks refined by golden
// section on Horner values.
inline double circle_max_scanned(std::span<const Complex> c, const korenblum::TaylorSeries& f, double r,
                                 std::size_t angles) {
    const auto v = korenblum::eval_circle(f, r, angles);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(angles);
    std::vector<std::pair<double, std::size_t>> peaks;
    for (std::size_t k = 0; k < angles; ++k) {
        const double a = std::abs(v[k]);
        if (a >= std::abs(v[(k + angles - 1) % angles]) && a >= std::abs(v[(k + 1) % angles])) peaks.emplace_back(a, k);
    }
    std::sort(peaks.rbegin(), peaks.rend());
    double best = peaks.empty() ? std::abs(v[0]) : peaks[0].first;
    for (std::size_t p = 0; p < std::min<std::size_t>(4, peaks.size()); ++p) {
        const double t0 = h * static_cast<double>(peaks[p].second);
        const auto [t, val] = golden_max(
            [&](double t) { return std::abs(horner(c, std::polar(r, t))); }, t0 - h, t0 + h, 60);
        best = std::max(best, val);
    }
    return best;
}

// Grid maximum, then the polished circle maximum at every grid radius whose raw value could
// still be the true peak (8x angular oversampling can lose at most a fraction 1 - cos(pi/8) of
// the circle maximum), scanned with a stride and refined around the best, then golden search in r
// between the neighbours of the best radius.
inline GridNorm grid_norm(const korenblum::TaylorSeries& f, const GridProfile& g, double mu) {
    const std::size_t n = g.r.size();
    const std::size_t angles = grid_angles(f);
    const auto objective = [&](double r) {
        return circle_max_scanned(f.coeffs(), f, r, angles) * std::pow(1.0 - r, mu);
    };
    std::vector<double> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = g.max_modulus[i] * std::pow(1.0 - g.r[i], mu);
    const double raw_best = *std::max_element(raw.begin(), raw.end());
    const double floor = raw_best * std::cos(std::numbers::pi / 8.0);
    std::size_t best = 0;
    double polished = 0.0;
    const auto visit = [&](std::size_t i) {
        if (raw[i] < floor) return;
        const double v = objective(g.r[i]);
        if (v > polished) {
            polished = v;
            best = i;
        }
    };
    constexpr std::size_t stride = 8;
    for (std::size_t i = 0; i < n; i += stride) visit(i);
    const std::size_t centre = best;
    for (std::size_t i = centre > stride ? centre - stride : 0; i <= std::min(centre + stride, n - 1); ++i) visit(i);
    const double a = g.r[best == 0 ? 0 : best - 1];
    const double b = g.r[std::min(best + 1, n - 1)];
    const auto [r, v] = golden_max(objective, a, b, 50);
    return {raw_best, std::max(polished, v)};
}

// Brute-force ||f||_mu: the radial grid above, then a golden search in r around the best grid
// radius with a polished circle maximum as the inner objective.
inline GridNorm brute_force_norm(const korenblum::TaylorSeries& f, double mu, std::size_t radii = 2000) {
    return grid_norm(f, grid_profile(f, radii), mu);
}

// Direct sum of the Dirichlet kernel.
inline double dirichlet_direct(std::size_t m, double phi) {
    double acc = 1.0;
    for (std::size_t j = 1; j <= m; ++j) acc += 2.0 * std::cos(static_cast<double>(j) * phi);
    return acc;
}

// Composite midpoint rule for (1/pi) int_0^pi |D_m|, `per_lobe` nodes per lobe.
inline double lebesgue_midpoint(std::size_t m, std::size_t per_lobe) {
    const std::size_t nodes = per_lobe * (2 * m + 1);
    const double h = std::numbers::pi / static_cast<double>(nodes);
    double acc = 0.0;
    for (std::size_t k = 0; k < nodes; ++k) acc += std::abs(dirichlet_direct(m, (k + 0.5) * h));
    return acc * h / std::numbers::pi;
}

// Same rule on the closed form sin((2m+1)t/2)/sin(phi/2), written in lobe-local t.
inline double lebesgue_midpoint_closed(std::size_t m, std::size_t per_lobe) {
    const double w = 2.0 * static_cast<double>(m) + 1.0;
    const double lobe = 2.0 * std::numbers::pi / w;
    const double h = lobe / static_cast<double>(per_lobe);
    double acc = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
        const double left = lobe * static_cast<double>(k);
        const double width = std::min(lobe, std::numbers::pi - left);
        const auto nodes = static_cast<std::size_t>(std::ceil(width / h - 1e-9));
        const double hk = width / static_cast<double>(nodes);
        for (std::size_t i = 0; i < nodes; ++i) {
            const double t = (static_cast<double>(i) + 0.5) * hk;
            acc += hk * std::abs(std::sin(0.5 * w * t) / std::sin(0.5 * (left + t)));
        }
    }
    return acc / std::numbers::pi;
}

inline double ls_slope(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i]; sy += y[i]; sxx += x[i] * x[i]; sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
