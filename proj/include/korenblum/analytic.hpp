#pragma once

#include <cstddef>
#include <vector>

#include "korenblum/taylor_series.hpp"
#include "korenblum/types.hpp"

namespace korenblum {

/// One sample of r -> M_inf(f, r) (1 - r)^mu.
struct RadialProfilePoint {
    double r = 0.0;
    double value = 0.0;
};

/**
 * Values f(r e^{2 pi i k / K}), k = 0..K-1, via one length-K Fourier synthesis of a_j r^j.
 * Requires K >= degree + 1 (a shorter grid would alias coefficients) and r in [0, 1].
 */
std::vector<Complex> eval_circle(const TaylorSeries& f, double r, std::size_t points);

/**
 * Maximum modulus M_inf(f, r) = max_{|z| = r} |f(z)|.
 *
 * The circle is sampled on at least oversample * (support length) points (rounded up to a
 * power of two); the best grid local maxima are then polished with a safeguarded Newton
 * iteration on |f|^2. The result is the largest modulus actually evaluated, so it never
 * exceeds the true maximum by more than rounding.
 */
double sup_modulus(const TaylorSeries& f, double r, std::size_t oversample = 8);

/// log M_inf(f, r); -inf for the zero polynomial or when every term underflows.
double log_sup_modulus(const TaylorSeries& f, double r, std::size_t oversample = 8);

/// Maximizer N / (N + mu) of r^N (1 - r)^mu on [0, 1]. N may be fractional; N > 0.
double max_radius(double degree, WeightExponent mu);

/// ||z^N||_mu in closed form, evaluated in log space.
double monomial_norm(std::size_t degree, WeightExponent mu);

/// 1 - mu / n. Throws std::invalid_argument unless n > mu.
double tail_sup_radius(std::size_t n, WeightExponent mu);

struct NormSearchOptions {
    /// Restrict the radius search to [1 - mu/n_low, 1) when the lowest degree n_low exceeds mu.
    bool localize_tail = true;
    std::size_t oversample = 8;
    int ladder_per_octave = 64;
};

struct NormResult {
    double value = 0.0;
    double argmax_radius = 0.0;
    /// Number of radii at which M_inf was evaluated (ladder + refinement).
    std::size_t evaluations = 0;
};

/**
 * ||f||_mu = sup_{0 <= r < 1} M_inf(f, r) (1 - r)^mu.
 *
 * Candidate radii are max_radius(N, mu) for N on a geometric ladder between the lowest and
 * highest nonzero degree (plus r = 0, or 1 - mu/n_low when localized). Beyond the top rung
 * N = deg f the objective is nonincreasing, so the ladder stops there. Rungs are visited in
 * order of a coefficient-block majorant and skipped once the majorant cannot beat the best
 * value found; the best rungs are then polished by golden-section search.
 */
NormResult weighted_norm_search(const TaylorSeries& f, WeightExponent mu,
                                const NormSearchOptions& options = {});

double weighted_norm(const TaylorSeries& f, WeightExponent mu);

/// Same objective searched over all of [0, 1) without the tail localization.
double weighted_norm_full_range(const TaylorSeries& f, WeightExponent mu);

/// The objective sampled on the candidate ladder, with ladder_density rungs per octave.
std::vector<RadialProfilePoint> radial_profile(const TaylorSeries& f, WeightExponent mu,
                                               int ladder_density);

}  // namespace korenblum
