#include "korenblum/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "korenblum/fft.hpp"

namespace korenblum {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Terms below this fraction of the anchor coefficient are dropped from the circle evaluation.
constexpr double kTailCutoff = 1e-17;
// A grid node next to the true maximum of a degree-d polynomial sampled on >= 8(d+1) points
// keeps at least 1 - pi^2/128 of the maximum modulus (Bernstein); 0.9 leaves headroom.
constexpr double kCandidateFraction = 0.9;
constexpr std::size_t kMaxPolishedPeaks = 6;

double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

void check_radius(double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument("radius must lie in [0, 1], got " + std::to_string(r));
    }
}

// Maximum modulus on circles for one fixed polynomial. Coefficients are stored shifted down by
// the lowest nonzero degree so that g_[0] != 0; M(f, r) = r^lo * M(g, r).
class CircleMaximizer {
public:
    CircleMaximizer(const TaylorSeries& f, std::size_t oversample) : oversample_(oversample) {
        if (oversample == 0) throw std::invalid_argument("oversample must be >= 1");
        const auto lo = f.lowest_degree();
        if (!lo) return;
        lo_ = *lo;
        const std::size_t hi = *f.highest_degree();
        g_.assign(f.coeffs().begin() + static_cast<std::ptrdiff_t>(lo_),
                  f.coeffs().begin() + static_cast<std::ptrdiff_t>(hi) + 1);
        double max_abs = 0.0;
        for (const auto& c : g_) max_abs = std::max(max_abs, std::abs(c));
        log_abs_g0_ = std::log(std::abs(g_[0]));
        log_max_abs_ = std::log(max_abs);
    }

    bool zero() const noexcept { return g_.empty(); }
    std::size_t low() const noexcept { return lo_; }
    std::size_t high() const noexcept { return lo_ + g_.size() - 1; }
    std::span<const Complex> shifted() const noexcept { return g_; }

    double log_sup(double r) const {
        if (zero()) return kNegInf;
        if (r == 0.0) return lo_ == 0 ? log_abs_g0_ : kNegInf;
        const double log_r = std::log(r);
        const double base = static_cast<double>(lo_) * log_r;
        const std::size_t degree = g_.size() - 1;
        if (degree == 0) return log_abs_g0_ + base;

        // sum_{j > J} |g_j| r^j <= max|g| r^{J+1} / (1 - r); drop that tail once it is negligible
        // against |g_0| <= M(g, r).
        std::size_t top = degree;
        if (r < 1.0) {
            const double need =
                (log_abs_g0_ + std::log(kTailCutoff) - log_max_abs_ + std::log1p(-r)) / log_r;
            if (need < static_cast<double>(degree)) {
                top = need <= 1.0 ? 0 : static_cast<std::size_t>(std::ceil(need)) - 1;
            }
        }
        if (top == 0) return log_abs_g0_ + base;

        std::vector<Complex> scaled(top + 1);
        double power = 1.0;
        for (std::size_t j = 0; j <= top && power != 0.0; ++j) {
            scaled[j] = g_[j] * power;
            power *= r;
            if (power < 1e-300) power = 0.0;
        }

        const std::size_t points = fft::next_power_of_two(oversample_ * (top + 1));
        std::vector<Complex> grid(points);
        std::copy(scaled.begin(), scaled.end(), grid.begin());
        fft::transform(grid, fft::Sign::Positive);

        std::vector<double> sq(points);
        for (std::size_t k = 0; k < points; ++k) sq[k] = std::norm(grid[k]);
        const auto [min_it, max_it] = std::minmax_element(sq.begin(), sq.end());
        double best = *max_it;
        if (best == 0.0) return kNegInf;
        if (*min_it >= best * (1.0 - 1e-13)) return base + 0.5 * std::log(best);

        std::vector<std::pair<double, std::size_t>> peaks;
        const double floor = best * kCandidateFraction * kCandidateFraction;
        for (std::size_t k = 0; k < points; ++k) {
            const double left = sq[(k + points - 1) % points];
            const double right = sq[(k + 1) % points];
            if (sq[k] >= floor && sq[k] >= left && sq[k] >= right) peaks.emplace_back(sq[k], k);
        }
        const std::size_t keep = std::min(peaks.size(), kMaxPolishedPeaks);
        std::partial_sort(peaks.begin(), peaks.begin() + static_cast<std::ptrdiff_t>(keep),
                          peaks.end(), std::greater<>());
        const double spacing = 2.0 * std::numbers::pi / static_cast<double>(points);
        for (std::size_t p = 0; p < keep; ++p) {
            const double theta = spacing * static_cast<double>(peaks[p].second);
            best = std::max(best, polish(scaled, theta, spacing));
        }
        return base + 0.5 * std::log(best);
    }

private:
    // Newton ascent on phi(theta) = |g(r e^{i theta})|^2 confined to [theta0 - h, theta0 + h];
    // returns the largest phi evaluated.
    static double polish(std::span<const Complex> b, double theta0, double h) {
        double theta = theta0;
        double best = 0.0;
        for (int iter = 0; iter < 12; ++iter) {
            const Complex w = std::polar(1.0, theta);
            Complex g0{}, g1{}, g2{};
            for (std::size_t j = b.size(); j-- > 0;) {
                const double jd = static_cast<double>(j);
                g0 = g0 * w + b[j];
                g1 = g1 * w + jd * b[j];
                g2 = g2 * w + jd * jd * b[j];
            }
            best = std::max(best, std::norm(g0));
            // phi' = 2 Re(conj(g) g'), phi'' = 2 (|g'|^2 + Re(conj(g) g'')), g' = i g1, g'' = -g2.
            const double d1 = -2.0 * (std::conj(g0) * g1).imag();
            const double d2 = 2.0 * (std::norm(g1) - (std::conj(g0) * g2).real());
            if (!(d2 < 0.0)) break;
            const double next = std::clamp(theta - d1 / d2, theta0 - h, theta0 + h);
            if (std::abs(next - theta) < 1e-15) break;
            theta = next;
        }
        return best;
    }

    std::vector<Complex> g_;
    std::size_t lo_ = 0;
    std::size_t oversample_;
    double log_abs_g0_ = kNegInf;
    double log_max_abs_ = kNegInf;
};

// Upper bound for M(g, r) from a partition of the support into short chunks:
// M(g, r) <= sum_c r^{start_c} * sup_{|w|=1} |chunk_c(w)|.
class BlockMajorant {
public:
    explicit BlockMajorant(std::span<const Complex> g) {
        const std::size_t degree = g.size() - 1;
        std::size_t start = 0;
        while (start <= degree) {
            const std::size_t width = std::max<std::size_t>(1, start / 32);
            const std::size_t end = std::min(degree, start + width - 1);
            double bound = 0.0;
            for (std::size_t j = start; j <= end; ++j) bound += std::abs(g[j]);
            const std::size_t len = end - start + 1;
            if (bound > 0.0 && len >= 8) {
                const std::size_t points = fft::next_power_of_two(8 * len);
                std::vector<Complex> grid(points);
                std::copy(g.begin() + static_cast<std::ptrdiff_t>(start),
                          g.begin() + static_cast<std::ptrdiff_t>(end) + 1, grid.begin());
                fft::transform(grid, fft::Sign::Positive);
                double grid_max = 0.0;
                for (const auto& v : grid) grid_max = std::max(grid_max, std::abs(v));
                // |p(theta)| <= |p(node)| + (pi/K) * deg * ||p||  (Bernstein)
                const double slack = 1.0 - std::numbers::pi * static_cast<double>(len - 1) /
                                               static_cast<double>(points);
                bound = std::min(bound, grid_max / slack * (1.0 + 1e-12));
            }
            if (bound > 0.0) chunks_.push_back({start, std::log(bound)});
            start = end + 1;
        }
    }

    /// log of the majorant for the shifted polynomial at radius r > 0.
    double log_value(double r) const {
        const double log_r = std::log(r);
        double acc = kNegInf;
        for (const auto& c : chunks_) acc = log_add(acc, c.log_bound + static_cast<double>(c.start) * log_r);
        return acc;
    }

private:
    struct Chunk {
        std::size_t start;
        double log_bound;
    };
    std::vector<Chunk> chunks_;
};

std::vector<double> candidate_radii(std::size_t lo, std::size_t hi, double mu, int per_octave,
                                    bool localize) {
    std::vector<double> radii;
    double r_min = 0.0;
    if (localize && static_cast<double>(lo) > mu) r_min = 1.0 - mu / static_cast<double>(lo);
    radii.push_back(r_min);
    if (hi == 0) return radii;
    const double n0 = localize ? static_cast<double>(std::max<std::size_t>(1, lo)) : 1.0;
    const double top = static_cast<double>(hi);
    for (int k = 0;; ++k) {
        const double n = n0 * std::exp2(static_cast<double>(k) / per_octave);
        if (n > top * (1.0 + 1e-12)) break;
        const double r = n / (n + mu);
        if (r > r_min) radii.push_back(r);
    }
    const double r_top = top / (top + mu);
    if (r_top > r_min) radii.push_back(r_top);
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end(),
                            [](double a, double b) { return std::abs(a - b) <= 1e-15; }),
                radii.end());
    return radii;
}

class NormObjective {
public:
    NormObjective(const CircleMaximizer& circle, double mu) : circle_(circle), mu_(mu) {}

    double log_value(double r) {
        ++evaluations_;
        if (r == 0.0) return circle_.log_sup(0.0);
        return circle_.log_sup(r) + mu_ * std::log1p(-r);
    }

    std::size_t evaluations() const noexcept { return evaluations_; }

private:
    const CircleMaximizer& circle_;
    double mu_;
    std::size_t evaluations_ = 0;
};

}  // namespace

std::vector<Complex> eval_circle(const TaylorSeries& f, double r, std::size_t points) {
    check_radius(r);
    if (points == 0) throw std::invalid_argument("eval_circle needs at least one point");
    if (points < f.degree() + 1) {
        throw std::invalid_argument("eval_circle: " + std::to_string(points) +
                                    " points alias a polynomial of degree " +
                                    std::to_string(f.degree()));
    }
    std::vector<Complex> grid(points);
    double power = 1.0;
    for (std::size_t j = 0; j <= f.degree(); ++j) {
        grid[j] = f[j] * power;
        power *= r;
    }
    fft::transform(grid, fft::Sign::Positive);
    return grid;
}

double log_sup_modulus(const TaylorSeries& f, double r, std::size_t oversample) {
    check_radius(r);
    return CircleMaximizer(f, oversample).log_sup(r);
}

double sup_modulus(const TaylorSeries& f, double r, std::size_t oversample) {
    return std::exp(log_sup_modulus(f, r, oversample));
}

double max_radius(double degree, WeightExponent mu) {
    if (!(degree > 0.0)) throw std::invalid_argument("max_radius needs a positive degree");
    return degree / (degree + mu.value());
}

double monomial_norm(std::size_t degree, WeightExponent mu) {
    if (degree == 0) return 1.0;
    const double n = static_cast<double>(degree);
    const double m = mu.value();
    return std::exp(-n * std::log1p(m / n) + m * std::log(m / (n + m)));
}

double tail_sup_radius(std::size_t n, WeightExponent mu) {
    if (!(static_cast<double>(n) > mu.value())) {
        throw std::invalid_argument("tail_sup_radius requires n > mu (n = " + std::to_string(n) +
                                    ", mu = " + std::to_string(mu.value()) + ")");
    }
    return 1.0 - mu.value() / static_cast<double>(n);
}

NormResult weighted_norm_search(const TaylorSeries& f, WeightExponent mu,
                                const NormSearchOptions& options) {
    if (options.ladder_per_octave < 1) throw std::invalid_argument("ladder density must be >= 1");
    const CircleMaximizer circle(f, options.oversample);
    if (circle.zero()) return {};
    const double m = mu.value();
    NormObjective objective(circle, m);
    const auto radii = candidate_radii(circle.low(), circle.high(), m, options.ladder_per_octave,
                                       options.localize_tail);
    const std::size_t count = radii.size();

    const BlockMajorant majorant(circle.shifted());
    const double low = static_cast<double>(circle.low());
    const auto log_maj = [&](double r) {
        if (r == 0.0) return circle.low() == 0 ? std::log(std::abs(circle.shifted()[0])) : kNegInf;
        return majorant.log_value(r) + low * std::log(r);
    };

    // log M_inf at evaluated rungs; NaN marks rungs not visited.
    std::vector<double> log_sup(count, std::numeric_limits<double>::quiet_NaN());
    double best = kNegInf;
    double best_r = 0.0;
    const auto visit = [&](std::size_t i) {
        const double v = objective.log_value(radii[i]);
        log_sup[i] = radii[i] == 0.0 ? v : v - m * std::log1p(-radii[i]);
        if (v > best) {
            best = v;
            best_r = radii[i];
        }
    };

    // Upper bound of log(M(r)(1-r)^mu) on [r_i, r_j] from the evaluated endpoints, combining
    // monotonicity of M, the coefficient-block majorant, and convexity of log M in log r.
    const auto gap_bound = [&](std::size_t i, std::size_t j) {
        const double ra = radii[i];
        const double rb = radii[j];
        const double tail = m * std::log1p(-ra);
        double bound = std::min(log_sup[j], log_maj(rb)) + tail;
        if (ra > 0.0 && log_sup[i] != kNegInf && log_sup[j] != kNegInf) {
            const double xa = std::log(ra);
            const double slope = (log_sup[j] - log_sup[i]) / (std::log(rb) - xa);
            const double r_star = slope > 0.0 ? std::clamp(slope / (slope + m), ra, rb) : ra;
            const double chord = log_sup[i] + slope * (std::log(r_star) - xa) + m * std::log1p(-r_star);
            bound = std::min(bound, chord);
        }
        return bound + 1e-12;
    };

    struct Gap {
        double bound;
        std::size_t lo, hi;
        bool operator<(const Gap& o) const { return bound < o.bound; }
    };
    // Gaps that cannot improve on the incumbent by more than this relative margin are dropped;
    // it keeps plateaus (e.g. 1 - r^{D+1}) from being bisected down to single rungs.
    constexpr double prune_margin = 1e-10;
    std::priority_queue<Gap> pending;
    std::vector<Gap> finest;
    visit(0);
    if (count > 1) {
        visit(count - 1);
        pending.push({gap_bound(0, count - 1), 0, count - 1});
    }
    while (!pending.empty()) {
        const Gap gap = pending.top();
        pending.pop();
        if (gap.bound <= best + prune_margin) continue;
        if (gap.hi == gap.lo + 1) {
            finest.push_back(gap);
            continue;
        }
        const std::size_t mid = gap.lo + (gap.hi - gap.lo) / 2;
        visit(mid);
        pending.push({gap_bound(gap.lo, mid), gap.lo, mid});
        pending.push({gap_bound(mid, gap.hi), mid, gap.hi});
    }

    // Polish inside the surviving adjacent-rung intervals, most promising first.
    std::sort(finest.begin(), finest.end(), [](const Gap& a, const Gap& b) { return b < a; });
    std::size_t polished = 0;
    for (const Gap& gap : finest) {
        if (polished == 4 || gap.bound <= best + prune_margin) break;
        ++polished;
        const double a = radii[gap.lo];
        const double width = radii[gap.hi] - a;
        const auto [t, neg] = boost::math::tools::brent_find_minima(
            [&](double s) { return -objective.log_value(a + s * width); }, 0.0, 1.0, 24);
        if (-neg > best) {
            best = -neg;
            best_r = a + t * width;
        }
    }
    return {std::exp(best), best_r, objective.evaluations()};
}

double weighted_norm(const TaylorSeries& f, WeightExponent mu) {
    return weighted_norm_search(f, mu).value;
}

double weighted_norm_full_range(const TaylorSeries& f, WeightExponent mu) {
    NormSearchOptions options;
    options.localize_tail = false;
    return weighted_norm_search(f, mu, options).value;
}

std::vector<RadialProfilePoint> radial_profile(const TaylorSeries& f, WeightExponent mu,
                                               int ladder_density) {
    if (ladder_density < 2) throw std::invalid_argument("radial_profile needs ladder density >= 2");
    const CircleMaximizer circle(f, 8);
    if (circle.zero()) return {RadialProfilePoint{0.0, 0.0}};
    NormObjective objective(circle, mu.value());
    std::vector<RadialProfilePoint> out;
    for (const double r :
         candidate_radii(circle.low(), circle.high(), mu.value(), ladder_density, true)) {
        out.push_back({r, std::exp(objective.log_value(r))});
    }
    return out;
}

}  // namespace korenblum
