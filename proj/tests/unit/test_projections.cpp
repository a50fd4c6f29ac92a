#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "korenblum/analytic.hpp"
#include "korenblum/projections.hpp"
#include "oracles.hpp"

using korenblum::Complex;
using korenblum::TaylorSeries;
using korenblum::WeightExponent;
namespace kb = korenblum;

namespace {

TaylorSeries geometric(std::size_t degree) { return TaylorSeries(std::vector<Complex>(degree + 1, 1.0)); }

// Taylor coefficients of (1 - z)^{-a}: c_0 = 1, c_j = c_{j-1} (j - 1 + a) / j.
TaylorSeries binomial(double a, std::size_t degree) {
    std::vector<Complex> c(degree + 1);
    double v = 1.0;
    c[0] = v;
    for (std::size_t j = 1; j <= degree; ++j) {
        v *= (static_cast<double>(j) - 1.0 + a) / static_cast<double>(j);
        c[j] = v;
    }
    return TaylorSeries(std::move(c));
}

}  // namespace

TEST_CASE("dirichlet_eval examples and direct-sum agreement") {
    CHECK(kb::dirichlet_eval(3, 0.0) == 7.0);
    CHECK(kb::dirichlet_eval(3, 2.0 * std::numbers::pi) == doctest::Approx(7.0));
    CHECK(kb::dirichlet_eval(1, std::numbers::pi) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(kb::dirichlet_eval(8, 0.37) - oracle::dirichlet_direct(8, 0.37)) < 1e-12);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> phi(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        const std::size_t m = 1 + static_cast<std::size_t>(i % 50);
        const double p = phi(rng);
        CHECK(std::abs(kb::dirichlet_eval(m, p) - oracle::dirichlet_direct(m, p)) < 1e-12);
    }
    CHECK_THROWS_AS(kb::DirichletKernel(0), std::invalid_argument);
}

TEST_CASE("kernel_l1 matches the closed form at m = 1 and a midpoint-rule oracle") {
    const double m1 = 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / std::numbers::pi;
    CHECK(std::abs(kb::kernel_l1(1) - m1) < 1e-10);
    for (std::size_t m : {2u, 5u, 17u, 64u}) {
        CAPTURE(m);
        CHECK(std::abs(kb::kernel_l1(m) - oracle::lebesgue_midpoint(m, 2000)) < 2e-7);
    }
}

TEST_CASE("kernel_l1 growth") {
    double prev = 0.0;
    double prev_ratio = 1e9;
    for (std::size_t m = 64; m <= 8192; m *= 2) {
        const double l = kb::kernel_l1(m);
        CHECK(l >= 1.0);
        CHECK(l > prev);
        const double ratio = l / std::log(static_cast<double>(m));
        CHECK(ratio < prev_ratio);
        CHECK(ratio > 0.3);
        if (m < 8192) {
            const double step = kb::kernel_l1(2 * m) - l;
            const double expect = 4.0 / (std::numbers::pi * std::numbers::pi) * std::log(2.0);
            CHECK(step >= 0.9 * expect);
            CHECK(step <= 1.1 * expect);
        }
        prev = l;
        prev_ratio = ratio;
    }
}

TEST_CASE("partial_sum and tail") {
    const TaylorSeries f({1.0, 2.0, 3.0});
    CHECK(kb::partial_sum(f, 1) == TaylorSeries({1.0, 2.0}));
    CHECK(kb::partial_sum(f, 5) == f);
    std::mt19937_64 rng(6);
    const TaylorSeries g(oracle::random_coeffs(rng, 100));
    for (std::size_t n : {0u, 3u, 40u, 99u}) {
        const auto t = kb::tail(g, n);
        CHECK(t.degree() == g.degree());
        if (!t.is_zero()) CHECK(*t.lowest_degree() >= n + 1);
        CHECK(kb::partial_sum(g, n) + t == g);
        for (std::size_t m : {1u, 20u, 70u}) {
            CHECK(kb::partial_sum(kb::partial_sum(g, n), m) == kb::partial_sum(g, std::min(n, m)));
        }
    }
}

TEST_CASE("tail norm computed directly and with the localized search agree") {
    std::mt19937_64 rng(12);
    const TaylorSeries g(oracle::random_coeffs(rng, 512));
    const WeightExponent mu{1.3};
    for (std::size_t n : {2u, 31u, 200u}) {
        const auto t = kb::tail(g, n);
        CHECK(std::abs(kb::weighted_norm(t, mu) / kb::weighted_norm_full_range(t, mu) - 1.0) < 1e-9);
    }
}

TEST_CASE("projection_growth") {
    const WeightExponent one{1};
    const auto mono = kb::projection_growth(TaylorSeries::monomial(5), one, std::vector<std::size_t>{5, 8, 100});
    for (double r : mono) CHECK(r == doctest::Approx(1.0));
    std::mt19937_64 rng(1);
    const TaylorSeries f(oracle::random_coeffs(rng, 400));
    const std::vector<std::size_t> ns{2, 10, 100, 399};
    for (std::size_t i = 0; const double r : kb::projection_growth(f, one, ns)) {
        CHECK(r >= 0.0);
        CHECK(r <= 4.0 * (1.0 + std::log(static_cast<double>(ns[i++]))));
    }
    CHECK_THROWS_AS(kb::projection_growth(f, one, std::vector<std::size_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(kb::projection_growth(f, one, std::vector<std::size_t>{1}), std::invalid_argument);
    CHECK_THROWS_AS(kb::projection_growth(TaylorSeries(), one, ns), std::invalid_argument);
}

TEST_CASE("tail_bound_check on a polynomial below n and on the truncated geometric series") {
    const auto rec = kb::tail_bound_check(TaylorSeries({1.0, 2.0, 3.0}), WeightExponent{1}, WeightExponent{1.5}, 4);
    CHECK(rec.measured == 0.0);
    CHECK(rec.bound > 0.0);
    CHECK(rec.ratio == 0.0);

    const auto f = geometric(4095);
    std::vector<double> logn, logm;
    double prev_bound = 1e300;
    for (std::size_t n = 64; n <= 2048; n *= 2) {
        const auto r = kb::tail_bound_check(f, WeightExponent{1}, WeightExponent{1.5}, n);
        CHECK(r.ratio <= 4.0);
        CHECK(r.bound < prev_bound);
        CHECK(r.ratio == doctest::Approx(r.measured / r.bound));
        prev_bound = r.bound;
        logn.push_back(std::log(static_cast<double>(n)));
        logm.push_back(std::log(r.measured));
    }
    const double slope = oracle::ls_slope(logn, logm);
    CHECK(slope >= -0.65);
    CHECK(slope <= -0.35);

    CHECK_THROWS_AS(kb::tail_bound_check(f, WeightExponent{1.5}, WeightExponent{1.5}, 8), std::invalid_argument);
    CHECK_THROWS_AS(kb::tail_bound_check(f, WeightExponent{2}, WeightExponent{1}, 8), std::invalid_argument);
    CHECK_THROWS_AS(kb::tail_bound_check(f, WeightExponent{1}, WeightExponent{2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(kb::tail_bound_check(TaylorSeries(), WeightExponent{1}, WeightExponent{2}, 4), std::invalid_argument);
}

TEST_CASE("basis_convergence_suite") {
    const std::vector<WeightExponent> mus{WeightExponent{1.1}, WeightExponent{1.5}, WeightExponent{2}};
    const std::vector<std::size_t> ns{16, 32, 64, 128, 256, 512, 1024};

    const auto mono = kb::basis_convergence_suite(TaylorSeries::monomial(16), 1.0, mus, ns);
    for (const auto& r : mono) CHECK(r.measured == 0.0);

    const auto f = binomial(1.0, 2047);
    const auto recs = kb::basis_convergence_suite(f, 1.0, mus, ns);
    REQUIRE(recs.size() == mus.size() * ns.size());
    std::vector<double> slopes;
    for (std::size_t i = 0; i < mus.size(); ++i) {
        const std::span<const kb::RateBoundRecord> row(recs.data() + i * ns.size(), ns.size());
        CHECK(row.front().mu0 == doctest::Approx((1.0 + mus[i].value()) / 2.0));
        CHECK(kb::settles_nonincreasing(row, 0));
        CHECK(row.back().measured < row.front().measured);
        std::vector<double> x, y;
        for (const auto& r : row) {
            x.push_back(std::log(static_cast<double>(r.n)));
            y.push_back(std::log(r.measured));
        }
        slopes.push_back(oracle::ls_slope(x, y));
    }
    CHECK(slopes[1] < slopes[0]);
    CHECK(slopes[2] < slopes[1]);
    CHECK_THROWS_AS(kb::basis_convergence_suite(f, 1.5, mus, ns), std::invalid_argument);
}

TEST_CASE("nuclearity partial sums") {
    const auto sums = kb::nuclearity_partial_sums(0.0, WeightExponent{0.4}, WeightExponent{1}, 8192);
    REQUIRE(sums.size() == 8192);
    for (std::size_t i = 1; i < sums.size(); ++i) CHECK(sums[i] > sums[i - 1]);
    // Terms behave like (n/mu)^{-mu} (n/nu)^{nu} e^{mu-nu}, so the partial sums grow like N^{1-(mu-nu)}.
    std::vector<double> x, y;
    for (std::size_t n = 256; n <= 8192; n *= 2) {
        x.push_back(std::log(static_cast<double>(n)));
        y.push_back(std::log(sums[n - 1]));
    }
    const double slope = oracle::ls_slope(x, y);
    CHECK(slope > 0.3);
    CHECK(slope < 0.5);
    CHECK(kb::nuclearity_divergence(0.0, WeightExponent{0.4}, WeightExponent{1}, 8192) == sums.back());
    // Independent oracle for a single partial sum from the closed-form monomial norms.
    double direct = 0.0;
    for (std::size_t n = 1; n <= 100; ++n) {
        const double dn = static_cast<double>(n);
        auto norm = [&](double m) { return std::pow(dn / (dn + m), dn) * std::pow(m / (dn + m), m); };
        direct += norm(1.0) / norm(0.4);
    }
    CHECK(sums[99] == doctest::Approx(direct).epsilon(1e-12));
    CHECK_THROWS_AS(kb::nuclearity_divergence(0.0, WeightExponent{0.5}, WeightExponent{1.5}, 10), std::invalid_argument);
    CHECK_THROWS_AS(kb::nuclearity_divergence(0.5, WeightExponent{0.4}, WeightExponent{1}, 10), std::invalid_argument);
    CHECK_THROWS_AS(kb::nuclearity_divergence(0.0, WeightExponent{1}, WeightExponent{0.5}, 10), std::invalid_argument);
}
