#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "korenblum/analytic.hpp"
#include "korenblum/kothe.hpp"
#include "oracles.hpp"

using korenblum::Complex;
using korenblum::TaylorSeries;
using korenblum::WeightExponent;
namespace kb = korenblum;

namespace {

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); }

TaylorSeries random_poly(std::mt19937_64& rng, std::size_t degree, std::size_t low = 0) {
    auto c = oracle::random_coeffs(rng, degree + 1);
    for (std::size_t j = 0; j < low; ++j) c[j] = 0.0;
    return TaylorSeries(std::move(c));
}

TaylorSeries geometric(std::size_t degree) { return TaylorSeries(std::vector<Complex>(degree + 1, 1.0)); }

}  // namespace

TEST_CASE("eval_circle on constants and roots of unity") {
    for (const auto& v : kb::eval_circle(TaylorSeries({1.0}), 0.5, 4)) CHECK(std::abs(v - 1.0) < 1e-15);
    const auto z = kb::eval_circle(TaylorSeries({0.0, 1.0}), 1.0, 4);
    const Complex expect[] = {1.0, Complex{0, 1}, -1.0, Complex{0, -1}};
    for (int k = 0; k < 4; ++k) CHECK(std::abs(z[k] - expect[k]) < 1e-15);
}

TEST_CASE("eval_circle agrees with Horner at every grid point") {
    const TaylorSeries f({0.0, 0.0, 1.0, 1.0});
    const auto v = kb::eval_circle(f, 1.0, 4);
    CHECK(std::abs(v[0] - 2.0) < 1e-14);
    CHECK(std::abs(v[2]) < 1e-14);
    std::mt19937_64 rng(3);
    for (std::size_t K : {33u, 64u, 200u}) {
        const auto g = random_poly(rng, 32);
        const auto w = kb::eval_circle(g, 0.8, K);
        for (std::size_t k = 0; k < K; ++k) {
            const Complex z = std::polar(0.8, 2.0 * std::numbers::pi * k / K);
            CHECK(std::abs(w[k] - oracle::horner(g.coeffs(), z)) < 1e-12);
        }
    }
}

TEST_CASE("eval_circle rejects aliasing grids and radii outside [0,1]") {
    const TaylorSeries f({1.0, 2.0, 3.0});
    CHECK_THROWS_AS(kb::eval_circle(f, 0.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(kb::eval_circle(f, 1.5, 8), std::invalid_argument);
    CHECK_THROWS_AS(kb::eval_circle(f, -0.1, 8), std::invalid_argument);
}

TEST_CASE("sup_modulus examples") {
    CHECK(kb::sup_modulus(TaylorSeries({0.0, 1.0}), 0.7) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(kb::sup_modulus(TaylorSeries({1.0, 1.0}), 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(kb::sup_modulus(TaylorSeries({0.0, 0.0, 1.0, 1.0}), 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(kb::sup_modulus(TaylorSeries(), 0.5) == 0.0);
}

TEST_CASE("sup_modulus matches a dense Horner scan and never exceeds it") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        const auto f = random_poly(rng, 5 + 23 * trial);
        for (double r : {0.3, 0.9, 0.999, 1.0}) {
            const double got = kb::sup_modulus(f, r);
            const double ref = oracle::circle_max(f.coeffs(), r, 16 * (f.degree() + 1));
            CHECK(got <= ref * (1.0 + 1e-12));
            CHECK(close_rel(got, ref, 1e-10));
        }
    }
}

TEST_CASE("sup_modulus is nondecreasing in r") {
    std::mt19937_64 rng(4);
    const auto f = random_poly(rng, 300);
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double m = kb::sup_modulus(f, i / 100.0);
        CHECK(m >= prev * (1.0 - 1e-12));
        prev = m;
    }
}

TEST_CASE("max_radius and monomial_norm closed forms") {
    CHECK(kb::max_radius(1, WeightExponent{1}) == doctest::Approx(0.5));
    CHECK(kb::max_radius(4, WeightExponent{1}) == doctest::Approx(0.8));
    CHECK(kb::max_radius(3, WeightExponent{2}) == doctest::Approx(0.6));
    CHECK_THROWS_AS(kb::max_radius(0, WeightExponent{1}), std::invalid_argument);
    CHECK(kb::monomial_norm(0, WeightExponent{3.3}) == 1.0);
    CHECK(kb::monomial_norm(1, WeightExponent{1}) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(kb::monomial_norm(20000, WeightExponent{2.7}) > 0.0);
}

TEST_CASE("monomial_norm equals weighted_norm of the monomial") {
    const WeightExponent two{2};
    CHECK(close_rel(kb::monomial_norm(100, two), kb::weighted_norm(TaylorSeries::monomial(100), two), 1e-9));
    for (double mu : {0.5, 1.0, 2.7}) {
        for (std::size_t n : {1u, 2u, 7u, 64u, 513u, 4096u}) {
            CAPTURE(mu);
            CAPTURE(n);
            const WeightExponent m{mu};
            CHECK(close_rel(kb::monomial_norm(n, m), kb::weighted_norm(TaylorSeries::monomial(n), m), 1e-9));
        }
    }
}

TEST_CASE("monomial_norm over s_mu lies in [e^{-mu}(1-0.05), 1] from N = 64") {
    for (double mu : {0.5, 1.0, 2.7}) {
        const WeightExponent m{mu};
        for (std::size_t n = 64; n <= 8192; n *= 2) {
            const double ratio = kb::monomial_norm(n, m) / kb::weight_s(m, n);
            CHECK(ratio <= 1.0);
            CHECK(ratio >= std::exp(-mu) * 0.95);
        }
    }
}

TEST_CASE("tail_sup_radius") {
    CHECK(kb::tail_sup_radius(4, WeightExponent{1}) == doctest::Approx(0.75));
    CHECK(kb::tail_sup_radius(10, WeightExponent{2.5}) == doctest::Approx(0.75));
    CHECK_THROWS_AS(kb::tail_sup_radius(2, WeightExponent{2}), std::invalid_argument);
    CHECK_THROWS_AS(kb::tail_sup_radius(1, WeightExponent{1.5}), std::invalid_argument);
}

TEST_CASE("localized and full-range norms agree for z^8 + z^9") {
    std::vector<Complex> c(10, 0.0);
    c[8] = c[9] = 1.0;
    const TaylorSeries f(c);
    const WeightExponent one{1};
    const double local = kb::weighted_norm(f, one);
    CHECK(close_rel(local, kb::weighted_norm_full_range(f, one), 1e-9));
    const auto grid = oracle::brute_force_norm(f, 1.0, 400);
    CHECK(close_rel(local, grid.polished, 1e-8));
}

TEST_CASE("localized and full-range norms agree on random tails") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t low = 3 + 17 * trial;
        const auto f = random_poly(rng, low + 40 + 31 * trial, low);
        const WeightExponent mu{0.5 + 0.25 * (trial % 8)};
        CHECK(close_rel(kb::weighted_norm(f, mu), kb::weighted_norm_full_range(f, mu), 1e-9));
    }
}

TEST_CASE("weighted_norm trivial cases") {
    for (double mu : {0.1, 1.0, 5.0}) CHECK(kb::weighted_norm(TaylorSeries({1.0}), WeightExponent{mu}) == 1.0);
    CHECK(kb::weighted_norm(TaylorSeries({0.0, 1.0}), WeightExponent{1}) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(kb::weighted_norm(TaylorSeries(), WeightExponent{1}) == 0.0);
    CHECK(kb::weighted_norm(TaylorSeries({0.0, 0.0, 0.0}), WeightExponent{1}) == 0.0);
}

TEST_CASE("weighted_norm agrees with the brute-force grid oracle on random polynomials") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 6; ++trial) {
        const auto f = random_poly(rng, 1 + 13 * trial);
        for (double mu : {0.5, 1.0, 2.7}) {
            CAPTURE(trial);
            CAPTURE(mu);
            const double got = kb::weighted_norm(f, WeightExponent{mu});
            const auto grid = oracle::brute_force_norm(f, mu, 500);
            CHECK(grid.raw <= got * (1.0 + 1e-9));
            CHECK(close_rel(got, grid.polished, 1e-8));
        }
    }
}

TEST_CASE("truncated geometric series") {
    // mu = 1: M(r)(1 - r) = 1 - r^{D+1} <= 1 with equality at r = 0, at every truncation degree.
    for (std::size_t d : {15u, 255u, 4095u}) {
        CHECK(kb::weighted_norm(geometric(d), WeightExponent{1}) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // mu = 1.5 stays bounded; mu = 0.5 grows like sqrt(D).
    double prev15 = 0.0, prev05 = 0.0;
    for (std::size_t d : {63u, 255u, 1023u, 4095u}) {
        const double v15 = kb::weighted_norm(geometric(d), WeightExponent{1.5});
        const double v05 = kb::weighted_norm(geometric(d), WeightExponent{0.5});
        CHECK(v15 >= prev15);
        CHECK(v15 <= 1.0);
        CHECK(v05 > prev05 * 1.8);
        prev15 = v15;
        prev05 = v05;
    }
    const auto f = geometric(48);
    CHECK(close_rel(kb::weighted_norm(f, WeightExponent{1.5}), oracle::brute_force_norm(f, 1.5, 400).polished, 1e-8));
}

TEST_CASE("norm axioms: monotone in mu, homogeneity, triangle inequality") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 4; ++trial) {
        const auto f = random_poly(rng, 64 + 300 * trial);
        const auto g = random_poly(rng, 1024 - 200 * trial);
        const WeightExponent mu{0.4 + 0.6 * trial};
        const WeightExponent mu_big{mu.value() + 0.3};
        const double nf = kb::weighted_norm(f, mu);
        const double ng = kb::weighted_norm(g, mu);
        CHECK(kb::weighted_norm(f, mu_big) <= nf * (1.0 + 1e-9));
        const Complex s{-2.5, 1.25};
        CHECK(close_rel(kb::weighted_norm(s * f, mu), std::abs(s) * nf, 1e-9));
        CHECK(kb::weighted_norm(f + g, mu) <= (nf + ng) * (1.0 + 1e-9));
    }
}

TEST_CASE("radial_profile") {
    const WeightExponent one{1};
    const auto flat = kb::radial_profile(TaylorSeries({1.0}), one, 4);
    REQUIRE_FALSE(flat.empty());
    for (const auto& p : flat) CHECK(p.value == doctest::Approx(1.0 - p.r).epsilon(1e-14));

    const auto quartic = kb::radial_profile(TaylorSeries::monomial(4), one, 16);
    const auto peak = std::max_element(quartic.begin(), quartic.end(),
                                       [](const auto& a, const auto& b) { return a.value < b.value; });
    CHECK(peak->r == doctest::Approx(0.8).epsilon(1e-12));

    std::mt19937_64 rng(1);
    const auto f = random_poly(rng, 200);
    const double norm = kb::weighted_norm(f, one);
    for (const auto& p : kb::radial_profile(f, one, 8)) {
        CHECK(p.r >= 0.0);
        CHECK(p.r < 1.0);
        CHECK(p.value <= norm * (1.0 + 1e-12));
    }
    CHECK_THROWS_AS(kb::radial_profile(f, one, 1), std::invalid_argument);
}
