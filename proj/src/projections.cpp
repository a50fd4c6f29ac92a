#include "korenblum/projections.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "korenblum/analytic.hpp"

namespace korenblum {

DirichletKernel::DirichletKernel(std::size_t order) : m_(order) {
    if (order == 0) throw std::invalid_argument("Dirichlet kernel order must be >= 1");
}

double DirichletKernel::operator()(double phi) const noexcept {
    const double half = 0.5 * std::remainder(phi, 2.0 * std::numbers::pi);
    const double den = std::sin(half);
    const double width = 2.0 * static_cast<double>(m_) + 1.0;
    if (den == 0.0) return width;
    return std::sin(width * half) / den;
}

double DirichletKernel::l1_mean() const {
    // |D_m| is even and smooth between its zeros a_k = 2 pi k / (2m + 1); integrate lobe by lobe on
    // [0, pi]. Inside lobe k the numerator is evaluated as |sin((2m + 1) t / 2)| with t = phi - a_k,
    // which avoids reducing a large argument.
    using Quadrature = boost::math::quadrature::gauss_kronrod<double, 15>;
    const double width = 2.0 * static_cast<double>(m_) + 1.0;
    double total = 0.0;
    for (std::size_t k = 0; k <= m_; ++k) {
        const double left = 2.0 * std::numbers::pi * static_cast<double>(k) / width;
        const double right =
            k < m_ ? 2.0 * std::numbers::pi * static_cast<double>(k + 1) / width : std::numbers::pi;
        const auto lobe = [&](double t) {
            const double phi = left + t;
            if (phi == 0.0) return width;
            return std::abs(std::sin(0.5 * width * t) / std::sin(0.5 * phi));
        };
        total += Quadrature::integrate(lobe, 0.0, right - left, 6, 1e-12);
    }
    return total / std::numbers::pi;
}

double dirichlet_eval(std::size_t m, double phi) { return DirichletKernel(m)(phi); }

double kernel_l1(std::size_t m) { return DirichletKernel(m).l1_mean(); }

TaylorSeries partial_sum(const TaylorSeries& f, std::size_t n) {
    if (n >= f.degree()) return f;
    return TaylorSeries(std::vector<Complex>(f.coeffs().begin(),
                                            f.coeffs().begin() + static_cast<std::ptrdiff_t>(n) + 1));
}

TaylorSeries tail(const TaylorSeries& f, std::size_t n) {
    std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
    std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(n + 1, c.size())), Complex{});
    return TaylorSeries(std::move(c));
}

std::vector<double> projection_growth(const TaylorSeries& f, WeightExponent mu,
                                      std::span<const std::size_t> ns) {
    if (ns.empty()) throw std::invalid_argument("projection_growth needs at least one n");
    for (const auto n : ns) {
        if (n < 2) throw std::invalid_argument("projection_growth needs n >= 2");
    }
    const double base = weighted_norm(f, mu);
    if (base == 0.0) throw std::invalid_argument("projection_growth: ||f||_mu is zero");
    std::vector<double> out;
    out.reserve(ns.size());
    for (const auto n : ns) out.push_back(weighted_norm(partial_sum(f, n), mu) / base);
    return out;
}

RateBoundRecord tail_bound_check(const TaylorSeries& f, double norm_mu0, WeightExponent mu0,
                                 WeightExponent mu, std::size_t n) {
    if (!(mu.value() > mu0.value())) {
        throw std::invalid_argument("tail_bound_check requires mu > mu0");
    }
    if (n < 2) throw std::invalid_argument("tail_bound_check requires n >= 2");
    if (!(norm_mu0 > 0.0)) throw std::invalid_argument("tail_bound_check: ||f||_mu0 is zero");
    RateBoundRecord rec;
    rec.n = n;
    rec.mu0 = mu0.value();
    rec.mu = mu.value();
    const double nd = static_cast<double>(n);
    rec.bound = std::pow(mu.value() / (nd + 1.0), mu.value() - mu0.value()) * (1.0 + std::log(nd)) *
                norm_mu0;
    rec.measured = weighted_norm(tail(f, n), mu);
    rec.ratio = rec.measured / rec.bound;
    return rec;
}

RateBoundRecord tail_bound_check(const TaylorSeries& f, WeightExponent mu0, WeightExponent mu,
                                 std::size_t n) {
    if (!(mu.value() > mu0.value())) {
        throw std::invalid_argument("tail_bound_check requires mu > mu0");
    }
    return tail_bound_check(f, weighted_norm(f, mu0), mu0, mu, n);
}

std::vector<RateBoundRecord> basis_convergence_suite(const TaylorSeries& f, double gamma,
                                                     std::span<const WeightExponent> mus,
                                                     std::span<const std::size_t> ns) {
    if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
    for (const auto mu : mus) {
        if (!(mu.value() > gamma)) {
            throw std::invalid_argument("basis_convergence_suite requires every mu > gamma");
        }
    }
    std::vector<RateBoundRecord> out;
    for (const auto mu : mus) {
        const WeightExponent mu0{0.5 * (gamma + mu.value())};
        const double base = weighted_norm(f, mu0);
        for (const auto n : ns) out.push_back(tail_bound_check(f, base, mu0, mu, n));
    }
    return out;
}

bool settles_nonincreasing(std::span<const RateBoundRecord> records, std::size_t settle,
                           double slack) {
    for (std::size_t i = settle + 1; i < records.size(); ++i) {
        if (records[i].measured > records[i - 1].measured * (1.0 + slack) + slack) return false;
    }
    return true;
}

namespace {

void check_nuclearity_args(double gamma, WeightExponent nu, WeightExponent mu) {
    if (!(gamma >= 0.0 && gamma < nu.value() && nu.value() < mu.value())) {
        throw std::invalid_argument("nuclearity series requires 0 <= gamma < nu < mu");
    }
    if (!(mu.value() - nu.value() < 1.0)) {
        throw std::invalid_argument("nuclearity series requires mu - nu < 1");
    }
}

}  // namespace

std::vector<double> nuclearity_partial_sums(double gamma, WeightExponent nu, WeightExponent mu,
                                            std::size_t terms) {
    check_nuclearity_args(gamma, nu, mu);
    std::vector<double> sums(terms);
    double acc = 0.0;
    for (std::size_t n = 1; n <= terms; ++n) {
        acc += monomial_norm(n, mu) / monomial_norm(n, nu);
        sums[n - 1] = acc;
    }
    return sums;
}

double nuclearity_divergence(double gamma, WeightExponent nu, WeightExponent mu, std::size_t terms) {
    check_nuclearity_args(gamma, nu, mu);
    if (terms == 0) return 0.0;
    return nuclearity_partial_sums(gamma, nu, mu, terms).back();
}

}  // namespace korenblum
