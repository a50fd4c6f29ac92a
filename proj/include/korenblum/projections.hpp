#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "korenblum/taylor_series.hpp"
#include "korenblum/types.hpp"

namespace korenblum {

/// Dirichlet kernel of order m >= 1.
class DirichletKernel {
public:
    explicit DirichletKernel(std::size_t order);

    std::size_t order() const noexcept { return m_; }

    /// sum_{j=-m}^{m} e^{i j phi} = sin((2m+1) phi / 2) / sin(phi / 2), with value 2m+1 at phi = 0 mod 2pi.
    double operator()(double phi) const noexcept;

    /// Lebesgue constant (2 pi)^{-1} int_0^{2 pi} |D_m(phi)| d phi.
    double l1_mean() const;

private:
    std::size_t m_;
};

double dirichlet_eval(std::size_t m, double phi);
double kernel_l1(std::size_t m);

/// Truncation P_n f to degrees 0..n (f itself when n >= deg f).
TaylorSeries partial_sum(const TaylorSeries& f, std::size_t n);

/// (id - P_n) f: the coefficients of degree > n, with the nominal degree of f kept.
TaylorSeries tail(const TaylorSeries& f, std::size_t n);

/// ||P_n f||_mu / ||f||_mu for each n. Rejects an empty list, n < 2 and ||f||_mu = 0.
std::vector<double> projection_growth(const TaylorSeries& f, WeightExponent mu,
                                      std::span<const std::size_t> ns);

/// One comparison of ||(id - P_n) f||_mu against (mu/(n+1))^{mu-mu0} (1 + log n) ||f||_mu0.
struct RateBoundRecord {
    std::size_t n = 0;
    double mu0 = 0.0;
    double mu = 0.0;
    double bound = 0.0;
    double measured = 0.0;
    double ratio = 0.0;
};

RateBoundRecord tail_bound_check(const TaylorSeries& f, WeightExponent mu0, WeightExponent mu,
                                 std::size_t n);

/// Variant reusing a precomputed ||f||_mu0 (must be > 0).
RateBoundRecord tail_bound_check(const TaylorSeries& f, double norm_mu0, WeightExponent mu0,
                                 WeightExponent mu, std::size_t n);

/**
 * tail_bound_check over every (mu, n) pair, each mu paired with mu0 = (gamma + mu) / 2.
 * Records are ordered by mu (outer) then n (inner), as given.
 */
std::vector<RateBoundRecord> basis_convergence_suite(const TaylorSeries& f, double gamma,
                                                     std::span<const WeightExponent> mus,
                                                     std::span<const std::size_t> ns);

/// True when the measured values are nonincreasing (up to slack) from index `settle` on.
bool settles_nonincreasing(std::span<const RateBoundRecord> records, std::size_t settle,
                           double slack = 1e-12);

/// sum_{n=1}^{N} ||z^n||_mu / ||z^n||_nu. Requires gamma < nu < mu and mu - nu < 1.
double nuclearity_divergence(double gamma, WeightExponent nu, WeightExponent mu, std::size_t terms);

/// All partial sums S_1..S_N of the same series (index k holds S_{k+1}).
std::vector<double> nuclearity_partial_sums(double gamma, WeightExponent nu, WeightExponent mu,
                                            std::size_t terms);

}  // namespace korenblum
