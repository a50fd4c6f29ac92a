#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "korenblum/types.hpp"

// Weight families on the Taylor index set and the Köthe matrices built from them.
//
// Both weights use the exponentiated form:
//   s_mu(j) = (mu / (j + mu))^mu,      r_mu(j) = (mu / (2^n + mu))^mu  for 2^n <= j < 2^{n+1},
// with s_mu(0) = r_mu(0) = 1. r_mu is constant on dyadic blocks and s_mu <= r_mu <= 2^mu s_mu.
namespace korenblum {

enum class WeightKind { R, S };

double weight_s(WeightExponent mu, std::size_t j);
double weight_r(WeightExponent mu, std::size_t j);

/// A weight family viewed as a function of j.
struct WeightFamily {
    WeightKind kind;
    WeightExponent mu;

    double operator()(std::size_t j) const {
        return kind == WeightKind::R ? weight_r(mu, j) : weight_s(mu, j);
    }
};

/// sup_j r_mu(j) |x_j| over the finite support.
double seminorm(std::span<const Complex> x, WeightExponent mu);

/// Exhaustive check of r_{mu1} <= r_{mu2} and s_{mu1} <= s_{mu2} on 0..J. Requires mu2 < mu1.
bool check_weight_monotone(WeightExponent mu1, WeightExponent mu2, std::size_t J);

/// (min, max) of r_mu(j) / s_mu(j) over 1 <= j <= J.
std::pair<double, double> equivalence_ratio(WeightExponent mu, std::size_t J);

enum class KotheKind { Echelon, CoEchelon };

/// Rows mu_k = gamma + 1/k (echelon) or nu_k = gamma - 1/k (co-echelon), row k weight s_{mu_k}.
struct KotheMatrixSpec {
    double gamma = 0.0;
    KotheKind kind = KotheKind::Echelon;

    /// Exponent of row k; throws when the co-echelon exponent would be <= 0.
    WeightExponent row_exponent(std::size_t k) const;
    /// Smallest admissible row index (1 for echelon, the first k > 1/gamma for co-echelon).
    std::size_t first_row() const;
};

double kothe_row(const KotheMatrixSpec& spec, std::size_t k, std::size_t j);

}  // namespace korenblum
