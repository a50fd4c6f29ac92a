#include "korenblum/kothe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace korenblum {

double weight_s(WeightExponent mu, std::size_t j) {
    if (j == 0) return 1.0;
    const double m = mu.value();
    return std::exp(-m * std::log1p(static_cast<double>(j) / m));
}

double weight_r(WeightExponent mu, std::size_t j) {
    if (j == 0) return 1.0;
    const auto block = static_cast<std::size_t>(std::bit_width(j) - 1);
    return weight_s(mu, std::size_t{1} << block);
}

double seminorm(std::span<const Complex> x, WeightExponent mu) {
    double out = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] != Complex{}) out = std::max(out, weight_r(mu, j) * std::abs(x[j]));
    }
    return out;
}

bool check_weight_monotone(WeightExponent mu1, WeightExponent mu2, std::size_t J) {
    if (!(mu2 < mu1)) {
        throw std::invalid_argument("check_weight_monotone requires mu2 < mu1");
    }
    constexpr double slack = 1e-15;
    for (std::size_t j = 0; j <= J; ++j) {
        if (weight_r(mu1, j) > weight_r(mu2, j) + slack) return false;
        if (weight_s(mu1, j) > weight_s(mu2, j) + slack) return false;
    }
    return true;
}

std::pair<double, double> equivalence_ratio(WeightExponent mu, std::size_t J) {
    if (J < 1) throw std::invalid_argument("equivalence_ratio requires J >= 1");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t j = 1; j <= J; ++j) {
        const double ratio = weight_r(mu, j) / weight_s(mu, j);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo, hi};
}

std::size_t KotheMatrixSpec::first_row() const {
    if (kind == KotheKind::Echelon) return 1;
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("co-echelon rows need gamma > 0");
    }
    return static_cast<std::size_t>(std::floor(1.0 / gamma)) + 1;
}

WeightExponent KotheMatrixSpec::row_exponent(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("Köthe rows are indexed from k = 1");
    if (!(gamma >= 0.0)) throw std::invalid_argument("Köthe matrix needs gamma >= 0");
    const double step = 1.0 / static_cast<double>(k);
    if (kind == KotheKind::Echelon) return WeightExponent{gamma + step};
    const double nu = gamma - step;
    if (!(nu > 0.0)) {
        throw std::invalid_argument("co-echelon row k = " + std::to_string(k) +
                                    " has nu_k <= 0; the first admissible row is k = " +
                                    std::to_string(first_row()) + " (k > 1/gamma)");
    }
    return WeightExponent{nu};
}

double kothe_row(const KotheMatrixSpec& spec, std::size_t k, std::size_t j) {
    return weight_s(spec.row_exponent(k), j);
}

}  // namespace korenblum
