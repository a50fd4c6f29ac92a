#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace korenblum {

using Complex = std::complex<double>;

/// Exponent of the radial weight (1 - r)^mu. Always finite and strictly positive.
class WeightExponent {
public:
    explicit WeightExponent(double mu) : mu_(mu) {
        if (!std::isfinite(mu) || mu <= 0.0) {
            throw std::invalid_argument("weight exponent must be finite and > 0, got " +
                                        std::to_string(mu));
        }
    }

    double value() const noexcept { return mu_; }

    friend bool operator==(WeightExponent a, WeightExponent b) noexcept { return a.mu_ == b.mu_; }
    friend auto operator<=>(WeightExponent a, WeightExponent b) noexcept { return a.mu_ <=> b.mu_; }

private:
    double mu_;
};

}  // namespace korenblum
