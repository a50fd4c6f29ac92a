#include "korenblum/taylor_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace korenblum {

TaylorSeries::TaylorSeries() : coeffs_{Complex{}} {}

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Complex{});
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (!std::isfinite(coeffs_[j].real()) || !std::isfinite(coeffs_[j].imag())) {
            throw std::invalid_argument("non-finite Taylor coefficient at index " +
                                        std::to_string(j));
        }
    }
}

TaylorSeries TaylorSeries::monomial(std::size_t degree, Complex coefficient) {
    std::vector<Complex> c(degree + 1);
    c[degree] = coefficient;
    return TaylorSeries(std::move(c));
}

bool TaylorSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

std::optional<std::size_t> TaylorSeries::lowest_degree() const noexcept {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] != Complex{}) return j;
    }
    return std::nullopt;
}

std::optional<std::size_t> TaylorSeries::highest_degree() const noexcept {
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        if (coeffs_[j] != Complex{}) return j;
    }
    return std::nullopt;
}

Complex TaylorSeries::operator()(Complex z) const noexcept {
    Complex acc{};
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * z + coeffs_[j];
    return acc;
}

TaylorSeries TaylorSeries::padded_to(std::size_t degree) const {
    if (degree <= this->degree()) return *this;
    std::vector<Complex> c(coeffs_);
    c.resize(degree + 1);
    return TaylorSeries(std::move(c));
}

TaylorSeries& TaylorSeries::operator+=(const TaylorSeries& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
    return *this;
}

TaylorSeries& TaylorSeries::operator-=(const TaylorSeries& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
    return *this;
}

TaylorSeries& TaylorSeries::operator*=(Complex scale) {
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

}  // namespace korenblum
