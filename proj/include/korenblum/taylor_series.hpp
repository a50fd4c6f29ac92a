#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "korenblum/types.hpp"

namespace korenblum {

/**
 * Finite Taylor expansion a_0 + a_1 z + ... + a_D z^D of an analytic function on the unit disc.
 *
 * The coefficient vector is kept exactly as given (trailing zeros are not stripped), so the
 * nominal degree D = coeffs.size() - 1 can carry layout information such as dyadic padding.
 * Numerical routines use lowest_degree()/highest_degree() for the nonzero support instead.
 */
class TaylorSeries {
public:
    /// The zero polynomial, stored as [0].
    TaylorSeries();

    /// Throws std::invalid_argument on NaN/Inf entries. An empty vector becomes [0].
    explicit TaylorSeries(std::vector<Complex> coeffs);

    static TaylorSeries monomial(std::size_t degree, Complex coefficient = 1.0);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^j; zero beyond the stored degree.
    Complex operator[](std::size_t j) const noexcept {
        return j < coeffs_.size() ? coeffs_[j] : Complex{};
    }

    bool is_zero() const noexcept;

    /// Smallest j with a_j != 0, empty for the zero polynomial.
    std::optional<std::size_t> lowest_degree() const noexcept;
    /// Largest j with a_j != 0, empty for the zero polynomial.
    std::optional<std::size_t> highest_degree() const noexcept;

    /// Horner evaluation.
    Complex operator()(Complex z) const noexcept;

    /// Copy zero-padded (or unchanged if already long enough) to the given nominal degree.
    TaylorSeries padded_to(std::size_t degree) const;

    TaylorSeries& operator+=(const TaylorSeries& other);
    TaylorSeries& operator-=(const TaylorSeries& other);
    TaylorSeries& operator*=(Complex scale);

    friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) { return a += b; }
    friend TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b) { return a -= b; }
    friend TaylorSeries operator*(Complex s, TaylorSeries a) { return a *= s; }

    friend bool operator==(const TaylorSeries&, const TaylorSeries&) = default;

private:
    std::vector<Complex> coeffs_;
};

}  // namespace korenblum
