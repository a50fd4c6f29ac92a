#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "korenblum/taylor_series.hpp"
#include "korenblum/types.hpp"

namespace korenblum {

/// Dyadic block f_n = sum_{j=2^n}^{2^{n+1}-1} a_j z^j, stored as its 2^n coefficients.
class BlockPolynomial {
public:
    BlockPolynomial(std::size_t level, std::vector<Complex> coeffs);

    std::size_t level() const noexcept { return level_; }
    std::size_t first_degree() const noexcept { return std::size_t{1} << level_; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;

    /// f_n as a Taylor series of nominal degree 2^{n+1} - 1.
    TaylorSeries series() const;
    /// f_n / z^{2^n}, a polynomial of degree < 2^n with the same modulus on the unit circle.
    TaylorSeries reduced() const;

private:
    std::size_t level_;
    std::vector<Complex> coeffs_;
};

struct BlockDecomposition {
    Complex constant{};
    std::vector<BlockPolynomial> blocks;  // levels 0..N

    std::size_t levels() const noexcept { return blocks.size(); }
};

/// Smallest N with 2^{N+1} - 1 >= degree.
std::size_t dyadic_level(std::size_t degree);

/// Splits f (zero-padded to degree 2^{N+1} - 1) into a_0 and blocks 0..N.
BlockDecomposition block_decompose(const TaylorSeries& f);
TaylorSeries reassemble(const BlockDecomposition& parts);

/// Values (Tf)(j), j = 0..2^{N+1}-1, laid out like Taylor indices.
struct SampleSequence {
    std::vector<Complex> x;
    std::size_t top_level = 0;  // N
};

/**
 * (Tf)(0) = a_0 and (Tf)(j) = f_n(e^{2 pi i j / 2^n}) for 2^n <= j < 2^{n+1}.
 *
 * Since e^{2 pi i j} = 1, block n is a length-2^n Fourier synthesis (exponent sign +) of its
 * coefficients, read at index j mod 2^n.
 */
SampleSequence forward_T(const TaylorSeries& f);

/// Exact inverse of forward_T. Requires len(x) = 2^{N+1}.
TaylorSeries inverse_T(std::span<const Complex> x);

/// Samples of one block at the 2^n-th roots of unity, in the order used by forward_T.
std::vector<Complex> block_samples(const BlockPolynomial& block);
BlockPolynomial block_from_samples(std::size_t level, std::span<const Complex> samples);

/// Trigonometric polynomial sum_k b_k e^{i k phi}, frequencies lowest_frequency .. + size - 1.
struct TrigPolynomial {
    long lowest_frequency = 0;
    std::vector<Complex> coeffs;

    Complex operator()(double phi) const;
    Complex mean_coefficient() const;
};

/**
 * (discrete mean over phi_j = 2 pi j / 2^n, j = 1..2^n; coefficient b_0).
 * Every frequency k in the representation must satisfy |k| < 2^n.
 */
std::pair<Complex, Complex> quadrature_identity(const TrigPolynomial& g, std::size_t level);

struct SamplingInequality {
    double max_sample = 0.0;
    double sup_modulus = 0.0;
    double ratio = 0.0;  // sup_modulus / max_sample
};

/// Compares the largest root-of-unity sample of a block with M_inf(f_n, 1). Level >= 1, nonzero block.
SamplingInequality sampling_inequality(const BlockPolynomial& block);

struct BlockNormBounds {
    double norm = 0.0;           // ||f_n||_mu
    double sup_unit = 0.0;       // M_inf(f_n, 1)
    double upper_33 = 0.0;       // M_inf(f_n, 1) (mu / (2^n + mu))^mu
    double radius = 0.0;         // r_{mu,n} = 1 - mu / (2^n + mu)
    double sup_at_radius = 0.0;  // M_inf(f_n, r_{mu,n})
    double factor_34 = 0.0;      // (1 + mu / 2^n)^{2^{n+1}}
};

BlockNormBounds block_norm_bounds(const BlockPolynomial& block, WeightExponent mu);

struct TechnicalConstants {
    double d2_hat = 0.0;  // max |||Tf|||_mu / ||f||_mu1
    double d1_hat = 0.0;  // min |||Tf|||_mu / ||f||_mu2
};

/// Requires 0 < mu1 < mu < mu2, a nonempty corpus and no zero functions.
TechnicalConstants technical_constants(std::span<const TaylorSeries> corpus, WeightExponent mu1,
                                       WeightExponent mu, WeightExponent mu2);

}  // namespace korenblum
