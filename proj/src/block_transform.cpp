#include "korenblum/block_transform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "korenblum/analytic.hpp"
#include "korenblum/fft.hpp"
#include "korenblum/kothe.hpp"

namespace korenblum {

BlockPolynomial::BlockPolynomial(std::size_t level, std::vector<Complex> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != (std::size_t{1} << level_)) {
        throw std::invalid_argument("block of level " + std::to_string(level_) + " needs " +
                                    std::to_string(std::size_t{1} << level_) + " coefficients, got " +
                                    std::to_string(coeffs_.size()));
    }
}

bool BlockPolynomial::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

TaylorSeries BlockPolynomial::series() const {
    std::vector<Complex> c(2 * first_degree());
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<std::ptrdiff_t>(first_degree()));
    return TaylorSeries(std::move(c));
}

TaylorSeries BlockPolynomial::reduced() const { return TaylorSeries(coeffs_); }

std::size_t dyadic_level(std::size_t degree) {
    std::size_t level = 0;
    while ((std::size_t{2} << level) - 1 < degree) ++level;
    return level;
}

BlockDecomposition block_decompose(const TaylorSeries& f) {
    const std::size_t top = dyadic_level(f.degree());
    BlockDecomposition out;
    out.constant = f[0];
    out.blocks.reserve(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        const std::size_t start = std::size_t{1} << n;
        std::vector<Complex> c(start);
        for (std::size_t m = 0; m < start; ++m) c[m] = f[start + m];
        out.blocks.emplace_back(n, std::move(c));
    }
    return out;
}

TaylorSeries reassemble(const BlockDecomposition& parts) {
    std::vector<Complex> c(std::size_t{1} << parts.levels(), Complex{});
    c[0] = parts.constant;
    for (const auto& block : parts.blocks) {
        std::copy(block.coeffs().begin(), block.coeffs().end(),
                  c.begin() + static_cast<std::ptrdiff_t>(block.first_degree()));
    }
    return TaylorSeries(std::move(c));
}

std::vector<Complex> block_samples(const BlockPolynomial& block) {
    std::vector<Complex> out(block.coeffs().begin(), block.coeffs().end());
    fft::transform(out, fft::Sign::Positive);
    return out;
}

BlockPolynomial block_from_samples(std::size_t level, std::span<const Complex> samples) {
    std::vector<Complex> c(samples.begin(), samples.end());
    if (c.size() != (std::size_t{1} << level)) {
        throw std::invalid_argument("block samples of level " + std::to_string(level) +
                                    " must have length 2^level");
    }
    fft::transform(c, fft::Sign::Negative);
    const double scale = 1.0 / static_cast<double>(c.size());
    for (auto& v : c) v *= scale;
    return BlockPolynomial(level, std::move(c));
}

SampleSequence forward_T(const TaylorSeries& f) {
    const auto parts = block_decompose(f);
    SampleSequence out;
    out.top_level = parts.levels() - 1;
    out.x.assign(std::size_t{1} << parts.levels(), Complex{});
    out.x[0] = parts.constant;
    for (const auto& block : parts.blocks) {
        const auto samples = block_samples(block);
        std::copy(samples.begin(), samples.end(),
                  out.x.begin() + static_cast<std::ptrdiff_t>(block.first_degree()));
    }
    return out;
}

TaylorSeries inverse_T(std::span<const Complex> x) {
    if (x.size() < 2 || !std::has_single_bit(x.size())) {
        throw std::invalid_argument("inverse_T needs a sequence of length 2^{N+1}, got " +
                                    std::to_string(x.size()));
    }
    BlockDecomposition parts;
    parts.constant = x[0];
    const auto levels = static_cast<std::size_t>(std::countr_zero(x.size()));
    for (std::size_t n = 0; n < levels; ++n) {
        const std::size_t start = std::size_t{1} << n;
        parts.blocks.push_back(block_from_samples(n, x.subspan(start, start)));
    }
    return reassemble(parts);
}

Complex TrigPolynomial::operator()(double phi) const {
    Complex acc{};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const double k = static_cast<double>(lowest_frequency + static_cast<long>(i));
        acc += coeffs[i] * std::polar(1.0, k * phi);
    }
    return acc;
}

Complex TrigPolynomial::mean_coefficient() const {
    if (lowest_frequency > 0) return {};
    const auto idx = static_cast<std::size_t>(-lowest_frequency);
    return idx < coeffs.size() ? coeffs[idx] : Complex{};
}

std::pair<Complex, Complex> quadrature_identity(const TrigPolynomial& g, std::size_t level) {
    const long nodes = 1L << level;
    if (!g.coeffs.empty()) {
        const long lo = g.lowest_frequency;
        const long hi = lo + static_cast<long>(g.coeffs.size()) - 1;
        if (std::max(std::abs(lo), std::abs(hi)) >= nodes) {
            throw std::invalid_argument("quadrature_identity: frequencies must satisfy |k| < 2^n = " +
                                        std::to_string(nodes));
        }
    }
    Complex sum{};
    for (long j = 1; j <= nodes; ++j) {
        sum += g(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes));
    }
    return {sum / static_cast<double>(nodes), g.mean_coefficient()};
}

SamplingInequality sampling_inequality(const BlockPolynomial& block) {
    if (block.level() < 1) throw std::invalid_argument("sampling_inequality needs level >= 1");
    if (block.is_zero()) throw std::invalid_argument("sampling_inequality: zero block");
    SamplingInequality out;
    for (const auto& v : block_samples(block)) out.max_sample = std::max(out.max_sample, std::abs(v));
    out.sup_modulus = sup_modulus(block.reduced(), 1.0, 16);
    out.ratio = out.sup_modulus / out.max_sample;
    return out;
}

BlockNormBounds block_norm_bounds(const BlockPolynomial& block, WeightExponent mu) {
    BlockNormBounds out;
    const double start = static_cast<double>(block.first_degree());
    const double m = mu.value();
    out.radius = start / (start + m);
    out.factor_34 = std::exp(2.0 * start * std::log1p(m / start));
    if (block.is_zero()) return out;
    const TaylorSeries f = block.series();
    out.norm = weighted_norm(f, mu);
    out.sup_unit = sup_modulus(block.reduced(), 1.0);
    out.upper_33 = out.sup_unit * weight_s(mu, block.first_degree());
    out.sup_at_radius = sup_modulus(f, out.radius);
    return out;
}

TechnicalConstants technical_constants(std::span<const TaylorSeries> corpus, WeightExponent mu1,
                                       WeightExponent mu, WeightExponent mu2) {
    if (!(mu1 < mu && mu < mu2)) {
        throw std::invalid_argument("technical_constants requires mu1 < mu < mu2");
    }
    if (corpus.empty()) throw std::invalid_argument("technical_constants: empty corpus");
    TechnicalConstants out;
    out.d1_hat = std::numeric_limits<double>::infinity();
    for (const auto& f : corpus) {
        if (f.is_zero()) throw std::invalid_argument("technical_constants: zero function in corpus");
        const double image = seminorm(forward_T(f).x, mu);
        out.d2_hat = std::max(out.d2_hat, image / weighted_norm(f, mu1));
        out.d1_hat = std::min(out.d1_hat, image / weighted_norm(f, mu2));
    }
    return out;
}

}  // namespace korenblum
