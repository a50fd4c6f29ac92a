#include "korenblum/fft.hpp"

#include <bit>
#include <numbers>
#include <unordered_map>
#include <utility>
#include <vector>

namespace korenblum::fft {
namespace {

// Stage tables for a length-n radix-2 transform: for each stage length len = 2, 4, ..., n the
// entries exp(+2*pi*i*k/len), k < len/2, stored contiguously at offset len/2 - 1. Every entry
// comes from a direct sin/cos call so it carries only its own rounding error.
const std::vector<Complex>& stage_twiddles(std::size_t n) {
    thread_local std::unordered_map<std::size_t, std::vector<Complex>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Complex> w(n > 1 ? n - 1 : 0);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        for (std::size_t k = 0; k < len / 2; ++k) {
            const double angle =
                2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(len);
            w[len / 2 - 1 + k] = {std::cos(angle), std::sin(angle)};
        }
    }
    return cache.emplace(n, std::move(w)).first->second;
}

void radix2(std::span<Complex> a, Sign sign) {
    const std::size_t n = a.size();
    if (n < 2) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto& w = stage_twiddles(n);
    const double s = sign == Sign::Positive ? 1.0 : -1.0;
    double* d = reinterpret_cast<double*>(a.data());
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const Complex* tw = w.data() + half - 1;
        for (std::size_t start = 0; start < n; start += len) {
            double* lo = d + 2 * start;
            double* hi = d + 2 * (start + half);
            for (std::size_t k = 0; k < half; ++k) {
                const double wr = tw[k].real();
                const double wi = s * tw[k].imag();
                const double vr = hi[2 * k] * wr - hi[2 * k + 1] * wi;
                const double vi = hi[2 * k] * wi + hi[2 * k + 1] * wr;
                const double ur = lo[2 * k];
                const double ui = lo[2 * k + 1];
                lo[2 * k] = ur + vr;
                lo[2 * k + 1] = ui + vi;
                hi[2 * k] = ur - vr;
                hi[2 * k + 1] = ui - vi;
            }
        }
    }
}

void bluestein(std::span<Complex> a, Sign sign) {
    const std::size_t n = a.size();
    const std::size_t m = next_power_of_two(2 * n - 1);
    const double s = sign == Sign::Positive ? 1.0 : -1.0;

    // chirp[t] = exp(s*pi*i*t^2/n); t^2 is reduced mod 2n to keep the angle small and exact.
    std::vector<Complex> chirp(n);
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t q = t * t % (2 * n);
        const double angle = s * std::numbers::pi * static_cast<double>(q) / static_cast<double>(n);
        chirp[t] = {std::cos(angle), std::sin(angle)};
    }

    std::vector<Complex> x(m), y(m);
    for (std::size_t j = 0; j < n; ++j) x[j] = a[j] * chirp[j];
    y[0] = std::conj(chirp[0]);
    for (std::size_t t = 1; t < n; ++t) y[t] = y[m - t] = std::conj(chirp[t]);

    radix2(x, Sign::Negative);
    radix2(y, Sign::Negative);
    for (std::size_t k = 0; k < m; ++k) x[k] *= y[k];
    radix2(x, Sign::Positive);

    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = chirp[k] * x[k] * inv_m;
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

std::size_t next_power_of_two(std::size_t n) noexcept { return n <= 1 ? 1 : std::bit_ceil(n); }

void transform(std::span<Complex> data, Sign sign) {
    if (data.size() < 2) return;
    if (is_power_of_two(data.size())) {
        radix2(data, sign);
    } else {
        bluestein(data, sign);
    }
}

}  // namespace korenblum::fft
