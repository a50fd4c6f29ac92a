#pragma once

#include <cstddef>
#include <span>

#include "korenblum/types.hpp"

// Unnormalized discrete Fourier transforms of arbitrary length.
//
//   out[k] = sum_j in[j] * exp(s * 2*pi*i * j*k / n),   s = -1 (Negative) or +1 (Positive)
//
// Power-of-two lengths use an iterative radix-2 kernel; other lengths go through
// Bluestein's chirp-z reduction to a power-of-two circular convolution.
namespace korenblum::fft {

enum class Sign { Negative, Positive };

bool is_power_of_two(std::size_t n) noexcept;
std::size_t next_power_of_two(std::size_t n) noexcept;

void transform(std::span<Complex> data, Sign sign);

}  // namespace korenblum::fft
