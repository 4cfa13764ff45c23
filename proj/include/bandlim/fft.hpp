#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bandlim {

/// Forward real-to-complex DFT; returns n/2+1 unnormalized bins.
std::vector<std::complex<double>> rfft(std::span<const double> x);

/// Inverse of rfft; divides by n so irfft(rfft(x), n) == x.
std::vector<double> irfft(std::span<const std::complex<double>> spectrum, std::size_t n);

}  // namespace bandlim
