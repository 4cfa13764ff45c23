#pragma once

#include <span>
#include <vector>

#include "bandlim/grid.hpp"
#include "bandlim/sampling.hpp"

namespace bandlim {

/// Two-point Hermite interpolant on [xi, eta] matching f^(j) at both endpoints
/// for j = 0..r. Stored as monomial coefficients centered at the midpoint, so
/// derivatives of any order are a Horner pass over differentiated coefficients.
class HermiteSegment {
public:
    HermiteSegment(double xi, double eta, int r, std::vector<double> midpoint_coeffs);

    double xi() const { return xi_; }
    double eta() const { return eta_; }
    double mid() const { return mid_; }
    int r() const { return r_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// m-th derivative at x; orders above the degree return 0.
    double eval(double x, int m = 0) const;

private:
    double xi_, eta_, mid_;
    int r_;
    std::vector<double> coeffs_;
};

/// s-th derivative of (x - pole)^-(r+1) at x = base:
///   (-1)^s (r+1)(r+2)...(r+s) (base - pole)^-(r+1+s).
double g_factor_derivative(int r, int s, double base, double pole);

/// Assemble the segment from endpoint data via the A_0k/A_1k coefficient
/// functions; data arrays hold f^(j) for j = 0..r.
HermiteSegment build_segment(double xi, double eta, std::span<const double> left_data,
                             std::span<const double> right_data, int r);

struct PiecewiseOptions {
    double a = 0.0;
    double b = 0.0;
    std::size_t intervals = 0;
    /// Cover the window as one period: the wrap segment [x_last, x_first + T]
    /// closes the partition. Otherwise values outside [x_first, x_last] are 0.
    bool periodic = false;
};

/// m-th derivative of the piecewise Hermite interpolant of the samples,
/// rendered on the grid; intervals are half-open [x_i, x_{i+1}) with the last
/// one closed.
GridFunction piecewise_hermite_derivative(const DerivativeSamples& samples, int m,
                                          const PiecewiseOptions& options);

}  // namespace bandlim
