#pragma once

#include <cstdint>
#include <vector>

#include "bandlim/grid.hpp"

namespace bandlim {

inline constexpr int kDefaultMaxKernelOrder = 12;

/// Derivatives of the sinc kernel K_sigma(t) = sin(sigma t)/(sigma t).
///
/// Evaluation switches between a truncated power series near the origin and
/// the closed form obtained by differentiating sin(t)/t via the product rule.
/// The switch radius grows with the order so that the closed form never loses
/// more than ~1.5 digits to cancellation; both branches accumulate in long
/// double, which keeps the seam mismatch below 1e-12 relative.
class KernelDerivativeTable {
public:
    explicit KernelDerivativeTable(double sigma, int max_order = kDefaultMaxKernelOrder);

    double sigma() const { return sigma_; }
    int max_order() const { return max_order_; }

    /// K_sigma^(l)(t)
    double operator()(int l, double t) const;

    /// |u| below this evaluates the series branch (u = sigma*t).
    static double switch_radius(int l);
    static double series_branch(int l, double u);
    static double closed_branch(int l, double u);

private:
    double sigma_;
    int max_order_;
};

/// K_sigma^(l)(t) with the default order cap.
double kernel_derivative(double sigma, int l, double t);

/// Finite sinc series at Nyquist nodes t_n = n pi / sigma:
///   f(x) = sum_n c_n K_sigma(x - t_n),  n = n_min .. n_min + coeffs.size() - 1.
/// An exact element of the Paley-Wiener space of type sigma, with closed-form
/// derivatives and norms.
class BandlimitedSignal {
public:
    BandlimitedSignal(double sigma, int n_min, std::vector<double> coeffs);

    double sigma() const { return sigma_; }
    int n_min() const { return n_min_; }
    int n_max() const { return n_min_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double node(std::size_t i) const;
    double node_min() const { return node(0); }
    double node_max() const { return node(coeffs_.size() - 1); }

    /// f^(l)(x); l = 0 is the function itself.
    double eval(double x, int l = 0) const;

    /// sqrt((pi/sigma) * sum c_n^2): the L2(R) norm via node orthogonality.
    double l2_norm() const;

    /// Exact ||f^(q)||_{L2(R)} from the band-side autocorrelation integrals.
    double derivative_norm(int q) const;

    /// Samples of f^(l) on a uniform grid.
    GridFunction render(double a, double b, std::size_t intervals, int l = 0) const;

    /// Upper bound on the mass of f^2 beyond distance `dist` from the
    /// outermost nodes (both sides combined); crude 1/x envelope bound.
    double tail_mass_bound(double dist) const;

private:
    double sigma_;
    int n_min_;
    std::vector<double> coeffs_;
};

struct BernsteinOptions {
    double window_margin = 60.0;   ///< window extends this far beyond the outermost nodes
    double tail_tolerance = 0.05;  ///< max certified tail mass relative to ||f||^2
    double oversampling = 8.0;     ///< grid step h = pi / (oversampling * sigma)
};

/// ||f^(k)||_2 / (sigma^k ||f||_2).
///
/// The numerator is a windowed trapezoid sum of the analytically evaluated
/// derivative (alias-free at the default oversampling, hence never above the
/// full-line integral); the denominator is the exact Parseval norm, so the
/// returned ratio cannot exceed the true one. Throws WindowError when the
/// certified tail estimate exceeds options.tail_tolerance.
double bernstein_ratio(const BandlimitedSignal& f, int k, const BernsteinOptions& options = {});

}  // namespace bandlim
