#pragma once

#include <vector>

namespace bandlim {

struct CimminoResult {
    int r = 0;
    double nu = 0.0;                    ///< nu_r = mu_root (exponent 2 at k = r-1)
    double mu_root = 0.0;               ///< first positive root of the boundary determinant
    double determinant_residual = 0.0;  ///< |det| at the root, column-normalized scale
};

/// Smallest positive eigen-root of u^(2r) + lambda u^(2r-2) = 0 on [0,1] with
/// u^(j)(0) = u^(j)(1) = 0 for j = 0..r-1, returned as mu = sqrt(lambda).
/// Throws BracketError if the scan finds no sign change.
CimminoResult cimmino_nu(int r, double tol = 1e-12);

/// Memoized cimmino_nu at the default tolerance; safe under concurrent callers.
const CimminoResult& cimmino_nu_cached(int r);

/// Markov-type constant n(n+1)(n+2)(n+3)/2 for degree-n polynomials.
double schmidt_mu(int n);

/// [sum_{s=0}^{k-1} binom(k+s-1, s)]^2, exact.
double c_of_k(int k);

/// (x1 - x0)^(2l+1) / ((2l+1) (l!)^2).
double weight_c(double x0, double x1, int l);

struct FrameBounds {
    double A = 0.0;
    double B = 0.0;
    int k = 0;
    double delta = 0.0;
    double sigma = 0.0;
    double gamma = 0.0;
    bool degenerate = false;  ///< delta*sigma >= nu_k, so A collapsed to 0
};

/// Stable-sampling bounds of order (k-1, k-1):
///   A = (1 - delta sigma / nu_k)^2 gamma^(2(k-1)) / (2 k C(k) mu_{2k-1}^(k-1)),
///   B = 2 (sum_{l<k} (delta sigma)^(2l) / l!^2) e^(delta^2 + sigma^2).
FrameBounds frame_bounds(int k, double delta, double sigma, double gamma);

/// delta * sigma / nu_k.
double contraction_factor(int k, double delta, double sigma);

/// Max boundary-condition residual of the eigenfunction reconstructed from the
/// null vector at mu (diagnostic for the determinant root).
double cimmino_bc_residual(int r, double mu);

}  // namespace bandlim
