#include "bandlim/constants.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "bandlim/errors.hpp"

namespace bandlim {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) {
    double v = 1.0;
    for (int i = 2; i <= n; ++i)
        v *= i;
    return v;
}

// j-th derivative at x of the trig columns with their Taylor part through
// degree 2r-3 removed and the leading mu power divided out. Same positive
// roots as plain cos/sin columns, but no degeneracy against the polynomial
// columns as mu -> 0.
double cos_column(int r, double mu, double x, int j) {
    double sum = 0.0;
    for (int m = r - 1; m < r - 1 + 80; ++m) {
        const int p = 2 * m;
        if (p - j < 0)
            continue;
        const double term = ((m % 2 == 0) ? 1.0 : -1.0) *
                            std::pow(mu, 2 * m - 2 * r + 2) *
                            std::pow(x, p - j) / factorial(p - j);
        sum += term;
        if (std::abs(term) < 1e-22 * (std::abs(sum) + 1e-300) && p > 2 * r + j + 8)
            break;
    }
    return sum;
}

double sin_column(int r, double mu, double x, int j) {
    double sum = 0.0;
    for (int m = r - 1; m < r - 1 + 80; ++m) {
        const int p = 2 * m + 1;
        if (p - j < 0)
            continue;
        const double term = ((m % 2 == 0) ? 1.0 : -1.0) *
                            std::pow(mu, 2 * m + 1 - (2 * r - 1)) *
                            std::pow(x, p - j) / factorial(p - j);
        sum += term;
        if (std::abs(term) < 1e-22 * (std::abs(sum) + 1e-300) && p > 2 * r + j + 8)
            break;
    }
    return sum;
}

Eigen::MatrixXd boundary_matrix(int r, double mu, bool regularized) {
    const int n = 2 * r;
    const int npoly = 2 * r - 2;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    int row = 0;
    for (double pt : {0.0, 1.0}) {
        for (int j = 0; j < r; ++j, ++row) {
            for (int c = 0; c < npoly; ++c)
                if (c >= j)
                    M(row, c) = factorial(c) / factorial(c - j) * std::pow(pt, c - j);
            if (regularized && mu < 40.0) {
                M(row, npoly) = cos_column(r, mu, pt, j);
                M(row, npoly + 1) = sin_column(r, mu, pt, j);
            } else {
                const double ph = mu * pt + j * kPi / 2.0;
                const double sc = regularized ? std::pow(mu, -(2 * r - 2)) : 1.0;
                const double ss = regularized ? std::pow(mu, -(2 * r - 1)) : 1.0;
                M(row, npoly) = std::pow(mu, j) * std::cos(ph) * sc;
                M(row, npoly + 1) = std::pow(mu, j) * std::sin(ph) * ss;
            }
        }
    }
    return M;
}

// determinant after column sup-norm normalization; raw determinants over- or
// underflow for r >= 3
double scaled_determinant(int r, double mu) {
    Eigen::MatrixXd M = boundary_matrix(r, mu, true);
    for (int c = 0; c < M.cols(); ++c) {
        const double s = M.col(c).cwiseAbs().maxCoeff();
        if (s > 0.0)
            M.col(c) /= s;
    }
    return M.determinant();
}

}  // namespace

CimminoResult cimmino_nu(int r, double tol) {
    if (r < 1)
        throw InvalidInput("cimmino_nu: r must be >= 1");
    const double scan_step = 0.01;
    const double scan_end = 4.0 * kPi * r;
    double prev_mu = 0.05;
    double prev = scaled_determinant(r, prev_mu);
    double root = -1.0;
    for (double mu = prev_mu + scan_step; mu <= scan_end; mu += scan_step) {
        const double cur = scaled_determinant(r, mu);
        if (prev == 0.0) {
            root = prev_mu;
            break;
        }
        if (prev * cur < 0.0) {
            double lo = prev_mu, hi = mu, flo = prev;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                const double fm = scaled_determinant(r, mid);
                if (flo * fm <= 0.0)
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            root = 0.5 * (lo + hi);
            break;
        }
        prev = cur;
        prev_mu = mu;
    }
    if (root < 0.0)
        throw BracketError("cimmino_nu: no sign change in [0.05, " +
                           std::to_string(scan_end) + "] for r=" + std::to_string(r));
    CimminoResult res;
    res.r = r;
    res.mu_root = root;
    res.nu = root;  // exponent 2r-2k = 2 at k = r-1, so nu_r = sqrt(lambda) = mu
    res.determinant_residual = std::abs(scaled_determinant(r, root));
    return res;
}

const CimminoResult& cimmino_nu_cached(int r) {
    static std::mutex mutex;
    static std::map<int, CimminoResult> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(r);
    if (it == cache.end())
        it = cache.emplace(r, cimmino_nu(r)).first;
    return it->second;
}

double schmidt_mu(int n) {
    if (n < 0)
        throw InvalidInput("schmidt_mu: n must be >= 0");
    const double nd = n;
    return nd * (nd + 1) * (nd + 2) * (nd + 3) / 2.0;
}

double c_of_k(int k) {
    if (k < 1)
        throw InvalidInput("c_of_k: k must be >= 1");
    double sum = 0.0;
    double binom = 1.0;  // binom(k-1, 0)
    for (int s = 0; s < k; ++s) {
        if (s > 0)
            binom = binom * (k + s - 1) / s;  // binom(k+s-1, s)
        sum += binom;
    }
    return sum * sum;
}

double weight_c(double x0, double x1, int l) {
    if (!(x1 > x0))
        throw InvalidInput("weight_c: abscissae must be increasing");
    if (l < 0)
        throw InvalidInput("weight_c: order must be nonnegative");
    const double gap = x1 - x0;
    const double lf = factorial(l);
    return std::pow(gap, 2 * l + 1) / ((2 * l + 1) * lf * lf);
}

FrameBounds frame_bounds(int k, double delta, double sigma, double gamma) {
    if (k < 1 || !(sigma > 0.0) || !(gamma > 0.0) || delta < gamma)
        throw InvalidInput("frame_bounds: need k>=1, sigma>0, 0<gamma<=delta");
    FrameBounds fb;
    fb.k = k;
    fb.delta = delta;
    fb.sigma = sigma;
    fb.gamma = gamma;
    const double nu = cimmino_nu_cached(k).nu;
    const double factor = delta * sigma / nu;
    if (factor >= 1.0) {
        fb.A = 0.0;
        fb.degenerate = true;
    } else {
        fb.A = (1.0 - factor) * (1.0 - factor) / (2.0 * k * c_of_k(k)) *
               std::pow(gamma, 2 * (k - 1)) / std::pow(schmidt_mu(2 * k - 1), k - 1);
    }
    double series = 0.0;
    for (int l = 0; l < k; ++l) {
        const double lf = factorial(l);
        series += std::pow(delta * sigma, 2 * l) / (lf * lf);
    }
    fb.B = 2.0 * series * std::exp(delta * delta + sigma * sigma);
    return fb;
}

double contraction_factor(int k, double delta, double sigma) {
    if (k < 1 || !(sigma > 0.0) || !(delta > 0.0))
        throw InvalidInput("contraction_factor: need k>=1, delta>0, sigma>0");
    return delta * sigma / cimmino_nu_cached(k).nu;
}

double cimmino_bc_residual(int r, double mu) {
    // null vector of the boundary matrix -> eigenfunction coefficients; check
    // every boundary condition by direct evaluation of the basis derivatives
    Eigen::MatrixXd M = boundary_matrix(r, mu, true);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    Eigen::VectorXd null_vec = svd.matrixV().col(2 * r - 1);
    const Eigen::VectorXd residual = M * null_vec;
    // scale: max row norm of M
    const double scale = M.cwiseAbs().rowwise().sum().maxCoeff();
    return residual.cwiseAbs().maxCoeff() / scale;
}

}  // namespace bandlim
