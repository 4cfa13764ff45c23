#include "bandlim/hermite.hpp"

#include <algorithm>
#include <cmath>

#include "bandlim/errors.hpp"

namespace bandlim {

namespace {

using Poly = std::vector<double>;  // ascending monomial coefficients

Poly poly_mul(const Poly& p, const Poly& q) {
    Poly out(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            out[i + j] += p[i] * q[j];
    return out;
}

// (u - root)^p
Poly poly_pow_linear(double root, int p) {
    Poly out{1.0};
    const Poly base{-root, 1.0};
    for (int i = 0; i < p; ++i)
        out = poly_mul(out, base);
    return out;
}

// sum_s c_s (u - center)^s expanded in u
Poly poly_recenter(const Poly& c, double center) {
    Poly out(c.size(), 0.0);
    for (std::size_t s = 0; s < c.size(); ++s) {
        const Poly term = poly_pow_linear(center, static_cast<int>(s));
        for (std::size_t i = 0; i <= s; ++i)
            out[i] += c[s] * term[i];
    }
    return out;
}

double factorial(int n) {
    double v = 1.0;
    for (int i = 2; i <= n; ++i)
        v *= i;
    return v;
}

}  // namespace

HermiteSegment::HermiteSegment(double xi, double eta, int r, std::vector<double> coeffs)
    : xi_(xi), eta_(eta), mid_(0.5 * (xi + eta)), r_(r), coeffs_(std::move(coeffs)) {}

double HermiteSegment::eval(double x, int m) const {
    if (m < 0)
        throw InvalidInput("segment eval: derivative order must be nonnegative");
    if (static_cast<std::size_t>(m) >= coeffs_.size())
        return 0.0;
    // differentiate the monomial coefficients m times, then Horner
    const std::size_t n = coeffs_.size() - m;
    const double u = x - mid_;
    double v = 0.0;
    for (std::size_t idx = n; idx-- > 0;) {
        double c = coeffs_[idx + m];
        for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
            c *= static_cast<double>(idx + m - i);
        v = v * u + c;
    }
    return v;
}

double g_factor_derivative(int r, int s, double base, double pole) {
    if (r < 0 || s < 0)
        throw InvalidInput("g_factor_derivative: orders must be nonnegative");
    if (base == pole)
        throw InvalidInput("g_factor_derivative: base coincides with the pole");
    double rising = 1.0;
    for (int i = 1; i <= s; ++i)
        rising *= (r + i);
    const double sign = (s % 2 == 0) ? 1.0 : -1.0;
    return sign * rising * std::pow(base - pole, -(r + 1 + s));
}

HermiteSegment build_segment(double xi, double eta, std::span<const double> left_data,
                             std::span<const double> right_data, int r) {
    if (!(eta > xi))
        throw InvalidInput("build_segment: endpoints must satisfy xi < eta");
    if (eta - xi < 1e-10)
        throw InvalidInput("build_segment: segment too short for stable weights");
    if (left_data.size() != static_cast<std::size_t>(r + 1) ||
        right_data.size() != static_cast<std::size_t>(r + 1))
        throw InvalidInput("build_segment: data arrays must have length r+1");

    const double mid = 0.5 * (xi + eta);
    const double au = xi - mid;
    const double bu = eta - mid;
    Poly H(2 * r + 2, 0.0);
    for (int k = 0; k <= r; ++k) {
        // A_0k = (x-eta)^(r+1) (x-xi)^k / k! * sum_s g0^(s)(xi)/s! (x-xi)^s
        Poly s0(r - k + 1), s1(r - k + 1);
        for (int s = 0; s <= r - k; ++s) {
            s0[s] = g_factor_derivative(r, s, xi, eta) / factorial(s);
            s1[s] = g_factor_derivative(r, s, eta, xi) / factorial(s);
        }
        const Poly A0 = poly_mul(poly_pow_linear(bu, r + 1),
                                 poly_mul(poly_pow_linear(au, k), poly_recenter(s0, au)));
        const Poly A1 = poly_mul(poly_pow_linear(au, r + 1),
                                 poly_mul(poly_pow_linear(bu, k), poly_recenter(s1, bu)));
        const double kf = factorial(k);
        for (std::size_t i = 0; i < A0.size() && i < H.size(); ++i)
            H[i] += A0[i] / kf * left_data[k];
        for (std::size_t i = 0; i < A1.size() && i < H.size(); ++i)
            H[i] += A1[i] / kf * right_data[k];
    }
    return HermiteSegment(xi, eta, r, std::move(H));
}

GridFunction piecewise_hermite_derivative(const DerivativeSamples& samples, int m,
                                          const PiecewiseOptions& options) {
    if (samples.points.size() < 2)
        throw InvalidInput("piecewise hermite: need at least two sample points");
    const int r = samples.order - 1;
    if (m < 0 || m > 2 * r + 1)
        throw InvalidInput("piecewise hermite: derivative order outside [0, 2r+1]");
    GridFunction out = GridFunction::zeros(options.a, options.b, options.intervals);
    const auto pts = samples.points.points();
    const double period = options.b - options.a;
    if (options.periodic && pts.back() - pts.front() >= period)
        throw InvalidInput("piecewise hermite: points span exceeds the period");

    // march over grid points; locate each in its half-open segment
    std::size_t seg = 0;
    HermiteSegment current = build_segment(pts[0], pts[1], samples.data[0],
                                           samples.data[1], r);
    bool have_wrap = false;
    HermiteSegment wrap = current;
    if (options.periodic) {
        wrap = build_segment(pts.back(), pts.front() + period, samples.data.back(),
                             samples.data.front(), r);
        have_wrap = true;
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double x = out.x(i);
        if (x < pts.front()) {
            // before the first point: wrap segment shifted one period left
            out[i] = have_wrap ? wrap.eval(x + period, m) : 0.0;
            continue;
        }
        if (x >= pts.back()) {
            if (have_wrap) {
                out[i] = wrap.eval(x, m);
            } else {
                // last interval is closed at x_last; beyond it the sum is empty
                out[i] = (x == pts.back()) ? current.eval(x, m) : 0.0;
            }
            continue;
        }
        while (seg + 2 < pts.size() && x >= pts[seg + 1]) {
            ++seg;
            current = build_segment(pts[seg], pts[seg + 1], samples.data[seg],
                                    samples.data[seg + 1], r);
        }
        out[i] = current.eval(x, m);
    }
    return out;
}

}  // namespace bandlim
