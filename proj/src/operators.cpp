#include "bandlim/operators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "bandlim/constants.hpp"
#include "bandlim/errors.hpp"
#include "bandlim/fft.hpp"

namespace bandlim {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) {
    double v = 1.0;
    for (int i = 2; i <= n; ++i)
        v *= i;
    return v;
}

void validate_config(const ReconstructionConfig& cfg, const DerivativeSamples& samples) {
    if (cfg.k < 1 || cfg.k != samples.order)
        throw InvalidInput("config k must match the sample order");
    if (!(cfg.sigma > 0.0))
        throw InvalidInput("config sigma must be positive");
    if (!(cfg.b > cfg.a) || cfg.grid_intervals < 2)
        throw InvalidInput("config window/grid invalid");
    if (samples.points.size() < 2)
        throw InvalidInput("reconstruction needs at least two sample points");
    if (samples.points.front() < cfg.a - 1e-12 || samples.points.back() > cfg.b + 1e-12)
        throw InvalidInput("grid window must cover all sample points");
    if (cfg.grid_step() > kPi / (4.0 * cfg.sigma) + 1e-15)
        throw ResolutionError("grid step exceeds pi/(4 sigma)");
}

}  // namespace

GridFunction project_bandlimited(const GridFunction& g, double sigma, bool zero_dc) {
    if (!(sigma > 0.0))
        throw InvalidInput("project: sigma must be positive");
    if (g.h() > kPi / (4.0 * sigma) + 1e-15)
        throw ResolutionError("project: grid step exceeds pi/(4 sigma)");
    const std::size_t n = g.intervals();  // periodic length; last value mirrors first
    auto spec = rfft(g.values().first(n));
    const double period = g.length();
    const double cutoff = sigma / (2.0 * kPi) * (1.0 + 1e-12);
    for (std::size_t j = 0; j < spec.size(); ++j) {
        const double freq = static_cast<double>(j) / period;
        if (freq > cutoff || (zero_dc && j == 0))
            spec[j] = 0.0;
    }
    auto vals = irfft(spec, n);
    vals.push_back(vals.front());
    return GridFunction(g.a(), g.b(), std::move(vals));
}

std::vector<double> resample_derivative(const GridFunction& g, std::span<const double> xs,
                                        int order) {
    const std::size_t n = g.intervals();
    const auto spec = rfft(g.values().first(n));
    const double period = g.length();
    const double center = 0.5 * (g.a() + g.b());
    const double scale = 1.0 / static_cast<double>(n);

    struct Bin {
        double freq;
        std::complex<double> coef;
        double weight;
    };
    std::vector<Bin> active;
    for (std::size_t j = 1; j < spec.size(); ++j) {
        if (std::norm(spec[j]) == 0.0)
            continue;
        const double freq = static_cast<double>(j) / period;
        const std::complex<double> iw(0.0, 2.0 * kPi * freq);
        std::complex<double> coef = spec[j] * scale;
        if (order >= 0)
            coef *= std::pow(iw, order);
        else
            coef /= std::pow(iw, -order);
        const bool nyquist = (n % 2 == 0) && (j == n / 2);
        active.push_back({freq, coef, nyquist ? 1.0 : 2.0});
    }
    const double dc = spec[0].real() * scale;

    std::vector<double> out(xs.size(), 0.0);
    for (std::size_t p = 0; p < xs.size(); ++p) {
        long double acc = 0.0L;
        for (const Bin& bin : active) {
            const double phase = 2.0 * kPi * bin.freq * (xs[p] - g.a());
            acc += bin.weight *
                   (bin.coef.real() * std::cos(phase) - bin.coef.imag() * std::sin(phase));
        }
        if (order == 0)
            acc += dc;
        else if (order < 0)
            acc += dc * std::pow(xs[p] - center, -order) / factorial(-order);
        out[p] = static_cast<double>(acc);
    }
    return out;
}

GridFunction approx_operator(const DerivativeSamples& samples,
                             const ReconstructionConfig& cfg) {
    validate_config(cfg, samples);
    PiecewiseOptions opts{cfg.a, cfg.b, cfg.grid_intervals, cfg.periodic_cover};
    GridFunction h = piecewise_hermite_derivative(samples, cfg.k - 1, opts);
    return project_bandlimited(h, cfg.sigma, cfg.k >= 2);
}

namespace {

// data rows of the residual f^(k-1) - g at every sample point: column j holds
// the (k-1-j)-th antiderivative of the estimate subtracted from the given data
std::vector<std::vector<double>> residual_data(const DerivativeSamples& samples,
                                               const GridFunction& estimate) {
    const int k = samples.order;
    const auto pts = samples.points.points();
    std::vector<std::vector<double>> rows(pts.size(), std::vector<double>(k));
    for (int j = 0; j < k; ++j) {
        const auto est = resample_derivative(estimate, pts, j - (k - 1));
        for (std::size_t i = 0; i < pts.size(); ++i)
            rows[i][j] = samples.data[i][j] - est[i];
    }
    return rows;
}

}  // namespace

std::pair<GridFunction, IterationTrace> iterate_reconstruct(
    const DerivativeSamples& samples, const ReconstructionConfig& cfg,
    const BandlimitedSignal* ground_truth) {
    validate_config(cfg, samples);
    IterationTrace trace;
    trace.factor = contraction_factor(cfg.k, samples.points.delta(), cfg.sigma);
    trace.contraction_guaranteed = trace.factor < 1.0;

    std::optional<GridFunction> truth;
    if (ground_truth != nullptr) {
        truth = ground_truth->render(cfg.a, cfg.b, cfg.grid_intervals, cfg.k - 1);
        trace.norm_ref = ground_truth->derivative_norm(cfg.k - 1);
    }

    GridFunction estimate = approx_operator(samples, cfg);
    if (!truth)
        trace.norm_ref = grid_norm(estimate);

    auto record = [&](int n, double residual) {
        IterationTrace::Row row;
        row.n = n;
        row.residual = residual;
        row.bound = std::pow(trace.factor, n + 1) * trace.norm_ref;
        if (truth) {
            row.error = grid_norm(estimate - *truth);
            row.has_error = true;
        }
        trace.rows.push_back(row);
    };
    record(0, grid_norm(estimate));

    int growth_streak = 0;
    double prev_residual = trace.rows.front().residual;
    for (int n = 1; n <= cfg.max_iterations; ++n) {
        DerivativeSamples res(samples.points, cfg.k, residual_data(samples, estimate));
        const GridFunction update = approx_operator(res, cfg);
        estimate += update;
        const double residual = grid_norm(update);
        record(n, residual);
        const double ref = std::max(grid_norm(estimate), 1e-300);
        if (residual / ref < cfg.tolerance)
            break;
        const bool grew = residual > prev_residual * (1.0 + 1e-6) &&
                          residual > 1e-13 * std::max(trace.norm_ref, 1e-300);
        growth_streak = grew ? growth_streak + 1 : 0;
        if (growth_streak >= 3)
            throw DivergenceError("iteration residual grew three consecutive times "
                                  "(factor " + std::to_string(trace.factor) + ")",
                                  trace);
        prev_residual = residual;
    }
    return {std::move(estimate), std::move(trace)};
}

GridFunction antiderivative_recover(const GridFunction& g, const DerivativeSamples& samples,
                                    int level, double sigma, AntiderivativeMethod method) {
    if (level < 1)
        throw InvalidInput("antiderivative_recover: level must be >= 1");
    if (samples.order < level)
        throw InvalidInput("antiderivative_recover: samples lack column level-1");

    // anchor: sample point nearest the window center
    const double center = 0.5 * (g.a() + g.b());
    const auto pts = samples.points.points();
    std::size_t anchor = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (std::abs(pts[i] - center) < std::abs(pts[anchor] - center))
            anchor = i;
    const double anchor_x = pts[anchor];
    const double anchor_value = samples.data[anchor][level - 1];

    GridFunction F = GridFunction::zeros(g.a(), g.b(), g.intervals());
    double f_at_anchor = 0.0;
    if (method == AntiderivativeMethod::spectral) {
        std::vector<double> abscissae(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            abscissae[i] = g.x(i);
        const auto vals = resample_derivative(g, abscissae, -1);
        for (std::size_t i = 0; i < g.size(); ++i)
            F[i] = vals[i];
        f_at_anchor = resample_derivative(g, std::vector<double>{anchor_x}, -1)[0];
    } else {
        // cumulative composite Simpson; odd offsets use the 5-8-(-1) end rule
        const double h = g.h();
        std::vector<double> I(g.size(), 0.0);
        for (std::size_t i = 2; i < g.size(); i += 2)
            I[i] = I[i - 2] + h / 3.0 * (g[i - 2] + 4.0 * g[i - 1] + g[i]);
        for (std::size_t i = 1; i < g.size(); i += 2) {
            if (i + 1 < g.size())
                I[i] = I[i - 1] + h / 12.0 * (5.0 * g[i - 1] + 8.0 * g[i] - g[i + 1]);
            else
                I[i] = I[i - 1] + h / 2.0 * (g[i - 1] + g[i]);
        }
        for (std::size_t i = 0; i < g.size(); ++i)
            F[i] = I[i];
        // cubic Lagrange read-off at the anchor
        const auto idx = static_cast<std::ptrdiff_t>((anchor_x - g.a()) / h);
        const std::ptrdiff_t lo = std::clamp<std::ptrdiff_t>(
            idx - 1, 0, static_cast<std::ptrdiff_t>(g.size()) - 4);
        f_at_anchor = 0.0;
        for (std::ptrdiff_t j = lo; j < lo + 4; ++j) {
            double w = 1.0;
            for (std::ptrdiff_t q = lo; q < lo + 4; ++q)
                if (q != j)
                    w *= (anchor_x - g.x(q)) / (g.x(j) - g.x(q));
            f_at_anchor += w * F[j];
        }
    }
    const double shift = anchor_value - f_at_anchor;
    for (std::size_t i = 0; i < F.size(); ++i)
        F[i] += shift;
    if (sigma > 0.0)
        F = project_bandlimited(F, sigma, false);
    return F;
}

std::pair<GridFunction, IterationTrace> full_recover(
    const DerivativeSamples& samples, const ReconstructionConfig& cfg,
    const BandlimitedSignal* ground_truth) {
    auto [estimate, trace] = iterate_reconstruct(samples, cfg, ground_truth);
    for (int level = cfg.k - 1; level >= 1; --level)
        estimate = antiderivative_recover(estimate, samples, level, cfg.sigma,
                                          cfg.antiderivative);
    return {std::move(estimate), std::move(trace)};
}

}  // namespace bandlim
