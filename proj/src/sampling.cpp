#include "bandlim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bandlim/errors.hpp"

namespace bandlim {

namespace {
constexpr double kPi = std::numbers::pi;
}

SamplingSet::SamplingSet(std::vector<double> points, std::optional<double> period)
    : points_(std::move(points)), period_(period) {
    if (points_.size() < 2)
        throw InvalidInput("sampling set needs at least two points");
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i] > points_[i - 1]))
            throw InvalidInput("sampling set must be strictly increasing");
    delta_ = 0.0;
    gamma_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const double g = points_[i] - points_[i - 1];
        delta_ = std::max(delta_, g);
        gamma_ = std::min(gamma_, g);
    }
    if (period_) {
        const double span = points_.back() - points_.front();
        if (!(*period_ > span))
            throw InvalidInput("sampling set: period must exceed the point span");
        const double wrap = *period_ - span;
        delta_ = std::max(delta_, wrap);
        gamma_ = std::min(gamma_, wrap);
    }
}

SamplingSet gen_uniform(double spacing, double a, double b) {
    if (!(spacing > 0.0))
        throw InvalidInput("gen_uniform: spacing must be positive");
    if (b - a < spacing)
        throw InvalidInput("gen_uniform: window shorter than spacing");
    std::vector<double> pts;
    for (double x = a; x <= b + 1e-12 * spacing; x += spacing)
        pts.push_back(x);
    return SamplingSet(std::move(pts));
}

SamplingSet gen_jittered(double spacing, double jitter_fraction, double min_separation,
                         std::uint64_t seed, double a, double b) {
    if (!(spacing > 0.0))
        throw InvalidInput("gen_jittered: spacing must be positive");
    if (jitter_fraction < 0.0 || jitter_fraction >= 0.5)
        throw InvalidInput("gen_jittered: jitter fraction must be in [0, 0.5)");
    if (b - a < spacing)
        throw InvalidInput("gen_jittered: window shorter than spacing");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-jitter_fraction, jitter_fraction);
    std::vector<double> pts;
    for (double x = a; x <= b + 1e-12 * spacing; x += spacing)
        pts.push_back(std::clamp(x + jitter(rng) * spacing, a, b));
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i] - pts[i - 1] < min_separation)
            pts[i] = pts[i - 1] + min_separation;
    return SamplingSet(std::move(pts));
}

SamplingSet gen_uniform_circle(double spacing, double a, double period) {
    if (!(spacing > 0.0) || !(period > spacing))
        throw InvalidInput("gen_uniform_circle: need 0 < spacing < period");
    const auto m = static_cast<std::size_t>(std::llround(period / spacing));
    const double s = period / static_cast<double>(m);
    std::vector<double> pts(m);
    for (std::size_t i = 0; i < m; ++i)
        pts[i] = a + s * static_cast<double>(i);
    return SamplingSet(std::move(pts), period);
}

SamplingSet gen_jittered_circle(double target_delta, double jitter_fraction,
                                std::uint64_t seed, double a, double period) {
    if (!(target_delta > 0.0) || !(period > target_delta))
        throw InvalidInput("gen_jittered_circle: need 0 < target_delta < period");
    if (jitter_fraction < 0.0 || jitter_fraction >= 0.5)
        throw InvalidInput("gen_jittered_circle: jitter fraction must be in [0, 0.5)");
    // base spacing shrunk so jittered gaps stay below the target
    const auto m = static_cast<std::size_t>(
        std::ceil(period * (1.0 + 2.0 * jitter_fraction) / target_delta));
    const double s = period / static_cast<double>(m);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-jitter_fraction, jitter_fraction);
    std::vector<double> pts(m);
    for (std::size_t i = 0; i < m; ++i)
        pts[i] = a + s * (static_cast<double>(i) + jitter(rng));
    std::sort(pts.begin(), pts.end());
    if (pts.front() < a)
        for (double& p : pts)
            p += a - pts.front();
    return SamplingSet(std::move(pts), period);
}

SamplingSet gen_lambda_n(int k, double sigma, int n_big, int truncation_range) {
    if (k < 1 || !(sigma > 0.0))
        throw InvalidInput("gen_lambda_n: need k >= 1 and sigma > 0");
    if (n_big < 1 || truncation_range <= n_big)
        throw InvalidInput("gen_lambda_n: need N >= 1 and truncation beyond N");
    std::vector<double> pts;
    for (int l = -truncation_range; l <= truncation_range; ++l) {
        double x;
        if (l == 0)
            x = 0.0;
        else if (std::abs(l) > n_big)
            x = k * kPi * l / sigma;
        else
            x = ((l > 0) ? 1.0 : -1.0) * (2 * std::abs(l) - 1) * k * kPi * (n_big + 1) /
                (sigma * (2 * n_big + 1));
        pts.push_back(x);
    }
    return SamplingSet(std::move(pts));
}

double max_gap_statistic(std::span<const double> points) {
    if (points.size() < 2)
        throw InvalidInput("max_gap_statistic: need at least two points");
    double gap = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i)
        gap = std::max(gap, points[i] - points[i - 1]);
    return gap;
}

DerivativeSamples::DerivativeSamples(SamplingSet pts, int k,
                                     std::vector<std::vector<double>> values)
    : points(std::move(pts)), order(k), data(std::move(values)) {
    if (order < 1)
        throw InvalidInput("derivative samples: order must be >= 1");
    if (data.size() != points.size())
        throw InvalidInput("derivative samples: row count must match point count");
    for (const auto& row : data)
        if (row.size() != static_cast<std::size_t>(order))
            throw InvalidInput("derivative samples: each row needs `order` columns");
}

DerivativeSamples sample_signal(const BandlimitedSignal& f, const SamplingSet& set, int k) {
    std::vector<std::vector<double>> data(set.size(), std::vector<double>(k));
    for (std::size_t i = 0; i < set.size(); ++i)
        for (int j = 0; j < k; ++j)
            data[i][j] = f.eval(set[i], j);
    return DerivativeSamples(set, k, std::move(data));
}

}  // namespace bandlim
