#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bandlim/signal.hpp"

namespace bandlim {

/// Sorted nonuniform sample points with cached gap statistics.
/// With a period set, the wrap gap (period - span) participates in delta and
/// gamma, i.e. the set is read as one period of a circle.
class SamplingSet {
public:
    explicit SamplingSet(std::vector<double> points,
                         std::optional<double> period = std::nullopt);

    std::span<const double> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }
    double front() const { return points_.front(); }
    double back() const { return points_.back(); }

    double delta() const { return delta_; }  ///< max adjacent gap
    double gamma() const { return gamma_; }  ///< min adjacent gap
    std::optional<double> period() const { return period_; }

private:
    std::vector<double> points_;
    std::optional<double> period_;
    double delta_ = 0.0;
    double gamma_ = 0.0;
};

SamplingSet gen_uniform(double spacing, double a, double b);

/// Uniform grid with i.i.d. jitter, re-sorted, separation enforced.
/// Deterministic for a fixed seed.
SamplingSet gen_jittered(double spacing, double jitter_fraction, double min_separation,
                         std::uint64_t seed, double a, double b);

/// m = round(period/spacing) equispaced points on [a, a+period), read as a circle.
SamplingSet gen_uniform_circle(double spacing, double a, double period);

/// Jittered circle set whose max gap (wrap included) stays <= target_delta.
SamplingSet gen_jittered_circle(double target_delta, double jitter_fraction,
                                std::uint64_t seed, double a, double period);

/// The near-critical sets Lambda_N:
///   lambda(l) = k pi l / sigma                              for |l| > N,
///   lambda(0) = 0,
///   lambda(l) = sgn(l)(2l-1) k pi (N+1) / (sigma (2N+1))    for 1 <= |l| <= N,
/// truncated to |l| <= truncation_range.
SamplingSet gen_lambda_n(int k, double sigma, int n_big, int truncation_range);

/// Max adjacent gap of a sorted point list.
double max_gap_statistic(std::span<const double> points);

/// Derivative data {f^(j)(x_i)}, j = 0..order-1, attached to a sampling set.
struct DerivativeSamples {
    SamplingSet points;
    int order = 1;                          ///< k: number of derivative levels
    std::vector<std::vector<double>> data;  ///< data[i][j] = f^(j)(x_i)

    DerivativeSamples(SamplingSet pts, int k, std::vector<std::vector<double>> values);
};

/// Evaluate a signal and its first k-1 derivatives on a sampling set.
DerivativeSamples sample_signal(const BandlimitedSignal& f, const SamplingSet& set, int k);

}  // namespace bandlim
