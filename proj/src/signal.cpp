#include "bandlim/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bandlim/errors.hpp"

namespace bandlim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long double kPiL = std::numbers::pi_v<long double>;

long double factorial_ld(int n) {
    long double v = 1.0L;
    for (int i = 2; i <= n; ++i)
        v *= i;
    return v;
}

}  // namespace

KernelDerivativeTable::KernelDerivativeTable(double sigma, int max_order)
    : sigma_(sigma), max_order_(max_order) {
    if (!(sigma > 0.0))
        throw InvalidInput("kernel table: sigma must be positive");
    if (max_order < 0)
        throw InvalidInput("kernel table: max order must be nonnegative");
}

double KernelDerivativeTable::switch_radius(int l) {
    // closed form loses ~log10(l! u^-(l+1)) digits; cap the ratio at ~30
    double r = std::pow(static_cast<double>(factorial_ld(l)) * 0.03, 1.0 / (l + 1));
    return std::max(0.5, r);
}

double KernelDerivativeTable::series_branch(int l, double u) {
    // sinc^(l)(u) = sum_{m >= ceil(l/2)} (-1)^m (2m)! / ((2m-l)! (2m+1)!) u^(2m-l)
    const long double ul = u;
    const int m0 = (l + 1) / 2;
    long double sum = 0.0L;
    // first term's coefficient, then update multiplicatively
    long double coeff = 1.0L;
    for (int i = 2 * m0 - l + 1; i <= 2 * m0; ++i)
        coeff *= i;  // (2m0)! / (2m0-l)!
    coeff /= factorial_ld(2 * m0 + 1);
    long double upow = 1.0L;
    for (int i = 0; i < 2 * m0 - l; ++i)
        upow *= ul;
    long double sign = (m0 % 2 == 0) ? 1.0L : -1.0L;
    long double term = sign * coeff * upow;
    const long double u2 = ul * ul;
    for (int m = m0; m < m0 + 64; ++m) {
        sum += term;
        const long double p = 2 * m;
        // t_{m+1}/t_m = -u^2 (2m+1) / ((2m+2-l)(2m+1-l)(2m+3))
        term *= -u2 * (p + 1) / ((p + 2 - l) * (p + 1 - l) * (p + 3));
        if (std::abs(static_cast<double>(term)) <
            1e-25 * (std::abs(static_cast<double>(sum)) + 1e-300))
            break;
    }
    return static_cast<double>(sum);
}

double KernelDerivativeTable::closed_branch(int l, double u) {
    // d^l/du^l [sin(u) u^-1]
    //   = sum_j C(l,j) sin(u + j pi/2) (-1)^(l-j) (l-j)! u^-(l-j+1)
    const long double ul = u;
    long double sum = 0.0L;
    long double binom = 1.0L;
    for (int j = 0; j <= l; ++j) {
        const int q = l - j;
        long double shifted;
        switch (j % 4) {
            case 0: shifted = std::sin(ul); break;
            case 1: shifted = std::cos(ul); break;
            case 2: shifted = -std::sin(ul); break;
            default: shifted = -std::cos(ul); break;
        }
        long double upow = 1.0L;
        for (int i = 0; i < q + 1; ++i)
            upow *= ul;
        const long double sign = (q % 2 == 0) ? 1.0L : -1.0L;
        sum += binom * sign * factorial_ld(q) * shifted / upow;
        binom = binom * (l - j) / (j + 1);
    }
    return static_cast<double>(sum);
}

double KernelDerivativeTable::operator()(int l, double t) const {
    if (l < 0)
        throw InvalidInput("kernel derivative: order must be nonnegative");
    if (l > max_order_)
        throw UnsupportedOrder("kernel derivative: order " + std::to_string(l) +
                               " above configured maximum " + std::to_string(max_order_));
    const double u = sigma_ * t;
    const double s = (std::abs(u) < switch_radius(l)) ? series_branch(l, u)
                                                      : closed_branch(l, u);
    return std::pow(sigma_, l) * s;
}

double kernel_derivative(double sigma, int l, double t) {
    return KernelDerivativeTable(sigma)(l, t);
}

BandlimitedSignal::BandlimitedSignal(double sigma, int n_min, std::vector<double> coeffs)
    : sigma_(sigma), n_min_(n_min), coeffs_(std::move(coeffs)) {
    if (!(sigma_ > 0.0))
        throw InvalidInput("signal: sigma must be positive");
    if (coeffs_.empty())
        throw InvalidInput("signal: coefficient list must be nonempty");
    for (double c : coeffs_)
        if (!std::isfinite(c))
            throw InvalidInput("signal: coefficients must be finite");
}

double BandlimitedSignal::node(std::size_t i) const {
    return (n_min_ + static_cast<int>(i)) * kPi / sigma_;
}

double BandlimitedSignal::eval(double x, int l) const {
    const KernelDerivativeTable table(sigma_);
    long double sum = 0.0L;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        sum += static_cast<long double>(coeffs_[i]) * table(l, x - node(i));
    return static_cast<double>(sum);
}

double BandlimitedSignal::l2_norm() const {
    long double s = 0.0L;
    for (double c : coeffs_)
        s += static_cast<long double>(c) * c;
    return std::sqrt(static_cast<double>(kPiL / sigma_ * s));
}

namespace {

// I_q(m) = int_{-pi}^{pi} (th/pi)^(2q) cos(m th) dth, by the parts recurrence
// C_p = -(p/m) S_{p-1},  S_p = -pi^p (-1)^m / m + (p/m) C_{p-1}.
long double band_moment(int q, int m) {
    if (m == 0)
        return 2.0L * kPiL / (2 * q + 1);
    const long double ml = m;
    long double C = 0.0L;
    long double S = (1 - ((m % 2 == 0) ? 1 : -1)) / ml;
    long double pip = 1.0L;  // pi^p
    const long double msign = (m % 2 == 0) ? 1.0L : -1.0L;
    for (int p = 1; p <= 2 * q; ++p) {
        pip *= kPiL;
        const long double Cn = -(static_cast<long double>(p) / ml) * S;
        const long double Sn = -pip * msign / ml + (static_cast<long double>(p) / ml) * C;
        C = Cn;
        S = Sn;
    }
    long double scale = 1.0L;
    for (int i = 0; i < 2 * q; ++i)
        scale *= kPiL;
    return 2.0L * C / scale;
}

}  // namespace

double BandlimitedSignal::derivative_norm(int q) const {
    if (q < 0)
        throw InvalidInput("derivative_norm: order must be nonnegative");
    if (q == 0)
        return l2_norm();
    // ||f^(q)||^2 = sigma^(2q-1)/2 * sum_m a_m I_q(m), a_m the coefficient
    // autocorrelation; follows from Parseval on the band with theta = 2 pi^2 w / sigma.
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(coeffs_.size());
    long double total = 0.0L;
    for (std::ptrdiff_t m = -(n - 1); m < n; ++m) {
        long double a = 0.0L;
        for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(0, -m);
             i < std::min(n, n - m); ++i)
            a += static_cast<long double>(coeffs_[i]) * coeffs_[i + m];
        total += a * band_moment(q, static_cast<int>(std::abs(m)));
    }
    long double sp = 1.0L;
    for (int i = 0; i < 2 * q - 1; ++i)
        sp *= sigma_;
    return std::sqrt(std::max(0.0, static_cast<double>(sp / 2.0L * total)));
}

GridFunction BandlimitedSignal::render(double a, double b, std::size_t intervals, int l) const {
    GridFunction g = GridFunction::zeros(a, b, intervals);
    const KernelDerivativeTable table(sigma_);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.x(i);
        long double sum = 0.0L;
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            sum += static_cast<long double>(coeffs_[j]) * table(l, x - node(j));
        g[i] = static_cast<double>(sum);
    }
    return g;
}

double BandlimitedSignal::tail_mass_bound(double dist) const {
    // |f(x)| <= sum|c_n| / (sigma * d) beyond distance d from the nodes, so the
    // two-sided tail mass is at most 2 (sum|c_n|)^2 / (sigma^2 * dist).
    long double abs_sum = 0.0L;
    for (double c : coeffs_)
        abs_sum += std::abs(c);
    return static_cast<double>(2.0L * abs_sum * abs_sum / (sigma_ * sigma_ * dist));
}

double bernstein_ratio(const BandlimitedSignal& f, int k, const BernsteinOptions& options) {
    if (k < 1)
        throw InvalidInput("bernstein_ratio: k must be >= 1");
    const double denom2 = f.l2_norm() * f.l2_norm();
    const double tail = f.tail_mass_bound(options.window_margin);
    if (tail > options.tail_tolerance * denom2)
        throw WindowError("bernstein_ratio: certified tail mass " + std::to_string(tail) +
                          " exceeds tolerance; widen the window margin");
    const double a = f.node_min() - options.window_margin;
    const double b = f.node_max() + options.window_margin;
    const double hmax = kPi / (options.oversampling * f.sigma());
    const auto intervals = static_cast<std::size_t>(std::ceil((b - a) / hmax));
    const GridFunction dk = f.render(a, b, intervals, k);
    return grid_norm(dk, QuadratureRule::trapezoid) /
           (std::pow(f.sigma(), k) * f.l2_norm());
}

}  // namespace bandlim
