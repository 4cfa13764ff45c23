#include "bandlim/grid.hpp"

#include <cmath>

#include "bandlim/errors.hpp"

namespace bandlim {

GridFunction::GridFunction(double a, double b, std::vector<double> values)
    : a_(a), b_(b), values_(std::move(values)) {
    if (!(b > a))
        throw InvalidInput("grid window must satisfy a < b");
    if (values_.size() < 2)
        throw InvalidInput("grid needs at least two values");
    h_ = (b_ - a_) / static_cast<double>(values_.size() - 1);
}

GridFunction GridFunction::zeros(double a, double b, std::size_t intervals) {
    if (intervals < 1)
        throw InvalidInput("grid needs at least one interval");
    return GridFunction(a, b, std::vector<double>(intervals + 1, 0.0));
}

bool GridFunction::same_grid(const GridFunction& other, double tol) const {
    return values_.size() == other.values_.size() &&
           std::abs(a_ - other.a_) <= tol && std::abs(b_ - other.b_) <= tol;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
    if (!same_grid(other))
        throw IncompatibleGrid("grid mismatch in +=");
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
    if (!same_grid(other))
        throw IncompatibleGrid("grid mismatch in -=");
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] -= other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(double s) {
    for (double& v : values_)
        v *= s;
    return *this;
}

GridFunction operator+(GridFunction lhs, const GridFunction& rhs) { return lhs += rhs; }
GridFunction operator-(GridFunction lhs, const GridFunction& rhs) { return lhs -= rhs; }
GridFunction operator*(double s, GridFunction g) { return g *= s; }

double quadrature(std::span<const double> values, double h, QuadratureRule rule) {
    const std::size_t n = values.size() - 1;  // interval count
    if (rule == QuadratureRule::trapezoid || n < 2) {
        double s = 0.5 * (values.front() + values.back());
        for (std::size_t i = 1; i < n; ++i)
            s += values[i];
        return s * h;
    }
    // composite Simpson; odd interval count handled with a 3/8 rule on the tail
    std::size_t even_end = (n % 2 == 0) ? n : n - 3;
    double s = 0.0;
    for (std::size_t i = 0; i + 2 <= even_end; i += 2)
        s += (values[i] + 4.0 * values[i + 1] + values[i + 2]) * (h / 3.0);
    if (n % 2 != 0) {
        if (n >= 3) {
            s += (values[n - 3] + 3.0 * values[n - 2] + 3.0 * values[n - 1] + values[n]) *
                 (3.0 * h / 8.0);
        } else {
            s += 0.5 * h * (values[n - 1] + values[n]);
        }
    }
    return s;
}

double grid_inner(const GridFunction& g1, const GridFunction& g2, QuadratureRule rule) {
    if (!g1.same_grid(g2))
        throw IncompatibleGrid("grid_inner: incompatible grids");
    std::vector<double> prod(g1.size());
    for (std::size_t i = 0; i < prod.size(); ++i)
        prod[i] = g1[i] * g2[i];
    return quadrature(prod, g1.h(), rule);
}

double grid_norm(const GridFunction& g, QuadratureRule rule) {
    std::vector<double> sq(g.size());
    for (std::size_t i = 0; i < sq.size(); ++i)
        sq[i] = g[i] * g[i];
    return std::sqrt(quadrature(sq, g.h(), rule));
}

}  // namespace bandlim
