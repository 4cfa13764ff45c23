#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bandlim {

enum class QuadratureRule { trapezoid, simpson };

/// Uniform-grid samples of a function on a window [a, b].
/// Stores (b-a)/h + 1 values at a, a+h, ..., b.
class GridFunction {
public:
    GridFunction(double a, double b, std::vector<double> values);

    static GridFunction zeros(double a, double b, std::size_t intervals);

    double a() const { return a_; }
    double b() const { return b_; }
    double h() const { return h_; }
    double length() const { return b_ - a_; }
    std::size_t intervals() const { return values_.size() - 1; }
    std::size_t size() const { return values_.size(); }
    double x(std::size_t i) const { return a_ + h_ * static_cast<double>(i); }

    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

    bool same_grid(const GridFunction& other, double tol = 1e-12) const;

    GridFunction& operator+=(const GridFunction& other);
    GridFunction& operator-=(const GridFunction& other);
    GridFunction& operator*=(double s);

private:
    double a_, b_, h_;
    std::vector<double> values_;
};

GridFunction operator+(GridFunction lhs, const GridFunction& rhs);
GridFunction operator-(GridFunction lhs, const GridFunction& rhs);
GridFunction operator*(double s, GridFunction g);

/// Composite quadrature of g1*g2 over [a, b]; grids must match.
double grid_inner(const GridFunction& g1, const GridFunction& g2,
                  QuadratureRule rule = QuadratureRule::trapezoid);

/// sqrt of the quadrature of |g|^2 over [a, b].
double grid_norm(const GridFunction& g, QuadratureRule rule = QuadratureRule::trapezoid);

/// Quadrature of a plain sample vector with step h.
double quadrature(std::span<const double> values, double h,
                  QuadratureRule rule = QuadratureRule::trapezoid);

}  // namespace bandlim
