#pragma once

#include <cstddef>
#include <vector>

namespace cesolve {

/// Uniform mesh x_i = x_min + i*h, i = 0..n_points-1. The stored step is
/// adjusted so that the last point lands exactly on x_max.
class Grid {
public:
    Grid(double x_min, double x_max, double h);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    double h() const { return h_; }
    std::size_t size() const { return n_; }
    double operator[](std::size_t i) const { return x_min_ + static_cast<double>(i) * h_; }

    std::vector<double> points() const;

    static constexpr std::size_t min_points = 64;

private:
    double x_min_;
    double x_max_;
    double h_;
    std::size_t n_;
};

/// Composite Simpson rule over samples on a uniform grid; falls back to the
/// trapezoid rule on the last interval for an even sample count.
double simpson(const std::vector<double>& f, double h);

} // namespace cesolve
