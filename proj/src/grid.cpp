#include "cesolve/grid.hpp"

#include <cmath>
#include <string>

#include "cesolve/errors.hpp"

namespace cesolve {

Grid::Grid(double x_min, double x_max, double h) : x_min_(x_min), x_max_(x_max) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw InvalidParameter("grid step must be positive");
    if (!(x_max > x_min))
        throw InvalidParameter("grid requires x_max > x_min");
    const double steps = std::round((x_max - x_min) / h);
    n_ = static_cast<std::size_t>(steps) + 1;
    if (n_ < min_points)
        throw InvalidParameter("grid needs at least " + std::to_string(min_points) + " points");
    h_ = (x_max - x_min) / steps;
}

std::vector<double> Grid::points() const {
    std::vector<double> xs(n_);
    for (std::size_t i = 0; i < n_; ++i)
        xs[i] = (*this)[i];
    xs.back() = x_max_;
    return xs;
}

double simpson(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 2)
        return 0.0;
    if (n == 2)
        return 0.5 * h * (f[0] + f[1]);
    // Simpson needs an even number of intervals.
    const std::size_t last = (n % 2 == 1) ? n - 1 : n - 2;
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i < last; ++i)
        (i % 2 == 1 ? odd : even) += f[i];
    double sum = h / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[last]);
    if (last != n - 1)
        sum += 0.5 * h * (f[n - 2] + f[n - 1]);
    return sum;
}

} // namespace cesolve
