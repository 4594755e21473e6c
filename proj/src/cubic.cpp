#include "cesolve/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cesolve/errors.hpp"

namespace cesolve {

namespace {

using cplx = std::complex<double>;

double scale_at(const CubicCoeffs& c, double r) {
    return std::abs(c.c3) * r * r * r + std::abs(c.c2) * r * r + std::abs(c.c1) * r +
           std::abs(c.c0);
}

cplx polish(const CubicCoeffs& c, cplx t) {
    // Newton with acceptance only on strict improvement, so near-multiple roots
    // cannot be pushed away from the closed-form estimate.
    double best = std::abs(c(t));
    for (int it = 0; it < 8 && best > 0.0; ++it) {
        const cplx dp = (3.0 * c.c3 * t + 2.0 * c.c2) * t + c.c1;
        if (dp == cplx(0.0))
            break;
        const cplx next = t - c(t) / dp;
        const double val = std::abs(c(next));
        if (!(val < best))
            break;
        t = next;
        best = val;
    }
    return t;
}

} // namespace

double backward_error(const CubicCoeffs& c, std::complex<double> t) {
    const double s = scale_at(c, std::abs(t));
    return s == 0.0 ? 0.0 : std::abs(c(t)) / s;
}

std::array<std::complex<double>, 3> solve_cubic(const CubicCoeffs& c) {
    if (c.c3 == 0.0)
        throw InvalidParameter("leading cubic coefficient is zero");
    const double p2 = c.c2 / c.c3, p1 = c.c1 / c.c3, p0 = c.c0 / c.c3;
    // t = y - p2/3:  y^3 + p y + q = 0
    const double shift = p2 / 3.0;
    const double p = p1 - p2 * p2 / 3.0;
    const double q = 2.0 * p2 * p2 * p2 / 27.0 - p2 * p1 / 3.0 + p0;
    const double disc = -(4.0 * p * p * p + 27.0 * q * q);

    std::array<cplx, 3> roots;
    if (p == 0.0 && q == 0.0) {
        roots = {cplx(-shift), cplx(-shift), cplx(-shift)};
    } else if (disc >= 0.0) {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots[k] = cplx(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - shift);
    } else {
        const double sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        const double u = std::cbrt(-q / 2.0 + sq);
        const double v = std::cbrt(-q / 2.0 - sq);
        const double y = u + v;
        // remaining pair of y^2 + y*y1 + (y1^2 + p)
        const double re = -0.5 * y;
        const double im = 0.5 * std::sqrt(3.0) * std::abs(u - v);
        roots = {cplx(y - shift), cplx(re - shift, im), cplx(re - shift, -im)};
    }

    for (auto& r : roots) {
        r = polish(c, r);
        if (std::abs(r.imag()) < real_tolerance)
            r = cplx(r.real(), 0.0);
    }
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

} // namespace cesolve
