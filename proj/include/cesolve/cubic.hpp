#pragma once

#include <array>
#include <complex>

namespace cesolve {

/// c3 t^3 + c2 t^2 + c1 t + c0.
struct CubicCoeffs {
    double c3;
    double c2;
    double c1;
    double c0;

    std::complex<double> operator()(std::complex<double> t) const {
        return ((c3 * t + c2) * t + c1) * t + c0;
    }
};

/// Roots sorted by real part (then imaginary part). Closed form picked by the
/// sign of the discriminant (trigonometric for three real roots, Cardano
/// otherwise), followed by Newton polishing on the original polynomial.
/// Roots whose imaginary part is below `real_tolerance` after polishing are
/// reported as exactly real.
std::array<std::complex<double>, 3> solve_cubic(const CubicCoeffs& c);

inline constexpr double real_tolerance = 1e-10;

/// |p(t)| / sum_k |c_k| |t|^k.
double backward_error(const CubicCoeffs& c, std::complex<double> t);

} // namespace cesolve
