#include "cesolve/transform.hpp"

#include <algorithm>
#include <cmath>

#include "cesolve/errors.hpp"
#include "cesolve/potential.hpp"

namespace cesolve {

ZMap::Derivatives ZMap::at(double x) const {
    const double zz = z(x);
    const double f = phi(zz), fz = dphi(zz), fzz = d2phi(zz);
    return {zz, f, f * fz, f * (fz * fz + f * fzz)};
}

ZMap dkv_map() {
    return {
        [](double x) { return z_of_x(x); },
        [](double z) { return 1.0 / z - z; },
        [](double z) { return -1.0 / (z * z) - 1.0; },
        [](double z) { return 2.0 / (z * z * z); },
    };
}

SecondOrderCoeffs jacobi_coeffs(double alpha, double beta, int n) {
    // Q = -(alpha+1)/(1-z) + (beta+1)/(1+z)
    return {
        [=](double z) { return -(alpha + 1.0) / (1.0 - z) + (beta + 1.0) / (1.0 + z); },
        [=](double z) {
            return -(alpha + 1.0) / ((1.0 - z) * (1.0 - z)) - (beta + 1.0) / ((1.0 + z) * (1.0 + z));
        },
        [=](double z) { return n * (n + alpha + beta + 1.0) / (1.0 - z * z); },
    };
}

double master_rhs(const ZMap& map, const SecondOrderCoeffs& ode, double x) {
    const auto d = map.at(x);
    const double Q = ode.Q(d.z);
    const double ratio = d.d2 / d.d1;
    return d.d3 / (2.0 * d.d1) - 0.75 * ratio * ratio +
           d.d1 * d.d1 * (ode.R(d.z) - 0.5 * ode.dQ(d.z) - 0.25 * Q * Q);
}

double master_residual(const ZMap& map, const SecondOrderCoeffs& ode, double E,
                       const std::function<double(double)>& V, const Grid& grid) {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        worst = std::max(worst, std::abs(master_rhs(map, ode, x) - (E - V(x))));
    }
    return worst;
}

double jacobi_master_eval(double alpha, double beta, int n, const ZMap& map, double x) {
    const auto d = map.at(x);
    const double z = d.z;
    const double w = 1.0 - z * z;
    const double zp2 = d.d1 * d.d1;
    const double ratio = d.d2 / d.d1;
    const double apb = alpha + beta;
    const double bma = beta - alpha;
    return d.d3 / (2.0 * d.d1) - 0.75 * ratio * ratio + zp2 / w * n * (n + apb + 1.0) +
           zp2 / (w * w) * (0.5 * (apb + 2.0) - 0.25 * bma * bma) +
           zp2 * z / (w * w) * 0.5 * bma * apb +
           zp2 * z * z / (w * w) * (0.25 - 0.25 * (apb + 1.0) * (apb + 1.0));
}

namespace {

double piv_z2_coeff(int n, double alpha, double beta) {
    const double m = n + 0.5 * (alpha + beta + 1.0);
    const double h = 0.5 * (alpha + beta);
    return m * m - h * h - 0.75 - 0.25 * (beta - alpha) * (beta - alpha);
}

} // namespace

double piv_master_eval(double alpha, double beta, int n, double z) {
    const double iz = 1.0 / z;
    const double iz2 = iz * iz;
    return piv_energy(n, alpha, beta) + piv_coupling_B(alpha, beta) * iz + 0.75 * iz2 * iz2 +
           piv_z2_coeff(n, alpha, beta) * iz2;
}

double piv_energy(int n, double alpha, double beta) {
    const double m = n + 0.5 * (alpha + beta + 1.0);
    return -m * m;
}

double piv_coupling_A(int n, double alpha, double beta) { return -piv_z2_coeff(n, alpha, beta); }

double piv_coupling_B(double alpha, double beta) { return 0.5 * (beta - alpha) * (beta + alpha); }

double class_combination(TransformKind kind, double z, double dz) {
    const double w = 1.0 - z * z;
    switch (kind) {
    case TransformKind::PI: return dz * dz / w;
    case TransformKind::PII: return dz * dz / (w * w);
    case TransformKind::PIII: return z * dz * dz / (w * w);
    case TransformKind::PIV: return z * z * dz * dz / (w * w);
    }
    return 0.0;
}

namespace {

// sqrt(C) x = atanh(q) - atan(q), q = sqrt(z) in (0, 1).
double invert_piii(double target) {
    if (!(target > 0.0))
        throw InvalidParameter("PIII map defined for sqrt(C) x > 0");
    auto X = [](double q) { return std::atanh(q) - std::atan(q); };
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (X(mid) < target ? lo : hi) = mid;
        if (hi - lo < 1e-17)
            break;
    }
    double q = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        const double q2 = q * q;
        const double dX = 2.0 * q2 / (1.0 - q2 * q2);
        const double next = q - (X(q) - target) / dX;
        if (!(next > 0.0 && next < 1.0))
            break;
        q = next;
    }
    return q * q;
}

} // namespace

ZMap class_map(const TransformClass& tc) {
    if (!(tc.C > 0.0))
        throw InvalidParameter("class constant C must be positive");
    const double k = tc.sqrt_sign * std::sqrt(tc.C);
    switch (tc.kind) {
    case TransformKind::PI:
        return {
            [=](double x) { return std::sin(k * x); },
            [=](double z) { return k * std::sqrt(1.0 - z * z); },
            [=](double z) { return -k * z / std::sqrt(1.0 - z * z); },
            [=](double z) { return -k / std::pow(1.0 - z * z, 1.5); },
        };
    case TransformKind::PII:
        return {
            [=](double x) { return std::tanh(k * x); },
            [=](double z) { return k * (1.0 - z * z); },
            [=](double z) { return -2.0 * k * z; },
            [=](double) { return -2.0 * k; },
        };
    case TransformKind::PIII:
        return {
            [=](double x) { return invert_piii(k * x); },
            [=](double z) { return k * (1.0 - z * z) / std::sqrt(z); },
            [=](double z) { return k * (-2.0 * std::sqrt(z) - (1.0 - z * z) / (2.0 * std::pow(z, 1.5))); },
            [=](double z) { return 0.75 * k * (1.0 - z * z) / std::pow(z, 2.5); },
        };
    case TransformKind::PIV:
        return {
            [=](double x) { return std::sqrt(1.0 + std::exp(2.0 * k * x + tc.D)); },
            [=](double z) { return k * (z * z - 1.0) / z; },
            [=](double z) { return k * (1.0 + 1.0 / (z * z)); },
            [=](double z) { return -2.0 * k / (z * z * z); },
        };
    }
    throw InvalidParameter("unknown transformation class");
}

double class_ode_residual(const TransformClass& tc, const ZMap& map, const Grid& grid) {
    return class_ode_residual(
        tc, map.z, [&](double x) { return map.phi(map.z(x)); }, grid);
}

double class_ode_residual(const TransformClass& tc, const std::function<double(double)>& z,
                          const std::function<double(double)>& dz, const Grid& grid) {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        worst = std::max(worst, std::abs(class_combination(tc.kind, z(x), dz(x)) - tc.C));
    }
    return worst;
}

} // namespace cesolve
