#include "cesolve/potential.hpp"

#include <algorithm>
#include <cmath>

#include "cesolve/errors.hpp"
#include "cesolve/spectrum.hpp"

namespace cesolve {

DkvParams::DkvParams(double A, double B) : A_(A), B_(B) {
    if (!std::isfinite(A) || !std::isfinite(B))
        throw InvalidParameter("couplings must be finite");
    if (!(0.5 * B > 0.25))
        throw InvalidParameter("b = B/2 must exceed 1/4");
}

GeneralCouplings couplings_of(const DkvParams& p, DkvForm which) {
    if (which == DkvForm::V1)
        return {0.0, -p.B(), p.A(), DkvParams::fixed_g3};
    return {-p.B(), 0.0, p.A(), DkvParams::fixed_g3};
}

double z_of_x(double x) {
    if (x >= 0.0)
        return std::sqrt(1.0 + std::exp(-2.0 * x));
    return std::exp(-x) * std::sqrt(1.0 + std::exp(2.0 * x));
}

double dz_of_x(double x) {
    const double z = z_of_x(x);
    if (x >= 0.0)
        return -std::exp(-2.0 * x) / z;
    return 1.0 / z - z;
}

double log_z(double x) {
    if (x >= 0.0)
        return 0.5 * std::log1p(std::exp(-2.0 * x));
    return -x + 0.5 * std::log1p(std::exp(2.0 * x));
}

double log_z_minus_1(double x) {
    // z - 1 = (z^2 - 1)/(z + 1) = e^{-2x}/(z + 1)
    return -2.0 * x - std::log1p(z_of_x(x));
}

namespace {

// e^x z(x) = (1 + e^{2x})^{1/2}
double exp_x_times_z(double x) {
    if (x <= 0.0)
        return std::sqrt(1.0 + std::exp(2.0 * x));
    return std::exp(x) * std::sqrt(1.0 + std::exp(-2.0 * x));
}

} // namespace

double eval_general(const GeneralCouplings& g, double x) {
    const double iz = 1.0 / z_of_x(x);
    const double iz2 = iz * iz;
    double v = g.g1 * iz + g.g2 * iz2 + g.g3 * iz2 * iz2;
    if (g.g0 != 0.0)
        v += g.g0 / exp_x_times_z(x);
    return v;
}

double eval_dkv(const DkvParams& p, DkvForm which, double x) {
    return eval_general(couplings_of(p, which), x);
}

MirrorMap mirror_params(const DkvParams& p) {
    return {-p.A() + 1.5, p.B(), p.A() - 0.75};
}

SourceValue eval_source(const SourceParams& sp, int n, double r) {
    if (!(r > 0.0))
        throw InvalidParameter("source potentials are singular at r <= 0");
    const double sh = std::sinh(r);
    const double inv_sh2 = 1.0 / (sh * sh);
    const double coth = 1.0 / std::tanh(r);
    if (sp.kind == SourceKind::U1) {
        const double t = sp.a + n;
        if (t == 0.0)
            throw InvalidParameter("U1 energy undefined for a + n = 0");
        return {-2.0 * sp.b * coth + sp.a * (sp.a - 1.0) * inv_sh2, t * t + sp.b * sp.b / (t * t)};
    }
    const double cosh_over_sh2 = coth / sh;
    const double v = -(2.0 * sp.a + 1.0) * sp.b * cosh_over_sh2 +
                     (sp.a * (sp.a + 1.0) + sp.b * sp.b) * inv_sh2;
    return {v, (sp.a - n) * (sp.a - n)};
}

double liouville_residual(const DkvParams& p, const BoundState& state, const Grid& r_grid,
                          double r_cutoff, double delta_u, double delta_kappa2) {
    const SourceParams sp{state.a, p.b(), SourceKind::U1};
    const double k2 = -state.E;
    double worst = 0.0;
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        const double r = r_grid[i];
        if (r < r_cutoff)
            continue;
        const auto [U, kappa2] = eval_source(sp, state.n, r);
        // x = ln sinh r: x' = coth r, x'' = -csch^2 r, x''' = 2 csch^2 r coth r
        const double coth = 1.0 / std::tanh(r);
        const double sh = std::sinh(r);
        const double csch2 = 1.0 / (sh * sh);
        const double d1 = coth;
        const double d2 = -csch2;
        const double d3 = 2.0 * csch2 * coth;
        const double x = std::log(sh);
        const double V = eval_dkv(p, DkvForm::V1, x);
        const double rhs = d1 * d1 * (V + k2) + 0.75 * (d2 / d1) * (d2 / d1) - 0.5 * d3 / d1;
        const double lhs = U + delta_u + kappa2 + delta_kappa2;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

} // namespace cesolve
