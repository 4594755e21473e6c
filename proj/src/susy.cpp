#include "cesolve/susy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cesolve/errors.hpp"
#include "cesolve/wavefunction.hpp"

namespace cesolve {

std::vector<double> SuperpotentialSpec::node_x() const {
    std::vector<double> xs;
    xs.reserve(g.size());
    for (double gi : g)
        xs.push_back(node_position(-1.0 / gi));
    return xs;
}

namespace {

bool near_any(const std::vector<double>& nodes, double x, double radius) {
    return std::any_of(nodes.begin(), nodes.end(),
                       [&](double xn) { return std::abs(x - xn) < radius; });
}

} // namespace

WValue eval_superpotential(const SuperpotentialSpec& spec, double x) {
    const double z = z_of_x(x);
    const double iz = 1.0 / z;
    double W = spec.constant_term + spec.inv_z_coeff * iz + spec.inv_z2_coeff * iz * iz;
    double dWdz = -spec.inv_z_coeff * iz * iz - 2.0 * spec.inv_z2_coeff * iz * iz * iz;
    if (spec.include_sum) {
        for (double g : spec.g) {
            const double h = g * g - 1.0;
            const double u = 1.0 + g * z;
            W += h / u;
            dWdz -= h * g / (u * u);
        }
    }
    bool singular = false;
    if (spec.include_sum && !spec.g.empty())
        singular = near_any(spec.node_x(), x, singular_radius);
    return {W, dWdz * dz_of_x(x), singular};
}

SuperpotentialSpec ground_superpotential(const DkvParams& p, const BoundState& state0) {
    if (state0.n != 0)
        throw InvalidParameter("ground superpotential needs the n = 0 level");
    SuperpotentialSpec spec;
    spec.n = 0;
    spec.B1 = 0.5 * (state0.alpha - state0.beta);
    spec.C0 = -0.5 * (state0.alpha + state0.beta + 1.0);
    spec.C0_prime = -spec.C0;
    spec.constant_term = spec.C0_prime;
    spec.inv_z_coeff = spec.B1;
    (void)p;
    return spec;
}

SuperpotentialSpec excited_superpotential(const DkvParams& p, const BoundState& state,
                                          const std::vector<double>& roots) {
    if (static_cast<int>(roots.size()) != state.n)
        throw InvalidParameter("excited superpotential needs exactly n node roots");
    if (state.n == 0)
        return ground_superpotential(p, state);
    SuperpotentialSpec spec;
    spec.n = state.n;
    spec.B1 = 0.5 * (state.alpha - state.beta);
    spec.C0_prime = 0.5 * (state.alpha + state.beta + 1.0) + state.n;
    spec.C0 = state.n - spec.C0_prime;
    for (double c : roots)
        spec.g.push_back(-1.0 / c);
    spec.constant_term = spec.C0_prime;
    spec.inv_z_coeff = spec.B1 - std::accumulate(spec.g.begin(), spec.g.end(), 0.0);
    return spec;
}

SuperpotentialSpec without_sum(const SuperpotentialSpec& spec) {
    SuperpotentialSpec w0 = spec;
    w0.include_sum = false;
    w0.constant_term = -spec.C0;
    w0.inv_z_coeff = spec.B1;
    return w0;
}

double susy_residual(const SuperpotentialSpec& spec, const DkvParams& p, double E,
                     const Grid& grid, double node_mask) {
    const std::vector<double> nodes = spec.node_x();
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        if (near_any(nodes, x, node_mask))
            continue;
        const WValue w = eval_superpotential(spec, x);
        const double r = w.W * w.W - w.dW - eval_dkv(p, DkvForm::V1, x) + E;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double AlgebraicResiduals::max_abs() const {
    double m = std::max({std::abs(inv_z), std::abs(inv_z2), std::abs(constant)});
    for (double r : pole)
        m = std::max(m, std::abs(r));
    return m;
}

AlgebraicResiduals algebraic_residuals(const SuperpotentialSpec& spec, const DkvParams& p,
                                       double E) {
    const auto& g = spec.g;
    const double sum_g = std::accumulate(g.begin(), g.end(), 0.0);
    double sum_h = 0.0, sum_gh = 0.0;
    for (double gi : g) {
        sum_h += gi * gi - 1.0;
        sum_gh += gi * (gi * gi - 1.0);
    }
    const double K = spec.B1 - sum_g;
    const double C = spec.C0_prime;

    AlgebraicResiduals r{};
    for (std::size_t i = 0; i < g.size(); ++i) {
        double cross = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j)
            if (j != i)
                cross += (g[j] * g[j] - 1.0) * g[i] / (g[i] - g[j]);
        r.pole.push_back(-2.0 * K * g[i] - g[i] * g[i] + 2.0 * C - (g[i] * g[i] + 1.0) +
                         2.0 * cross);
    }
    r.inv_z = 2.0 * K * C + 2.0 * K * sum_h - K + 2.0 * sum_gh + p.B();
    r.inv_z2 = K * K - C - sum_h + 1.0 - p.A();
    r.constant = C * C + E;
    return r;
}

PartnerSample partner_potential(const SuperpotentialSpec& spec, const Grid& grid) {
    PartnerSample out;
    const std::vector<double> nodes = spec.include_sum ? spec.node_x() : std::vector<double>{};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        const WValue w = eval_superpotential(spec, x);
        out.x.push_back(x);
        out.V_minus.push_back(w.W * w.W - w.dW);
        out.V_plus.push_back(w.W * w.W + w.dW);
        out.singular.push_back(near_any(nodes, x, default_node_mask));
    }
    return out;
}

} // namespace cesolve
