#pragma once

#include <vector>

#include "cesolve/grid.hpp"
#include "cesolve/potential.hpp"
#include "cesolve/spectrum.hpp"

namespace cesolve {

/// W(z) = constant_term + inv_z_coeff/z + inv_z2_coeff/z^2 + sum_i (g_i^2 - 1)/(1 + g_i z)
/// with inv_z_coeff = B1 - sum g_i and constant_term = C0' = n - C0.
/// `include_sum = false` drops both the pole sum and the -sum g_i shift, which is the
/// bare ground-state form W0 = B1/z - 1/(2z^2) - C0.
struct SuperpotentialSpec {
    int n = 0;
    double B1 = 0.0;
    double C0 = 0.0;
    double C0_prime = 0.0;
    std::vector<double> g;
    double constant_term = 0.0;
    double inv_z_coeff = 0.0;
    double inv_z2_coeff = -0.5;
    bool include_sum = true;

    /// Node positions in x (images of the roots c_i = -1/g_i).
    std::vector<double> node_x() const;
};

struct WValue {
    double W;
    double dW;  ///< dW/dx
    bool singular;  ///< within singular_radius of a node
};

inline constexpr double singular_radius = 1e-6;
inline constexpr double default_node_mask = 1e-3;

WValue eval_superpotential(const SuperpotentialSpec& spec, double x);

SuperpotentialSpec ground_superpotential(const DkvParams& p, const BoundState& state0);
/// Singular superpotential -d/dx ln psi_n built from the Jacobi roots c_i (g_i = -1/c_i).
SuperpotentialSpec excited_superpotential(const DkvParams& p, const BoundState& state,
                                          const std::vector<double>& roots);
/// W0 with the level's B1 and C0 and without the sum term.
SuperpotentialSpec without_sum(const SuperpotentialSpec& spec);

/// max over grid (nodes masked) of |W^2 - W' - V1 + E|.
double susy_residual(const SuperpotentialSpec& spec, const DkvParams& p, double E,
                     const Grid& grid, double node_mask = default_node_mask);

/// Residuals of the coefficient system obtained by matching W^2 - W' = V1 - E
/// term by term: pole terms (one per i), 1/z, 1/z^2 and the constant.
struct AlgebraicResiduals {
    std::vector<double> pole;  ///< -2K g_i - g_i^2 + 2C' - (g_i^2+1) + 2 sum_{j!=i} (g_j^2-1) g_i/(g_i-g_j)
    double inv_z;              ///< 2KC' + 2K sum(g^2-1) - K + 2 sum g(g^2-1) + B
    double inv_z2;             ///< K^2 - C' - sum(g^2-1) + 1 - A
    double constant;           ///< C'^2 + E
    double max_abs() const;
};

AlgebraicResiduals algebraic_residuals(const SuperpotentialSpec& spec, const DkvParams& p,
                                       double E);

struct PartnerSample {
    std::vector<double> x;
    std::vector<double> V_minus;
    std::vector<double> V_plus;
    std::vector<bool> singular;
};

/// V_pm = W^2 pm W' sampled on the grid.
PartnerSample partner_potential(const SuperpotentialSpec& spec, const Grid& grid);

} // namespace cesolve
