#pragma once

#include <optional>
#include <vector>

#include "cesolve/grid.hpp"
#include "cesolve/transform.hpp"

namespace cesolve {

/// Six-parameter Natanzon family. f, h0, h1 set the potential shape; a, c0, c1
/// define R(z) = a z(z-1) + c0 (1-z) + c1 z and with it the map z' = 2z(1-z)/sqrt(R).
struct NatanzonParams {
    double f;
    double h0;
    double h1;
    double a;
    double c0;
    double c1;

    double R(double z) const { return a * z * (z - 1.0) + c0 * (1.0 - z) + c1 * z; }
    double dR(double z) const { return a * (2.0 * z - 1.0) - c0 + c1; }
};

/// Throws InvalidParameter unless R > 0 on [0, 1].
void check_positive_R(const NatanzonParams& np);

/// phi(z) = 2z(1-z)/sqrt(R) with analytic phi_z, phi_zz; z(x) left empty
/// (the map is only known through natanzon_z).
ZMap natanzon_law(const NatanzonParams& np);

struct SampledZ {
    std::vector<double> x;
    std::vector<double> z;
    double x0;          ///< anchor, z(x0) = 1/2
    double residual;    ///< max |x_i - x0 - X(z_i)| * z'(x_i) with X from quadrature
    int steps;          ///< accepted integrator steps
};

/// Integrates the map with a Dormand-Prince 5(4) adaptive scheme from z(x0) = 1/2
/// (logit variable w = ln(z/(1-z)), dw/dx = 2/sqrt(R)) and samples it on the grid.
SampledZ natanzon_z(const NatanzonParams& np, const Grid& grid, double x0 = 0.0);

/// x(z) - x0 = int_{1/2}^{z} sqrt(R(u)) / (2u(1-u)) du, by Gauss-Legendre quadrature in w.
double natanzon_x_of_z(const NatanzonParams& np, double z, double x0 = 0.0);

/// V as a function of z: Schwarzian terms from phi plus [f z(z-1) + h0(1-z) + h1 z]/R.
double natanzon_potential_z(const NatanzonParams& np, double z);
std::vector<double> natanzon_potential(const NatanzonParams& np, const SampledZ& map);

/// The three radicals alpha = sqrt(f+1-aE), beta = sqrt(h0+1-c0 E), delta = sqrt(h1+1-c1 E);
/// empty when any radicand is negative.
struct NatanzonExponents {
    double alpha;
    double beta;
    double delta;
};

std::optional<NatanzonExponents> natanzon_exponents(const NatanzonParams& np, double E);

/// alpha - beta - delta - (2n+1); empty outside the real domain.
std::optional<double> energy_condition_mismatch(const NatanzonParams& np, int n, double E);

/// Largest E with all radicands nonnegative.
double natanzon_threshold(const NatanzonParams& np);

struct NatanzonLevel {
    int n;
    double E;
    NatanzonExponents exps;
    double residual;  ///< |2n+1 - (alpha - beta - delta)|
};

/// Roots of the energy condition for n = 0..n_max, found by geometric downward
/// scan from the threshold and bisection; stops at the first n without a bracket.
std::vector<NatanzonLevel> natanzon_energies(const NatanzonParams& np, int n_max);

/// R^{1/4} (1-z)^{delta/2} z^{beta/2} F(-n, alpha-n; beta+1; z), unnormalized.
double natanzon_psi_z(const NatanzonParams& np, const NatanzonLevel& level, double z);

/// Terminating 2F1(-n, b; c; z).
double hypergeometric_terminating(int n, double b, double c, double z);

} // namespace cesolve
