#pragma once

#include <vector>

#include "cesolve/grid.hpp"
#include "cesolve/jacobi.hpp"
#include "cesolve/potential.hpp"
#include "cesolve/spectrum.hpp"

namespace cesolve {

JacobiSpec jacobi_parameters(const BoundState& state);

/// sign and log|psi| of psi(x) = z^{1/2} (z+1)^{beta/2} (z-1)^{alpha/2} P_n^{(alpha,beta)}(z).
struct LogValue {
    double sign;
    double log_abs;
};

LogValue psi_log_eval(const BoundState& state, double x);

/// Unnormalized psi(x). May over/underflow for extreme parameters; prefer
/// psi_log_eval or WavefunctionEval in that case.
double psi_eval(const BoundState& state, double x);

/// r-space Jacobi solution chi(r) of U1 with z = coth r (no normalization).
double chi_eval(const BoundState& state, double r);

/// x-image of a polynomial root c > 1: x = -1/2 ln(c^2 - 1).
double node_position(double c);

/// Normalized wavefunction on a grid, int |psi|^2 dx = 1 (composite Simpson).
class WavefunctionEval {
public:
    WavefunctionEval(const BoundState& state, const Grid& grid);

    const BoundState& state() const { return state_; }
    const Grid& grid() const { return grid_; }
    double log_norm() const { return log_norm_; }

    double operator()(double x) const;
    const std::vector<double>& samples() const { return samples_; }

private:
    BoundState state_;
    Grid grid_;
    double log_norm_;
    std::vector<double> samples_;
};

/// Normalization constant N with int |psi/N|^2 dx = 1 on the grid, returned as log N.
double normalize(const BoundState& state, const Grid& grid);

struct NodeCount {
    int count;
    bool near_boundary;  ///< a sign change within two cells of either end
};

NodeCount node_count(const BoundState& state, const Grid& grid);
/// Strict sign changes of a sampled function (zeros are skipped).
NodeCount count_sign_changes(const std::vector<double>& f);

} // namespace cesolve
