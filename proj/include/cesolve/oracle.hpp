#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cesolve/grid.hpp"
#include "cesolve/potential.hpp"
#include "cesolve/spectrum.hpp"

namespace cesolve {

enum class Scheme { Central3, Numerov };

/// Discretized -d^2/dx^2 + V on the interior grid points with Dirichlet ends.
///
/// Central3 is the standard symmetric tridiagonal matrix (diag 2/h^2 + V_i,
/// off-diagonal -1/h^2). For Numerov the generalized problem is handled
/// through the energy-dependent symmetric tridiagonal
///   T(E) = -D2/h^2 + diag(u_i / (1 - h^2 u_i / 12)),  u_i = V_i - E,
/// which is singular exactly at the Numerov eigenvalues (w = (1 - h^2 u/12) psi).
/// Its Sturm count is nondecreasing in E and counts eigenvalues below E.
class DiscreteHamiltonian {
public:
    DiscreteHamiltonian(std::vector<double> potential, double h, Scheme scheme);

    std::size_t dimension() const { return V_.size(); }
    double h() const { return h_; }
    Scheme scheme() const { return scheme_; }
    const std::vector<double>& potential() const { return V_; }
    double off_diagonal() const { return -1.0 / (h_ * h_); }

    /// Diagonal of T(E) (for Central3: diag(H) - E).
    std::vector<double> shifted_diagonal(double E) const;
    /// Number of eigenvalues strictly below E.
    std::size_t count_below(double E) const;

    /// Eigenvector in the psi representation for an (accurate) eigenvalue E.
    std::vector<double> eigenvector(double E) const;

private:
    std::vector<double> V_;
    double h_;
    Scheme scheme_;
};

inline constexpr double max_potential_magnitude = 1e12;

/// Samples V on the interior points; throws InvalidParameter if |V| > 1e12 or V not finite.
DiscreteHamiltonian build_hamiltonian(const std::function<double(double)>& V, const Grid& grid,
                                      Scheme scheme);

/// Same, from potential values already sampled on every grid point (ends included).
DiscreteHamiltonian build_hamiltonian(const std::vector<double>& sampled, const Grid& grid,
                                      Scheme scheme);

struct Eigenpair {
    double energy;
    std::vector<double> vector;  ///< full-grid samples (zeros at the ends), sum psi^2 h = 1
};

/// k algebraically smallest eigenpairs (1 <= k <= 10) by Sturm bisection and inverse
/// iteration; sign fixed so the first component above 1e-8 max|psi| is positive.
std::vector<Eigenpair> lowest_eigenpairs(const DiscreteHamiltonian& H, std::size_t k);

/// Eigenvalues only, for k up to the dimension.
std::vector<double> lowest_eigenvalues(const DiscreteHamiltonian& H, std::size_t k);

struct OracleTolerances {
    double energy = 1e-4;
    double overlap = 1e-6;  ///< overlap must exceed 1 - overlap
};

struct LevelCheck {
    int n;
    double E_analytic;
    double E_oracle;  ///< NaN if the oracle has no level with this index below the edge
    double delta_E;
    double overlap;
    int nodes_analytic;
    bool normalizable;  ///< a > 1/2 and alpha > 0
    bool passed;
};

struct SpectrumReport {
    double continuum_edge;  ///< min(0, A - B - 3/4)
    std::size_t oracle_count;
    std::size_t analytic_count;
    bool count_ok;
    std::vector<LevelCheck> levels;
    bool passed;
};

/// Default oracle grid for the DKV potential: x in [-20, 60], h = 5e-3.
Grid default_dkv_grid();
inline constexpr double default_h = 5e-3;
inline constexpr double default_x_min = -20.0;
inline constexpr double default_x_max = 60.0;

SpectrumReport verify_spectrum(const DkvParams& p, const std::vector<BoundState>& analytic,
                               const Grid& grid, const OracleTolerances& tol = {},
                               Scheme scheme = Scheme::Numerov);

} // namespace cesolve
